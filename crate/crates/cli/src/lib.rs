//! Commands behind the `descent-kit` binary.
//!
//! Every command returns a [`Certificate`] whose `inputs` carry the command
//! name and its resolved arguments, so [`verify`] can re-run it and compare
//! step digests.

pub mod mwqt;
pub mod pi_check;
pub mod quintuple;
pub mod selmer;
pub mod verify;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use descent_kit::arith::{parse_rational, Rational};
use descent_kit::certificate::Certificate;
use descent_kit::ellq::{CertifyOptions, PointQ};
use descent_kit::ellqt::PruneMode;
use descent_kit::weierstrass::Point;

pub use mwqt::MwqtArgs;
pub use pi_check::PiCheckArgs;
pub use quintuple::QuintupleArgs;
pub use selmer::SelmerArgs;
pub use verify::{verify, VerifyReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Math(#[from] descent_kit::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

pub type Result<T> = std::result::Result<T, CliError>;

/// Bound used for the images of known points in H0: the 2-Selmer groups,
/// or certified Mordell-Weil images.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Selmer,
    Mw,
}

impl From<Mode> for PruneMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Selmer => PruneMode::Selmer,
            Mode::Mw => PruneMode::MordellWeil,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "command", content = "args", rename_all = "kebab-case")]
pub enum Command {
    Quintuple(QuintupleArgs),
    Mwqt(MwqtArgs),
    Selmer(SelmerArgs),
    PiCheck(PiCheckArgs),
}

impl Command {
    pub fn run(&self) -> Result<Certificate> {
        let mut cert = match self {
            Command::Quintuple(a) => quintuple::run(a)?,
            Command::Mwqt(a) => mwqt::run(a)?,
            Command::Selmer(a) => selmer::run(a)?,
            Command::PiCheck(a) => pi_check::run(a)?,
        };
        let echo = std::mem::take(&mut cert.inputs);
        let mut inputs = serde_json::to_value(self).expect("arguments serialize");
        inputs["echo"] = echo;
        cert.inputs = inputs;
        Ok(cert)
    }

    /// The command recorded in a certificate's inputs.
    pub fn from_inputs(inputs: &Value) -> Result<Self> {
        let tagged = json!({"command": inputs["command"], "args": inputs["args"]});
        serde_json::from_value(tagged).map_err(|e| CliError::Usage(format!("certificate inputs: {e}")))
    }

    pub fn summary(&self, cert: &Certificate) -> String {
        match self {
            Command::Quintuple(_) => quintuple::summary(cert),
            Command::Mwqt(_) => mwqt::summary(cert),
            Command::Selmer(_) => selmer::summary(cert),
            Command::PiCheck(_) => pi_check::summary(cert),
        }
    }
}

pub fn certify_options(search_bound: u64, saturation_bound: u64) -> CertifyOptions {
    CertifyOptions { search_bound, saturation_bound, ..CertifyOptions::default() }
}

pub fn parse_rationals(items: &[String]) -> Result<Vec<Rational>> {
    items.iter().map(|s| Ok(parse_rational(s)?)).collect()
}

/// `X;Y` or `infinity`.
pub fn parse_point_q(s: &str) -> Result<PointQ> {
    let s = s.trim();
    if s.eq_ignore_ascii_case("infinity") || s == "O" {
        return Ok(Point::Infinity);
    }
    let (x, y) = s
        .split_once(';')
        .ok_or_else(|| CliError::Usage(format!("point must look like X;Y: {s:?}")))?;
    Ok(Point::Affine { x: parse_rational(x)?, y: parse_rational(y)? })
}

fn str_of(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn join(v: &Value) -> String {
    v.as_array().map(|a| a.iter().map(str_of).collect::<Vec<_>>().join(", ")).unwrap_or_default()
}

fn verdict_line(cert: &Certificate) -> String {
    let tag = if cert.success() { "SUCCESS" } else { "FAILURE" };
    format!("{tag}: {}", cert.conclusion.verdict)
}
