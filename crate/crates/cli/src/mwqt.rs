//! `mwqt`: certify Mordell-Weil generators of a curve over Q(t).

use serde::{Deserialize, Serialize};

use descent_kit::certificate::Certificate;
use descent_kit::ellqt::presets::preset;
use descent_kit::ellqt::{certify_generators_qt, curve_qt, parse_point_qt, QtOptions};
use descent_kit::poly::IntPoly;

use crate::{certify_options, join, str_of, parse_rationals, verdict_line, CliError, Mode, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MwqtArgs {
    /// Named curve with its listed points.
    pub preset: Option<String>,
    /// `e1 e2 e3` as coefficient lists `[c0, c1, ...]` in Z[t].
    pub e: Option<Vec<String>>,
    /// Points `X;Y` with rational-function coordinates; with a preset these
    /// replace the listed points.
    #[serde(default)]
    pub points: Vec<String>,
    /// Specialization values; `None` tries 2..13 and skips bad ones.
    pub taus: Option<Vec<String>>,
    pub mode: Mode,
    pub search_bound: u64,
    pub saturation_bound: u64,
}

pub fn run(args: &MwqtArgs) -> Result<Certificate> {
    let (curve, mut points) = match (&args.preset, &args.e) {
        (Some(name), None) => preset(name)?,
        (None, Some(e)) => {
            let polys = e.iter().map(|s| s.parse::<IntPoly>()).collect::<descent_kit::Result<Vec<_>>>()?;
            let [e1, e2, e3]: [IntPoly; 3] = polys
                .try_into()
                .map_err(|_| CliError::Usage("a curve needs exactly three polynomials e1 e2 e3".into()))?;
            (curve_qt(e1, e2, e3)?, Vec::new())
        }
        _ => return Err(CliError::Usage("give either --preset or the three polynomials e1 e2 e3".into())),
    };
    if !args.points.is_empty() {
        points = args.points.iter().map(|s| parse_point_qt(s)).collect::<descent_kit::Result<_>>()?;
    }
    let mut opts = QtOptions {
        mode: args.mode.into(),
        q: certify_options(args.search_bound, args.saturation_bound),
        ..QtOptions::default()
    };
    if let Some(taus) = &args.taus {
        opts.taus = parse_rationals(taus)?;
        opts.skip_bad_taus = false;
    }
    Ok(certify_generators_qt(&curve, &points, &opts)?)
}

pub fn summary(cert: &Certificate) -> String {
    let echo = &cert.inputs["echo"];
    let mut out = vec![
        format!("curve: e = ({})", join(&echo["curve"])),
        format!("points: {}", echo["points"]),
    ];
    let d = &cert.conclusion.details;
    if cert.success() {
        out.push(format!(
            "rank {} certified at tau = {} (dim H0 = {}, dim H' = {})",
            d["rank"], str_of(&d["tau"]), d["h0_dim"], d["h_prime_dim"]
        ));
    } else if let Some(step) = d["failed_step"].as_str() {
        out.push(format!("failed step: {step}"));
    }
    out.push(verdict_line(cert));
    out.join("\n")
}
