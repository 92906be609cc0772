use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use descent_kit::certificate::Certificate;
use descent_kit_cli::{
    verify, CliError, Command, MwqtArgs, Mode, PiCheckArgs, QuintupleArgs, Result, SelmerArgs, EXIT_FAILED,
    EXIT_INPUT, EXIT_OK,
};

#[derive(Parser)]
#[command(name = "descent-kit", version, about = "2-descent certificates for curves over Q and Q(t) and for rational diophantine quintuples")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Args)]
struct Output {
    /// Print the certificate as JSON instead of a summary.
    #[arg(long)]
    json: bool,
    /// Also write the certificate to this file.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct Bounds {
    /// Point search bound B (x = a/b^2 with b <= B, |a| <= B^2).
    #[arg(long, default_value_t = 10)]
    search_bound: u64,
    /// Odd primes up to this bound are checked for saturation.
    #[arg(long, default_value_t = 50)]
    saturation_bound: u64,
}

#[derive(Subcommand)]
enum Sub {
    /// Extensions of a rational diophantine quadruple and the Selmer set of
    /// the genus-5 curve of its extensions.
    Quintuple {
        /// a1 a2 a3 a4 as rationals p/q.
        #[arg(num_args = 4, allow_negative_numbers = true)]
        quadruple: Option<Vec<String>>,
        /// Use the family member (t - 1, t + 1, 4t, 4t(2t - 1)(2t + 1)).
        #[arg(long, allow_hyphen_values = true, conflicts_with = "quadruple")]
        t: Option<String>,
        /// Comma-separated good odd primes (default: the smallest good ones).
        #[arg(long, value_delimiter = ',')]
        primes: Vec<u64>,
        #[arg(long, default_value_t = 10)]
        prime_count: usize,
        #[arg(long, value_enum, default_value = "selmer")]
        mode: Mode,
        #[command(flatten)]
        bounds: Bounds,
        #[command(flatten)]
        out: Output,
    },
    /// Certify Mordell-Weil generators of y^2 = (x - e1)(x - e2)(x - e3)
    /// over Q(t).
    Mwqt {
        /// One of main, other1, other2, other3, other4.
        #[arg(long, conflicts_with = "e")]
        preset: Option<String>,
        /// e1 e2 e3 as coefficient lists "[c0, c1, ...]".
        #[arg(num_args = 3)]
        e: Option<Vec<String>>,
        /// A point "X;Y" (repeatable).
        #[arg(long = "point", allow_hyphen_values = true)]
        points: Vec<String>,
        /// Comma-separated specialization values (default 2..13).
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        taus: Option<Vec<String>>,
        #[arg(long, value_enum, default_value = "mw")]
        mode: Mode,
        #[command(flatten)]
        bounds: Bounds,
        #[command(flatten)]
        out: Output,
    },
    /// 2-Selmer group of y^2 = (x - e1)(x - e2)(x - e3) over Q, and a
    /// generator certificate if points are given.
    Selmer {
        #[arg(num_args = 3, required = true, allow_negative_numbers = true)]
        e: Vec<String>,
        #[arg(long = "point", allow_hyphen_values = true)]
        points: Vec<String>,
        #[command(flatten)]
        bounds: Bounds,
        #[command(flatten)]
        out: Output,
    },
    /// Check that the family morphism sends the regular extensions to +-P
    /// and +-5P.
    PiCheck {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "2")]
        taus: Vec<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Replay a certificate and compare step digests.
    Verify {
        file: PathBuf,
        /// Only check the stored digests, do not re-run.
        #[arg(long)]
        digests_only: bool,
        #[arg(long)]
        json: bool,
    },
}

fn emit(cmd: &Command, cert: &Certificate, out: &Output) -> Result<i32> {
    if let Some(path) = &out.output {
        std::fs::write(path, cert.to_json())
            .map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    }
    if out.json {
        println!("{}", cert.to_json());
    } else {
        println!("{}", cmd.summary(cert));
    }
    Ok(if cert.success() { EXIT_OK } else { EXIT_FAILED })
}

fn run_verify(file: &PathBuf, digests_only: bool, json: bool) -> Result<i32> {
    let text =
        std::fs::read_to_string(file).map_err(|source| CliError::Io { path: file.display().to_string(), source })?;
    let cert = Certificate::from_json(&text)?;
    let report = verify(&cert, !digests_only)?;
    if json {
        println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    } else {
        println!("{} steps, kind {:?}", report.steps, cert.kind);
        for s in &report.corrupted {
            println!("digest mismatch: {s}");
        }
        for s in &report.mismatches {
            println!("replay mismatch: {s}");
        }
        if report.faithful() {
            println!(
                "{}; recorded conclusion: {}",
                if report.replayed { "replay matches bit-for-bit" } else { "stored digests match" },
                cert.conclusion.verdict
            );
        }
        println!("{}", if report.verified() { "VERIFIED" } else { "NOT VERIFIED" });
    }
    Ok(if report.verified() { EXIT_OK } else { EXIT_FAILED })
}

fn run(cli: Cli) -> Result<i32> {
    let (cmd, out) = match cli.command {
        Sub::Quintuple { quadruple, t, primes, prime_count, mode, bounds, out } => (
            Command::Quintuple(QuintupleArgs {
                quadruple,
                t,
                primes,
                prime_count,
                mode,
                search_bound: bounds.search_bound,
                saturation_bound: bounds.saturation_bound,
            }),
            out,
        ),
        Sub::Mwqt { preset, e, points, taus, mode, bounds, out } => (
            Command::Mwqt(MwqtArgs {
                preset,
                e,
                points,
                taus,
                mode,
                search_bound: bounds.search_bound,
                saturation_bound: bounds.saturation_bound,
            }),
            out,
        ),
        Sub::Selmer { e, points, bounds, out } => (
            Command::Selmer(SelmerArgs {
                e,
                points,
                search_bound: bounds.search_bound,
                saturation_bound: bounds.saturation_bound,
            }),
            out,
        ),
        Sub::PiCheck { taus, out } => (Command::PiCheck(PiCheckArgs { taus }), out),
        Sub::Verify { file, digests_only, json } => return run_verify(&file, digests_only, json),
    };
    let cert = cmd.run()?;
    emit(&cmd, &cert, &out)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT as u8)
        }
    }
}
