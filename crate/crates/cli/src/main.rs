//! `qdonald`: print q-series, tabulate Donaldson invariants of CP2 and run
//! the verification suites.

mod output;
mod suites;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use qdonald::invariants::{goettsche_value, hurwitz, invariant_table, monomial, nf4_partition};
use qdonald::named::{named_series, NAMES};
use qdonald::sw::sw_checks;
use qdonald::Error;

use output::Format;
use suites::{Report, Suite};

#[derive(Parser, Debug)]
#[command(name = "qdonald", version, about = "Exact q-series for mock modular forms and Donaldson invariants of CP2")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Precision in q-units: series are known below q^ORDER.
    #[arg(long, global = true, default_value_t = 60, value_parser = clap::value_parser!(i64).range(1..))]
    order: i64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the q-expansion of a named series.
    Series {
        /// Series name, e.g. Qplus, E2, fm:3, Ft:2, ebracket:2,1.
        #[arg(long)]
        name: String,
    },
    /// Tabulate D^{N_f}_{m,2n} with its H-combination.
    Invariants {
        #[arg(long, value_parser = parse_nf)]
        nf: u32,
        /// Largest m + n.
        #[arg(long, default_value_t = 6)]
        max_weight: u64,
    },
    /// Tabulate the Goettsche-formula invariants Phi_{k,m,2n}.
    Goettsche {
        /// Largest m + n.
        #[arg(long, default_value_t = 6)]
        max_weight: u64,
    },
    /// Run a verification suite; exits 1 if any check fails.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Largest m + n in the criterion suite, largest m in the Z0 f_m checks.
        #[arg(long, default_value_t = 6)]
        max: u64,
    },
    /// Hurwitz class numbers H(0), ..., H(MAX).
    Hurwitz {
        #[arg(long, default_value_t = 20)]
        max: u64,
    },
    /// The massless N_f = 4 partition function.
    Nf4,
    /// Seiberg-Witten curve identities; exits 1 if any check fails.
    Swcheck {
        /// A single family; all of 0, 2, 3 when omitted.
        #[arg(long, value_parser = parse_nf)]
        nf: Option<u32>,
    },
}

fn parse_nf(s: &str) -> Result<u32, String> {
    match s.parse::<u32>() {
        Ok(n @ (0 | 2 | 3)) => Ok(n),
        _ => Err(format!("expected one of 0, 2, 3, got {s:?}")),
    }
}

enum Failure {
    Usage(String),
    Compute(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownForm(name) => {
                Failure::Usage(format!("unknown series name {name:?}; known names: {}", NAMES.join(", ")))
            }
            other => Failure::Compute(other.to_string()),
        }
    }
}

fn first_failure(reports: &[Report]) -> Option<String> {
    let c = reports.iter().find_map(Report::first_failure)?;
    Some(match c.first_failure_exponent() {
        Some(e) => format!("first failing identity: {} at q^{e}", c.name),
        None => format!("first failing identity: {} ({})", c.name, c.failure.as_deref().unwrap_or("failed")),
    })
}

fn execute(cli: &Cli) -> Result<(String, Option<String>), Failure> {
    let order = cli.order;
    let fmt = cli.format;
    let with_hint = |e: Error| match e {
        Error::InsufficientPrecision { .. } => {
            Failure::Compute(format!("{e}; try a larger --order, e.g. --order {}", order.saturating_mul(2)))
        }
        other => Failure::from(other),
    };
    match &cli.command {
        Command::Series { name } => {
            let s = named_series(name, order).map_err(with_hint)?;
            Ok((output::series(name, &s, fmt), None))
        }
        Command::Invariants { nf, max_weight } => {
            let t = invariant_table(*nf, *max_weight).map_err(with_hint)?;
            Ok((output::table(&t, fmt), None))
        }
        Command::Goettsche { max_weight } => {
            let mut rows = Vec::new();
            for w in (0..=*max_weight).step_by(2) {
                for m in 0..=w {
                    let v = goettsche_value(m, w - m).map_err(with_hint)?;
                    rows.push((w / 2 + 1, m, w - m, monomial(m, w - m), v));
                }
            }
            Ok((output::goettsche(&rows, fmt), None))
        }
        Command::Verify { suite, max } => {
            let reports = suites::run(*suite, order, *max).map_err(with_hint)?;
            Ok((output::reports(&reports, fmt), first_failure(&reports)))
        }
        Command::Hurwitz { max } => Ok((output::hurwitz(&hurwitz(*max), fmt), None)),
        Command::Nf4 => {
            let s = nf4_partition(order).map_err(with_hint)?;
            Ok((output::series("Z4", &s, fmt), None))
        }
        Command::Swcheck { nf } => {
            let families = nf.map_or_else(|| vec![0, 2, 3], |n| vec![n]);
            let mut checks = Vec::new();
            for f in families {
                for mut c in sw_checks(f, order).map_err(with_hint)? {
                    c.name = format!("N_f={f}: {}", c.name);
                    checks.push(c);
                }
            }
            let reports = vec![Report { suite: "swcheck".into(), checks, notes: Vec::new() }];
            Ok((output::reports(&reports, fmt), first_failure(&reports)))
        }
    }
}

fn emit(cli: &Cli, text: &str) -> std::io::Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(v) = std::env::var("QDONALD_THREADS") else { return Ok(()) };
    let n: usize = v
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Failure::Usage(format!("QDONALD_THREADS must be a positive integer, got {v:?}")))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| Failure::Compute(e.to_string()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads().and_then(|()| {
        let (text, failure) = execute(&cli)?;
        emit(&cli, &text).map_err(|e| Failure::Compute(format!("cannot write output: {e}")))?;
        failure.map_or(Ok(()), |f| Err(Failure::Verification(f)))
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(msg)) | Err(Failure::Verification(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
