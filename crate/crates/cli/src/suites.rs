//! Verification suites run by `qdonald verify`.

use clap::ValueEnum;
use qdonald::check::CheckOutcome;
use qdonald::invariants::{
    criterion_check, errata, goettsche_value, h_suite, mock_identities, monomial, printed_table_checks,
    theta_identities, uplane_d, z0_suite, z_rho_checks,
};
use qdonald::sw::sw_checks;
use qdonald::Result;
use rayon::prelude::*;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Criterion,
    Identities,
    Swcurves,
    Tables,
    Nf4,
    All,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<CheckOutcome>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn first_failure(&self) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| !c.passed())
    }
}

fn criterion(max: u64) -> Result<Report> {
    let cells: Vec<(u64, u64)> = (0..=max).flat_map(|w| (0..=w).map(move |m| (m, w - m))).collect();
    let checks: Vec<Vec<CheckOutcome>> = cells
        .par_iter()
        .map(|&(m, n)| {
            let ok = criterion_check(m, n)?;
            let phi = goettsche_value(m, n)?;
            let d = uplane_d(0, m, n)?.0;
            let name = monomial(m, n);
            Ok(vec![
                CheckOutcome::flag(format!("criterion constant term vanishes at {name}"), ok, || {
                    "nonzero constant term".into()
                }),
                CheckOutcome::equal(format!("Goettsche = D^0 at {name}"), &phi, &d),
            ])
        })
        .collect::<Result<_>>()?;
    Ok(Report { suite: "criterion".into(), checks: checks.into_iter().flatten().collect(), notes: Vec::new() })
}

fn identities(order: i64, max: u64) -> Result<Report> {
    let mut checks = mock_identities(order, &[0, 2, 4])?;
    checks.extend(theta_identities(order));
    checks.extend(h_suite(order));
    checks.extend(z0_suite(order, max as u32)?.checks);
    Ok(Report { suite: "identities".into(), checks, notes: Vec::new() })
}

fn swcurves(order: i64) -> Result<Report> {
    let mut checks = Vec::new();
    for nf in [0, 2, 3] {
        for mut c in sw_checks(nf, order)? {
            c.name = format!("N_f={nf}: {}", c.name);
            checks.push(c);
        }
    }
    Ok(Report { suite: "swcurves".into(), checks, notes: Vec::new() })
}

fn tables() -> Result<Report> {
    let mut checks = Vec::new();
    for nf in [0, 2, 3] {
        checks.extend(printed_table_checks(nf, true)?);
    }
    let notes = errata()
        .iter()
        .map(|e| {
            format!(
                "N_f={} {}: printed H{} weight {} replaced by {}",
                e.nf,
                monomial(e.m, e.n),
                e.index,
                e.printed,
                e.corrected
            )
        })
        .collect();
    Ok(Report { suite: "tables".into(), checks, notes })
}

fn nf4(order: i64) -> Result<Report> {
    Ok(Report { suite: "nf4".into(), checks: z_rho_checks(order)?, notes: Vec::new() })
}

/// Runs one suite, or every suite for [`Suite::All`].
pub fn run(suite: Suite, order: i64, max: u64) -> Result<Vec<Report>> {
    match suite {
        Suite::Criterion => Ok(vec![criterion(max)?]),
        Suite::Identities => Ok(vec![identities(order, max)?]),
        Suite::Swcurves => Ok(vec![swcurves(order)?]),
        Suite::Tables => Ok(vec![tables()?]),
        Suite::Nf4 => Ok(vec![nf4(order)?]),
        Suite::All => {
            let all = [Suite::Criterion, Suite::Identities, Suite::Swcurves, Suite::Tables, Suite::Nf4];
            let mut out = Vec::new();
            for s in all {
                out.extend(run(s, order, max)?);
            }
            Ok(out)
        }
    }
}
