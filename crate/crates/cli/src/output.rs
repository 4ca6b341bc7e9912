//! Rendering of command results as text, JSON or CSV.

use clap::ValueEnum;
use qdonald::invariants::{HCombo, InvariantTable};
use qdonald::series::SeriesRecord;
use qdonald::{QSeries, Rational};
use serde::Serialize;

use crate::suites::Report;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn csv_rows(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

#[derive(Serialize)]
struct NamedSeries<'a> {
    name: &'a str,
    text: String,
    series: SeriesRecord,
}

pub fn series(name: &str, s: &QSeries, format: Format) -> String {
    match format {
        Format::Text => format!("{s}\n"),
        Format::Json => json(&NamedSeries { name, text: s.to_string(), series: SeriesRecord::from(s) }),
        Format::Csv => csv_rows(
            &["exponent", "coefficient"],
            s.q_terms().into_iter().map(|(e, c)| vec![e.to_string(), c.to_string()]),
        ),
    }
}

fn combo_text(pairs: &[(String, String)]) -> String {
    HCombo::from_labelled(pairs).map(|c| c.to_string()).unwrap_or_default()
}

pub fn table(t: &InvariantTable, format: Format) -> String {
    match format {
        Format::Json => json(t),
        Format::Csv => csv_rows(
            &["m", "n", "monomial", "value", "h_combo"],
            t.rows.iter().map(|r| {
                let combo = r.h_combo.iter().map(|(k, w)| format!("{k}:{w}")).collect::<Vec<_>>().join(";");
                vec![r.m.to_string(), r.n.to_string(), r.monomial.clone(), r.value.clone(), combo]
            }),
        ),
        Format::Text => {
            let mut out = format!("D^{}_(m,2n)\n", t.nf);
            let width = t.rows.iter().map(|r| r.value.len()).max().unwrap_or(1);
            for r in &t.rows {
                out.push_str(&format!("{:<10} {:>width$}   {}\n", r.monomial, r.value, combo_text(&r.h_combo)));
            }
            out
        }
    }
}

#[derive(Serialize)]
struct GoettscheRow {
    k: u64,
    m: u64,
    n: u64,
    monomial: String,
    value: String,
}

pub fn goettsche(rows: &[(u64, u64, u64, String, Rational)], format: Format) -> String {
    let rows: Vec<GoettscheRow> = rows
        .iter()
        .map(|(k, m, n, mono, v)| GoettscheRow { k: *k, m: *m, n: *n, monomial: mono.clone(), value: v.to_string() })
        .collect();
    match format {
        Format::Json => json(&rows),
        Format::Csv => csv_rows(
            &["k", "m", "n", "monomial", "value"],
            rows.iter()
                .map(|r| vec![r.k.to_string(), r.m.to_string(), r.n.to_string(), r.monomial.clone(), r.value.clone()]),
        ),
        Format::Text => rows
            .iter()
            .map(|r| format!("Phi_({},{},{})  {:<10} {}\n", r.k, r.m, 2 * r.n, r.monomial, r.value))
            .collect(),
    }
}

#[derive(Serialize)]
struct HurwitzRow {
    n: u64,
    value: String,
}

pub fn hurwitz(values: &[Rational], format: Format) -> String {
    let rows: Vec<HurwitzRow> =
        values.iter().enumerate().map(|(n, v)| HurwitzRow { n: n as u64, value: v.to_string() }).collect();
    match format {
        Format::Json => json(&rows),
        Format::Csv => csv_rows(&["n", "value"], rows.iter().map(|r| vec![r.n.to_string(), r.value.clone()])),
        Format::Text => rows.iter().map(|r| format!("H({}) = {}\n", r.n, r.value)).collect(),
    }
}

pub fn reports(reports: &[Report], format: Format) -> String {
    match format {
        Format::Json => json(&reports),
        Format::Csv => csv_rows(
            &["suite", "check", "passed", "detail"],
            reports.iter().flat_map(|r| {
                r.checks.iter().map(move |c| {
                    let detail = c.failure.clone().or_else(|| c.checked_below.as_ref().map(|b| format!("below q^{b}")));
                    vec![r.suite.clone(), c.name.clone(), c.passed().to_string(), detail.unwrap_or_default()]
                })
            }),
        ),
        Format::Text => {
            let mut out = String::new();
            for r in reports {
                out.push_str(&format!("== {} ==\n", r.suite));
                for c in &r.checks {
                    out.push_str(&format!("{c}\n"));
                }
                for n in &r.notes {
                    out.push_str(&format!("NOTE {n}\n"));
                }
                let failed = r.checks.iter().filter(|c| !c.passed()).count();
                out.push_str(&format!("{} checks, {} failed\n", r.checks.len(), failed));
            }
            out
        }
    }
}
