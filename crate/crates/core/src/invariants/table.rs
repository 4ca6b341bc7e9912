use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::hcombo::HCombo;
use super::reference::{errata, printed_table, PrintedRow};
use super::uplane::uplane_d;
use crate::arith::{parse_rational, Rational};
use crate::check::CheckOutcome;
use crate::error::{Error, Result};
use crate::mock::h_coefficients;

/// `p^m S^(2n)` written as `"1"`, `"p"`, `"S^2"`, `"p^2 S^4"`, ...
pub fn monomial(m: u64, n: u64) -> String {
    let p = match m {
        0 => None,
        1 => Some("p".to_string()),
        _ => Some(format!("p^{m}")),
    };
    let s = (n > 0).then(|| format!("S^{}", 2 * n));
    match (p, s) {
        (None, None) => "1".into(),
        (Some(p), None) => p,
        (None, Some(s)) => s,
        (Some(p), Some(s)) => format!("{p} {s}"),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantRow {
    pub m: u64,
    pub n: u64,
    pub monomial: String,
    pub value: String,
    /// `(label, weight)` pairs, highest `H_k` first.
    pub h_combo: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantTable {
    pub nf: u32,
    pub rows: Vec<InvariantRow>,
}

impl InvariantTable {
    pub fn get(&self, m: u64, n: u64) -> Option<&InvariantRow> {
        self.rows.iter().find(|r| r.m == m && r.n == n)
    }
}

/// `D^{N_f}_{m,2n}` for all `m + n <= max_weight`, ordered by weight and
/// then by decreasing power of `S`. Rows that vanish identically are left out.
pub fn invariant_table(nf: u32, max_weight: u64) -> Result<InvariantTable> {
    if !matches!(nf, 0 | 2 | 3) {
        return Err(Error::UnsupportedFamily(nf));
    }
    let cells: Vec<(u64, u64)> = (0..=max_weight).flat_map(|w| (0..=w).map(move |m| (m, w - m))).collect();
    let rows: Vec<Option<InvariantRow>> = cells
        .par_iter()
        .map(|&(m, n)| {
            let (value, combo) = uplane_d(nf, m, n)?;
            if value.is_zero() && combo.is_zero() {
                return Ok(None);
            }
            Ok(Some(InvariantRow {
                m,
                n,
                monomial: monomial(m, n),
                value: value.to_string(),
                h_combo: combo.labelled(),
            }))
        })
        .collect::<Result<_>>()?;
    Ok(InvariantTable { nf, rows: rows.into_iter().flatten().collect() })
}

/// The printed combination of a row, with the known misprints either kept
/// or replaced by their corrections.
pub fn printed_combo(nf: u32, row: &PrintedRow, corrected: bool) -> Result<HCombo> {
    let mut out = HCombo::new();
    for &(k, w) in row.combo {
        let fix = errata().iter().find(|e| corrected && e.nf == nf && e.m == row.m && e.n == row.n && e.index == k);
        out.add(k, parse_rational(fix.map_or(w, |e| e.corrected))?);
    }
    Ok(out)
}

/// For each printed row: the printed combination evaluates to the printed
/// value, and the computed value and combination equal the printed ones.
pub fn printed_table_checks(nf: u32, corrected: bool) -> Result<Vec<CheckOutcome>> {
    let rows = printed_table(nf);
    let h = h_coefficients(12);
    rows.par_iter()
        .map(|row| {
            let name = format!("N_f={nf} {}", monomial(row.m, row.n));
            let printed = printed_combo(nf, row, corrected)?;
            let value: Rational = parse_rational(row.value)?;
            let (d, combo) = uplane_d(nf, row.m, row.n)?;
            Ok(vec![
                CheckOutcome::equal(
                    format!("{name}: printed combination evaluates to printed value"),
                    &printed.eval(&h),
                    &value,
                ),
                CheckOutcome::equal(format!("{name}: value"), &d, &value),
                CheckOutcome::equal(format!("{name}: combination"), &combo, &printed),
            ])
        })
        .collect::<Result<Vec<_>>>()
        .map(|v| v.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    #[test]
    fn monomial_names() {
        assert_eq!(monomial(0, 0), "1");
        assert_eq!(monomial(0, 2), "S^4");
        assert_eq!(monomial(1, 1), "p S^2");
        assert_eq!(monomial(3, 0), "p^3");
    }

    #[test]
    fn small_table() {
        let t = invariant_table(0, 2).unwrap();
        assert_eq!(t.rows.len(), 4);
        assert_eq!(t.get(0, 2).unwrap().value, "-3/16");
        assert_eq!(t.get(0, 2).unwrap().h_combo[0], ("H2".to_string(), "-49/64".to_string()));
        let t2 = invariant_table(2, 1).unwrap();
        assert_eq!(t2.get(1, 0).unwrap().value, "0");
        assert!(!t2.get(1, 0).unwrap().h_combo.is_empty());
    }

    #[test]
    fn corrections_apply_only_when_asked() {
        let row = printed_table(3).iter().find(|r| r.m == 1 && r.n == 1).unwrap();
        assert_eq!(printed_combo(3, row, false).unwrap().weight(6), rat(743, 3076));
        assert_eq!(printed_combo(3, row, true).unwrap().weight(6), rat(743, 3072));
        assert_eq!(printed_combo(3, row, true).unwrap().weight(0), rat(-991, 384));
        assert_eq!(printed_combo(0, &printed_table(0)[0], true).unwrap().weight(0), int(6));
    }

    #[test]
    fn corrected_tables_match() {
        for nf in [0, 2, 3] {
            for c in printed_table_checks(nf, true).unwrap() {
                assert!(c.passed(), "{c}");
            }
        }
    }
}
