use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::arith::Rational;

/// A linear combination `sum_k w_k H_k` of the coefficients of `Q^+`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct HCombo(pub BTreeMap<usize, Rational>);

impl HCombo {
    pub fn new() -> Self {
        HCombo(BTreeMap::new())
    }

    pub fn add(&mut self, k: usize, w: Rational) {
        let e = self.0.entry(k).or_insert_with(Rational::zero);
        *e += w;
        if e.is_zero() {
            self.0.remove(&k);
        }
    }

    pub fn weight(&self, k: usize) -> Rational {
        self.0.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn max_index(&self) -> Option<usize> {
        self.0.keys().next_back().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Substitutes `H_k = h[k]`.
    pub fn eval(&self, h: &[Rational]) -> Rational {
        self.0.iter().map(|(&k, w)| w * &h[k]).sum()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = HCombo::new();
        for (&k, w) in &self.0 {
            out.add(k, w * c);
        }
        out
    }

    /// Terms from the highest index down, as `("H2", "-49/64")`.
    pub fn labelled(&self) -> Vec<(String, String)> {
        self.0.iter().rev().map(|(k, w)| (format!("H{k}"), w.to_string())).collect()
    }

    pub fn from_labelled(pairs: &[(String, String)]) -> crate::Result<Self> {
        let mut out = HCombo::new();
        for (label, w) in pairs {
            let k = label
                .strip_prefix('H')
                .and_then(|s| s.parse::<usize>().ok())
                .ok_or_else(|| crate::Error::Parse(format!("bad H label {label:?}")))?;
            out.add(k, crate::arith::parse_rational(w)?);
        }
        Ok(out)
    }
}

impl std::ops::Add for &HCombo {
    type Output = HCombo;
    fn add(self, other: &HCombo) -> HCombo {
        let mut out = self.clone();
        for (&k, w) in &other.0 {
            HCombo::add(&mut out, k, w.clone());
        }
        out
    }
}

impl std::ops::Sub for &HCombo {
    type Output = HCombo;
    fn sub(self, other: &HCombo) -> HCombo {
        self + &other.scale(&Rational::from_integer((-1).into()))
    }
}

impl fmt::Display for HCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (n, (k, w)) in self.0.iter().rev().enumerate() {
            let sign = if w.is_negative() { "-" } else { "+" };
            if n == 0 {
                if w.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            write!(f, "{}*H{}", w.abs(), k)?;
        }
        Ok(())
    }
}
