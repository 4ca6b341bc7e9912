//! Outcome records for identity checks.

use std::fmt;

use serde::Serialize;

use crate::arith::Rational;
use crate::series::QSeries;
use crate::Scalar;

/// Outcome of a single identity check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    /// Lowest exponent at which the two sides differ, or a short reason.
    pub failure: Option<String>,
    /// Exponent below which a series comparison was made.
    pub checked_below: Option<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    /// Compares two series on their common window.
    pub fn compare<C: Scalar>(name: impl Into<String>, a: &QSeries<C>, b: &QSeries<C>) -> Self {
        let below = a.precision().min(b.precision());
        CheckOutcome {
            name: name.into(),
            failure: a.first_difference(b).map(|e| format!("first difference at q^{e}")),
            checked_below: Some(below.to_string()),
        }
    }

    /// Compares two exact values.
    pub fn equal<T: PartialEq + fmt::Display>(name: impl Into<String>, got: &T, want: &T) -> Self {
        CheckOutcome {
            name: name.into(),
            failure: (got != want).then(|| format!("got {got}, expected {want}")),
            checked_below: None,
        }
    }

    /// Passes iff `ok`.
    pub fn flag(name: impl Into<String>, ok: bool, reason: impl FnOnce() -> String) -> Self {
        CheckOutcome { name: name.into(), failure: (!ok).then(reason), checked_below: None }
    }

    /// Lowest exponent at which the two sides differ, when the failure came
    /// from a series comparison.
    pub fn first_failure_exponent(&self) -> Option<Rational> {
        let f = self.failure.as_ref()?;
        let e = f.strip_prefix("first difference at q^")?;
        crate::arith::parse_rational(e).ok()
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.failure, &self.checked_below) {
            (None, Some(b)) => write!(f, "PASS {} (below q^{})", self.name, b),
            (None, None) => write!(f, "PASS {}", self.name),
            (Some(r), _) => write!(f, "FAIL {} ({})", self.name, r),
        }
    }
}
