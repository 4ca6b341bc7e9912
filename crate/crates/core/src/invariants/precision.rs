use num_traits::Signed;

use crate::arith::{ceil_i64, Rational};
use crate::error::{Error, Result};
use crate::series::QSeries;

/// Calls `build(order)` with increasing orders until the result is known
/// strictly beyond `target`.
pub fn at_precision(target: &Rational, mut build: impl FnMut(i64) -> Result<QSeries>) -> Result<QSeries> {
    let mut order = ceil_i64(target).max(0) + 1;
    for _ in 0..24 {
        let s = build(order)?;
        let gap = target - s.precision();
        if gap.is_negative() {
            return Ok(s);
        }
        order += ceil_i64(&gap) + 1;
    }
    Err(Error::InsufficientPrecision { exponent: target.to_string(), precision: format!("order {order}") })
}
