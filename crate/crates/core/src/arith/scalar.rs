use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};

/// Coefficient ring of a [`QSeries`](crate::series::QSeries).
///
/// `Ctx` carries whatever runtime data the ring needs (the cyclotomic order
/// for [`CycloElem`](super::CycloElem), nothing for rationals).
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    type Ctx: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn zero_in(ctx: &Self::Ctx) -> Self;
    fn one_in(ctx: &Self::Ctx) -> Self;
    fn from_rational(ctx: &Self::Ctx, r: Rational) -> Self;
    fn ctx(&self) -> Self::Ctx;
    fn vanishes(&self) -> bool;

    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn scale(&self, r: &Rational) -> Self;
    fn inverse(&self) -> Result<Self>;

    fn accumulate(&mut self, other: &Self) {
        *self = self.plus(other);
    }

    /// `exp(2 pi i num/den)` if the ring contains it.
    fn root_of_unity(ctx: &Self::Ctx, num: i64, den: i64) -> Result<Self>;

    /// `Some(r)` when the element lies in Q.
    fn to_rational(&self) -> Option<Rational>;

    /// First `n` coefficients of the product of two dense coefficient vectors.
    fn convolve(ctx: &Self::Ctx, a: &[Self], b: &[Self], n: usize) -> Vec<Self> {
        let nz: Vec<usize> = (0..a.len().min(n)).filter(|&i| !a[i].vanishes()).collect();
        let mut out = vec![Self::zero_in(ctx); n];
        for (k, slot) in out.iter_mut().enumerate() {
            for &i in nz.iter().take_while(|&&i| i <= k) {
                if let Some(bj) = b.get(k - i) {
                    if !bj.vanishes() {
                        slot.accumulate(&a[i].times(bj));
                    }
                }
            }
        }
        out
    }

    /// First `n` coefficients of `1/a` for a dense vector with `a[0] != 0`.
    fn series_inverse(ctx: &Self::Ctx, a: &[Self], n: usize) -> Result<Vec<Self>> {
        let b0 = a.first().ok_or(Error::NotInvertible)?.inverse()?;
        let mut b: Vec<Self> = Vec::with_capacity(n);
        if n > 0 {
            b.push(b0.clone());
        }
        for m in 1..n {
            let mut s = Self::zero_in(ctx);
            for k in 1..=m.min(a.len() - 1) {
                if !a[k].vanishes() {
                    s.accumulate(&a[k].times(&b[m - k]));
                }
            }
            b.push(s.times(&b0).negated());
        }
        Ok(b)
    }
}

impl Scalar for Rational {
    type Ctx = ();

    fn zero_in(_: &()) -> Self {
        Rational::zero()
    }
    fn one_in(_: &()) -> Self {
        Rational::one()
    }
    fn from_rational(_: &(), r: Rational) -> Self {
        r
    }
    fn ctx(&self) {}
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
    fn inverse(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
    fn accumulate(&mut self, o: &Self) {
        *self += o;
    }

    fn root_of_unity(_: &(), num: i64, den: i64) -> Result<Self> {
        // only +1 and -1 are rational
        let r = Rational::new(BigInt::from(num), BigInt::from(den));
        let twice = &r * BigInt::from(2);
        if !twice.is_integer() {
            return Err(Error::IncompatibleOrder { order: 2, requested: r.to_string() });
        }
        Ok(if twice.to_integer().is_even() { Rational::one() } else { -Rational::one() })
    }

    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }

    // Clear denominators and convolve integers; much cheaper than reducing
    // a fraction after every multiply-add.
    fn convolve(_: &(), a: &[Self], b: &[Self], n: usize) -> Vec<Self> {
        let (ai, da) = clear_denominators(a);
        let (bi, db) = clear_denominators(b);
        let den = da * db;
        let nz: Vec<usize> = (0..ai.len().min(n)).filter(|&i| !ai[i].is_zero()).collect();
        (0..n)
            .map(|k| {
                let mut s = BigInt::zero();
                for &i in nz.iter().take_while(|&&i| i <= k) {
                    if let Some(bj) = bi.get(k - i) {
                        if !bj.is_zero() {
                            s += &ai[i] * bj;
                        }
                    }
                }
                Rational::new(s, den.clone())
            })
            .collect()
    }

    // With A = d*a integral, 1/A has coefficients C_m / A_0^(m+1) where
    // C_m = -sum_k A_k C_(m-k) A_0^(k-1) stays in Z.
    fn series_inverse(_: &(), a: &[Self], n: usize) -> Result<Vec<Self>> {
        let (ai, d) = clear_denominators(a);
        let a0 = ai.first().cloned().ok_or(Error::NotInvertible)?;
        if a0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let mut pw = vec![BigInt::one()];
        for k in 1..=n {
            let next = &pw[k - 1] * &a0;
            pw.push(next);
        }
        let nz: Vec<usize> = (1..ai.len().min(n.max(1))).filter(|&k| !ai[k].is_zero()).collect();
        let mut c: Vec<BigInt> = Vec::with_capacity(n);
        for m in 0..n {
            if m == 0 {
                c.push(BigInt::one());
                continue;
            }
            let mut s = BigInt::zero();
            for &k in nz.iter().take_while(|&&k| k <= m) {
                s += &ai[k] * &c[m - k] * &pw[k - 1];
            }
            c.push(-s);
        }
        Ok(c.into_iter().enumerate().map(|(m, cm)| Rational::new(cm * &d, pw[m].clone() * &a0)).collect())
    }
}

fn clear_denominators(v: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let mut l = BigInt::one();
    for x in v {
        if !x.denom().is_one() {
            l = l.lcm(x.denom());
        }
    }
    let ints = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    (ints, l.abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn rational_roots() {
        assert_eq!(Rational::root_of_unity(&(), 1, 2).unwrap(), rat(-1, 1));
        assert_eq!(Rational::root_of_unity(&(), -4, 4).unwrap(), rat(1, 1));
        assert!(Rational::root_of_unity(&(), 1, 8).is_err());
    }

    #[test]
    fn fast_convolution_matches_naive() {
        let a = vec![rat(1, 2), rat(0, 1), rat(-3, 7), rat(5, 6)];
        let b = vec![rat(2, 3), rat(1, 9), rat(4, 1)];
        let fast = Rational::convolve(&(), &a, &b, 6);
        for k in 0..6 {
            let mut s = Rational::zero();
            for i in 0..a.len() {
                if k >= i && k - i < b.len() {
                    s += &a[i] * &b[k - i];
                }
            }
            assert_eq!(fast[k], s);
        }
    }

    #[test]
    fn integer_inverse_matches_generic() {
        let a = vec![rat(3, 2), rat(1, 5), rat(0, 1), rat(-7, 3)];
        let inv = Rational::series_inverse(&(), &a, 7).unwrap();
        let prod = Rational::convolve(&(), &a, &inv, 7);
        assert_eq!(prod[0], rat(1, 1));
        assert!(prod[1..].iter().all(Zero::is_zero));
    }
}
