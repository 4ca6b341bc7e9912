use num_traits::Zero;

use super::hcombo::HCombo;
use super::precision::at_precision;
use crate::arith::{factorial, int, pow_i, rat, Rational};
use crate::error::{Error, Result};
use crate::forms::{eisenstein_e2, gamma_ratio, vartheta};
use crate::mock::{f_t, h_coefficients, q_plus};
use crate::series::QSeries;

fn sign(e: u64) -> Rational {
    if e.is_multiple_of(2) {
        int(1)
    } else {
        int(-1)
    }
}

fn pow2(e: i64) -> Rational {
    pow_i(&int(2), e)
}

fn pow3(e: i64) -> Rational {
    pow_i(&int(3), e)
}

fn check_nf(nf: u32) -> Result<()> {
    if matches!(nf, 0 | 2 | 3) {
        Ok(())
    } else {
        Err(Error::UnsupportedFamily(nf))
    }
}

/// `(2n)! / ((n-i)! j! (i-j)!) * Gamma(1/2) / Gamma(j + 1/2)`.
fn multinomial_gamma(n: u64, i: u64, j: u64) -> Rational {
    factorial(2 * n) / (factorial(n - i) * factorial(j) * factorial(i - j)) * gamma_ratio(j as u32)
}

/// Rational prefactor of the `(i, j)` summand of `D^{N_f}_{m,2n}`.
pub fn d_coefficient(nf: u32, m: u64, n: u64, i: u64, j: u64) -> Result<Rational> {
    check_nf(nf)?;
    if j > i || i > n {
        return Err(Error::ConstraintViolation(format!("need j <= i <= n, got i = {i}, j = {j}, n = {n}")));
    }
    let (n_, j_, m_) = (n as i64, j as i64, m as i64);
    let base = multinomial_gamma(n, i, j);
    let c = match nf {
        0 => sign(i + j + 1) / (pow2(n_ - 2 * j_ - 1) * pow3(n_ - j_)),
        2 => sign(i + j + 1) * pow2(-n_ + 3 * j_ + 2) / pow3(n_ - j_),
        _ => sign(i + j) * pow2(3 * m_ + 2 * n_ + 2 * j_ + 5) / pow3(n_ - j_),
    };
    Ok(c * base)
}

struct Thetas {
    t2: QSeries,
    t3: QSeries,
    t4: QSeries,
}

impl Thetas {
    fn new(order: i64) -> Self {
        Thetas {
            t2: vartheta(2, order).expect("index"),
            t3: vartheta(3, order).expect("index"),
            t4: vartheta(4, order).expect("index"),
        }
    }

    /// `vartheta_2^4 + vartheta_3^4`.
    fn p(&self) -> Result<QSeries> {
        Ok(self.t2.pow(4)? + self.t3.pow(4)?)
    }

    /// `vartheta_4^a P^b / (vartheta_2 vartheta_3)^c`.
    fn quotient(&self, a: i64, b: i64, c: i64) -> Result<QSeries> {
        let num = &self.t4.pow(a)? * &self.p()?.pow(b)?;
        num.div(&(&self.t2 * &self.t3).pow(c)?)
    }
}

/// The `(i, j)` kernel of `D^{N_f}_{m,2n}`, the factor multiplying
/// `(q d/dq)^j Q`, known below `q^order`.
fn d_kernel(nf: u32, m: u64, n: u64, i: u64, j: u64, order: i64) -> Result<QSeries> {
    let (m, n, i, j) = (m as i64, n as i64, i as i64, j as i64);
    let work = order + 1;
    match nf {
        0 => {
            let th = Thetas::new(work);
            Ok(&th.quotient(9, m + n - i, 2 * m + 2 * n + 3)? * &eisenstein_e2(work).pow(i - j)?)
        }
        2 => {
            let th = Thetas::new(work);
            let t2h = vartheta(2, 2 * work)?.rescale(1, 2);
            let e2h = eisenstein_e2(2 * work).rescale(1, 2);
            let k = th.quotient(10, m + n - i, 2 * m + 2 * n + 3)?.div(&t2h)?;
            Ok(&k * &e2h.pow(i - j)?)
        }
        _ => {
            let th = Thetas::new(work);
            let d = &th.t3.pow(2)? - &th.t4.pow(2)?;
            let num = &th.t2.pow(9)? * &(&th.t3 * &th.t4).pow(2 * m + 2 * n - 2 * i + 3)?;
            let k = num.div(&d.pow(2 * m + 2 * n + 6)?)?;
            Ok(&k * &eisenstein_e2(work).pow(i - j)?)
        }
    }
}

/// Exponent of `H_alpha` in the series paired against the kernels, and
/// the sign carried by that series.
fn basis(nf: u32, alpha: usize) -> (Rational, Rational) {
    let a = alpha as i64;
    match nf {
        0 => (rat(-1, 8) + rat(a, 2), int(1)),
        2 => (rat(-1, 16) + rat(a, 4), int(1)),
        _ => (rat(-1, 8) + rat(a, 2), int(-1)),
    }
}

/// `D^{N_f}_{m,2n}` and its expression as a combination of the `H_k`.
pub fn uplane_d(nf: u32, m: u64, n: u64) -> Result<(Rational, HCombo)> {
    check_nf(nf)?;
    let mut combo = HCombo::new();
    let top = -basis(nf, 0).0;
    for i in 0..=n {
        for j in 0..=i {
            let c = d_coefficient(nf, m, n, i, j)?;
            let k = at_precision(&top, |w| d_kernel(nf, m, n, i, j, w))?;
            let Some(v) = k.valuation() else { continue };
            let mut alpha = 0;
            loop {
                let (e, s) = basis(nf, alpha);
                let at = -&e;
                if at < v {
                    break;
                }
                let kc = k.coeff_at(&at)?;
                if !kc.is_zero() {
                    combo.add(alpha, &c * &s * kc * pow_i(&e, j as i64));
                }
                alpha += 1;
            }
        }
    }
    let h = h_coefficients(combo.max_index().map_or(1, |k| k + 1));
    Ok((combo.eval(&h), combo))
}

/// `D^{N_f}_{m,2n}` with an arbitrary series in place of `Q`: for `N_f = 2`
/// the series is the one appearing at argument `tau/2`, for `N_f = 3` it is
/// `Q^{(3)}_infinity` itself.
pub fn uplane_d_with(nf: u32, m: u64, n: u64, q: &QSeries) -> Result<Rational> {
    check_nf(nf)?;
    let vq = q.valuation().ok_or(Error::NotInvertible)?;
    let mut total = Rational::zero();
    for i in 0..=n {
        for j in 0..=i {
            let c = d_coefficient(nf, m, n, i, j)?;
            let k = at_precision(&-&vq, |w| d_kernel(nf, m, n, i, j, w))?;
            let prod = &k * &q.qdq(j as u32);
            if prod.precision() <= Rational::zero() {
                return Err(Error::InsufficientPrecision {
                    exponent: "0".into(),
                    precision: prod.precision().to_string(),
                });
            }
            total += c * prod.constant_term()?;
        }
    }
    Ok(total)
}

/// Goettsche's closed formula `Phi_{k,m,2n}` with `2(k-1) = m + n`.
pub fn goettsche_value(m: u64, n: u64) -> Result<Rational> {
    let mut total = Rational::zero();
    for l in 0..=n {
        for j in 0..=l {
            let c = sign(n + j) / (pow2(l as i64 - 3) * pow3(l as i64))
                * (factorial(2 * n) / (factorial(2 * n - 2 * l) * factorial(j) * factorial(l - j)));
            let t = 2 * (n - l) as u32;
            let (mi, ni, li, ji) = (m as i64, n as i64, l as i64, j as i64);
            let kernel = at_precision(&rat(-3, 8), |w| {
                let th = Thetas::new(w + 1);
                Ok(&th.quotient(8, mi + ji, 2 * mi + 2 * ni + 3)? * &eisenstein_e2(w + 1).pow(li - ji)?)
            })?;
            let vk = kernel.valuation().unwrap_or_else(Rational::zero);
            let f = f_t(t, crate::arith::ceil_i64(&-vk) + 1)?;
            let prod = &kernel * &f;
            total += c * prod.constant_term()?;
        }
    }
    Ok(total)
}

/// `Phi_{k,m,2n}`, zero unless `2(k-1) = m + n`.
pub fn goettsche_phi(k: u64, m: u64, n: u64) -> Result<Rational> {
    if k == 0 || 2 * (k - 1) != m + n {
        return Ok(Rational::zero());
    }
    goettsche_value(m, n)
}

/// The two brackets of the constant-term criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// The summand carrying `F_{2(n-k)}`.
    F,
    /// The summand carrying `(q d/dq)^j Q^+`.
    Q,
}

/// `Lambda(m, n, k, j)` in the original variable, known beyond `q^target`.
fn lambda_raw(side: Side, m: u64, n: u64, k: u64, j: u64, target: &Rational) -> Result<QSeries> {
    if j > k || k > n {
        return Err(Error::ConstraintViolation(format!("need j <= k <= n, got k = {k}, j = {j}, n = {n}")));
    }
    let (mi, ni, ki, ji) = (m as i64, n as i64, k as i64, j as i64);
    let common = sign(j) * factorial(2 * n) / (factorial(n - k) * factorial(j) * factorial(k - j));
    match side {
        Side::F => {
            let c = common * sign(n) / (pow2(ki - 3) * pow3(ki)) * factorial(n - k) / factorial(2 * n - 2 * k);
            let t = 2 * (n - k) as u32;
            at_precision(target, |w| {
                let th = Thetas::new(w + 1);
                let kern = &th.quotient(8, mi + ji, 2 * mi + 2 * ni + 3)? * &eisenstein_e2(w + 1).pow(ki - ji)?;
                let f = f_t(t, w + 1)?;
                Ok((&kern * &f).scale(&c))
            })
        }
        Side::Q => {
            let c = common * sign(k + 1) / (pow2(ni - 2 * ji - 1) * pow3(ni - ji)) * gamma_ratio(j as u32);
            at_precision(target, |w| {
                let th = Thetas::new(w + 1);
                let kern = &th.quotient(9, mi + ni - ki, 2 * mi + 2 * ni + 3)? * &eisenstein_e2(w + 1).pow(ki - ji)?;
                let q = q_plus(w + 1).qdq(j as u32);
                Ok((&kern * &q).scale(&c))
            })
        }
    }
}

/// `Lambda^{(i)}(m, n, k, j; q)` after `q -> q^8`, known below `q^order`.
pub fn lambda_summand(side: Side, m: u64, n: u64, k: u64, j: u64, order: i64) -> Result<QSeries> {
    let raw = lambda_raw(side, m, n, k, j, &rat(order, 8))?;
    Ok(raw.rescale(8, 1).truncate(&int(order)))
}

/// `sum_{k,j} Lambda^{(1)} - Lambda^{(2)}` after `q -> q^8`, known below `q^order`.
pub fn criterion_series(m: u64, n: u64, order: i64) -> Result<QSeries> {
    let mut acc = QSeries::zero(&(), 1, order);
    for k in 0..=n {
        for j in 0..=k {
            acc = acc + lambda_summand(Side::F, m, n, k, j, order)? - lambda_summand(Side::Q, m, n, k, j, order)?;
        }
    }
    Ok(acc)
}

/// True iff the criterion series has vanishing constant term.
pub fn criterion_check(m: u64, n: u64) -> Result<bool> {
    Ok(criterion_series(m, n, 1)?.constant_term()?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d0_first_rows() {
        let (v, c) = uplane_d(0, 0, 0).unwrap();
        assert_eq!(v, int(-1));
        assert_eq!(c.to_string(), "-1/4*H1 + 6*H0");
        let (v, c) = uplane_d(0, 0, 2).unwrap();
        assert_eq!(v, rat(-3, 16));
        assert_eq!(c.to_string(), "-49/64*H2 + 9/4*H1 - 2133/64*H0");
    }

    #[test]
    fn d2_and_d3_first_rows() {
        let (v, c) = uplane_d(2, 0, 0).unwrap();
        assert_eq!(v, int(-3));
        assert_eq!(c.to_string(), "-1/4*H2 + 27/4*H0");
        let (v, c) = uplane_d(3, 0, 0).unwrap();
        assert_eq!(v, rat(-5, 4));
        assert_eq!(c.to_string(), "-1/16*H4 + 3/16*H2 + 3/2*H0");
    }

    #[test]
    fn goettsche_small() {
        assert_eq!(goettsche_phi(1, 0, 0).unwrap(), int(-1));
        assert_eq!(goettsche_phi(2, 0, 2).unwrap(), rat(-3, 16));
        assert_eq!(goettsche_phi(2, 2, 0).unwrap(), rat(-19, 16));
        assert_eq!(goettsche_phi(3, 0, 2).unwrap(), int(0));
    }

    #[test]
    fn direct_pairing_matches_combo() {
        let q = q_plus(4);
        for (m, n) in [(0, 0), (1, 1), (0, 2)] {
            assert_eq!(uplane_d_with(0, m, n, &q).unwrap(), uplane_d(0, m, n).unwrap().0);
        }
    }

    #[test]
    fn lambda_constant_terms() {
        let ct = |side, k, j| lambda_summand(side, 3, 1, k, j, 1).unwrap().constant_term().unwrap();
        assert_eq!(ct(Side::F, 1, 1), rat(-85, 96));
        assert_eq!(ct(Side::Q, 0, 0), rat(-85, 96));
        // the pairing (0,0) against (n,n) does not match at (3,1)
        assert_eq!(ct(Side::F, 0, 0), rat(7, 16));
        assert_eq!(ct(Side::Q, 1, 1), rat(85, 16));
        assert!(lambda_summand(Side::F, 3, 1, 2, 0, 1).is_err());
    }

    #[test]
    fn criterion_small_grid() {
        for (m, n) in [(0, 0), (1, 1), (3, 1), (0, 3)] {
            assert!(criterion_check(m, n).unwrap());
        }
    }

    #[test]
    fn direct_pairing_other_families() {
        let qs = crate::mock::q_transform_s(8).unwrap();
        let minus_q = q_plus(8).scale(&int(-1));
        let half = q_plus(16).rescale(1, 2);
        for (m, n) in [(0, 0), (1, 0), (0, 1), (1, 1), (0, 2)] {
            let d3 = uplane_d(3, m, n).unwrap().0;
            assert_eq!(uplane_d_with(3, m, n, &qs).unwrap(), d3, "({m}, {n})");
            assert_eq!(uplane_d_with(3, m, n, &minus_q).unwrap(), d3, "({m}, {n})");
            assert_eq!(uplane_d_with(2, m, n, &half).unwrap(), uplane_d(2, m, n).unwrap().0, "({m}, {n})");
        }
    }
}
