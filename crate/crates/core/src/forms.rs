//! Classical modular forms as q-series. Every constructor takes the order
//! `n` in q-units and returns a series known at least below `q^n`.

use crate::arith::{int, rat, Rational};
use crate::error::{Error, Result};
use crate::series::QSeries;
use num_bigint::BigInt;

/// `prod_n (1 - q^(d n))`, known below `q^n`.
fn euler_product(d: u64, n: i64) -> QSeries {
    let d = d as i64;
    let mut terms = Vec::new();
    terms.push((0, int(1)));
    let mut k: i64 = 1;
    loop {
        let a = d * k * (3 * k - 1) / 2;
        let b = d * k * (3 * k + 1) / 2;
        if a >= n {
            break;
        }
        let sign = if k % 2 == 0 { 1 } else { -1 };
        terms.push((a, int(sign)));
        if b < n {
            terms.push((b, int(sign)));
        }
        k += 1;
    }
    QSeries::from_rational_terms(1, n.max(1), terms)
}

/// `prod eta(d tau)^r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaQuotient {
    pub factors: Vec<(u64, i64)>,
}

impl EtaQuotient {
    pub fn new(factors: &[(u64, i64)]) -> Self {
        assert!(!factors.is_empty(), "empty eta quotient");
        assert!(factors.iter().all(|&(d, _)| d > 0), "eta argument must be positive");
        EtaQuotient { factors: factors.to_vec() }
    }

    /// `sum d r / 24`.
    pub fn valuation(&self) -> Rational {
        let s: i64 = self.factors.iter().map(|&(d, r)| d as i64 * r).sum();
        rat(s, 24)
    }

    pub fn eval(&self, order: i64) -> QSeries {
        let v = self.valuation();
        let rel = crate::arith::ceil_i64(&(int(order) - &v)).max(1);
        let mut acc = QSeries::one(&(), rel);
        for &(d, r) in &self.factors {
            let p = euler_product(d, rel).pow(r).expect("euler product is a unit");
            acc = &acc * &p;
        }
        acc.shift(&v).reduce_ram()
    }
}

pub fn eta_quotient(factors: &[(u64, i64)], order: i64) -> QSeries {
    EtaQuotient::new(factors).eval(order)
}

/// `eta(tau) = q^(1/24) prod (1 - q^n)`.
pub fn eta(order: i64) -> QSeries {
    eta_quotient(&[(1, 1)], order)
}

fn which_ok(which: u8) -> Result<()> {
    if (2..=4).contains(&which) {
        Ok(())
    } else {
        Err(Error::ConstraintViolation(format!("theta index must be 2, 3 or 4, got {which}")))
    }
}

/// `Theta_2 = sum q^((2n+1)^2)`, `Theta_3 = sum q^(4n^2)`, `Theta_4 = sum (-1)^n q^(4n^2)`.
pub fn theta_big(which: u8, order: i64) -> Result<QSeries> {
    which_ok(which)?;
    let mut terms = Vec::new();
    if which == 2 {
        let mut n = 0i64;
        while (2 * n + 1) * (2 * n + 1) < order {
            terms.push(((2 * n + 1) * (2 * n + 1), int(1)));
            n += 1;
        }
    } else {
        terms.push((0, int(1)));
        let mut n = 1i64;
        while 4 * n * n < order {
            let c = if which == 4 && n % 2 == 1 { -2 } else { 2 };
            terms.push((4 * n * n, int(c)));
            n += 1;
        }
    }
    Ok(QSeries::from_rational_terms(1, order, terms))
}

/// `vartheta_2 = 2 Theta_2(tau/8)`, `vartheta_{3,4} = Theta_{3,4}(tau/8)`.
pub fn vartheta(which: u8, order: i64) -> Result<QSeries> {
    let t = theta_big(which, 8 * order)?.rescale(1, 8);
    Ok(if which == 2 { t.scale(&int(2)) } else { t })
}

fn divisor_series(order: i64, f: impl Fn(i64) -> Option<Rational>) -> Vec<Rational> {
    // s[n] = sum over divisors d of n of f(d)
    let n = order.max(1) as usize;
    let mut s = vec![Rational::from_integer(BigInt::from(0)); n];
    for d in 1..n {
        if let Some(v) = f(d as i64) {
            let mut m = d;
            while m < n {
                s[m] += &v;
                m += d;
            }
        }
    }
    s
}

fn eisenstein(order: i64, c: i64, k: u32) -> QSeries {
    let s = divisor_series(order, |d| Some(int(d.pow(k))));
    let terms =
        std::iter::once((0, int(1))).chain(s.into_iter().enumerate().skip(1).map(|(n, v)| (n as i64, v * int(c))));
    QSeries::from_rational_terms(1, order, terms)
}

/// `E_2 = 1 - 24 sum sigma_1(n) q^n`.
pub fn eisenstein_e2(order: i64) -> QSeries {
    eisenstein(order, -24, 1)
}

pub fn eisenstein_e4(order: i64) -> QSeries {
    eisenstein(order, 240, 3)
}

pub fn eisenstein_e6(order: i64) -> QSeries {
    eisenstein(order, -504, 5)
}

/// `E* = 1 + 24 sum sigma_odd(n) q^n`.
pub fn eisenstein_estar(order: i64) -> QSeries {
    let s = divisor_series(order, |d| (d % 2 == 1).then(|| int(d)));
    let terms =
        std::iter::once((0, int(1))).chain(s.into_iter().enumerate().skip(1).map(|(n, v)| (n as i64, v * int(24))));
    QSeries::from_rational_terms(1, order, terms)
}

/// `E_odd = sum sigma_1(2n+1) q^(2n+1)`.
pub fn eisenstein_eodd(order: i64) -> QSeries {
    let s = divisor_series(order, |d| Some(int(d)));
    let terms = s.into_iter().enumerate().filter(|(n, _)| n % 2 == 1).map(|(n, v)| (n as i64, v));
    let out = QSeries::from_rational_terms(1, order, terms);
    if out.is_zero() {
        QSeries::zero(&(), 1, order)
    } else {
        out
    }
}

/// `Delta = eta^24`.
pub fn delta(order: i64) -> QSeries {
    eta_quotient(&[(1, 24)], order)
}

/// `A = eta(4 tau)^8 / eta(8 tau)^7`.
pub fn form_a(order: i64) -> QSeries {
    eta_quotient(&[(4, 8), (8, -7)], order)
}

/// `B = eta(8 tau)^5 / eta(16 tau)^4`.
pub fn form_b(order: i64) -> QSeries {
    eta_quotient(&[(8, 5), (16, -4)], order)
}

fn sieve_a(order: i64, residue: i64) -> QSeries {
    let a = form_a(order);
    assert_eq!(a.ram(), 1);
    a.sieve_w(8, residue)
}

/// Exponents of `A` congruent to 3 mod 8.
pub fn form_a38(order: i64) -> QSeries {
    sieve_a(order, 3)
}

/// Exponents of `A` congruent to 7 mod 8.
pub fn form_a78(order: i64) -> QSeries {
    sieve_a(order, 7)
}

/// `-8 eta(16 tau)^8 / eta(8 tau)^7`.
pub fn form_a38_closed(order: i64) -> QSeries {
    eta_quotient(&[(16, 8), (8, -7)], order).scale(&int(-8))
}

/// `eta(8 tau)^5 / eta(16 tau)^4 + 32 eta(32 tau)^8 / (eta(8 tau)^3 eta(16 tau)^4)`.
pub fn form_a78_closed(order: i64) -> QSeries {
    form_b(order) + eta_quotient(&[(32, 8), (8, -3), (16, -4)], order).scale(&int(32))
}

/// `h = eta(2 tau)^4 / eta(4 tau)^8 * E*(2 tau)`.
pub fn form_h(order: i64) -> QSeries {
    let q = eta_quotient(&[(2, 4), (4, -8)], order);
    let es = eisenstein_estar(order / 2 + 2).rescale(2, 1);
    &q * &es
}

/// `f_m = Theta_4^9 (16 Theta_2^4 + Theta_3^4)^m / (Theta_2 Theta_3)^(2m+3)`.
pub fn form_fm(m: u32, order: i64) -> QSeries {
    let m = m as i64;
    let work = order + 2 * m + 4;
    let t2 = theta_big(2, work).expect("valid index");
    let t3 = theta_big(3, work).expect("valid index");
    let t4 = theta_big(4, work).expect("valid index");
    let p = t2.pow(4).expect("pow").scale(&int(16)) + t3.pow(4).expect("pow");
    let num = &t4.pow(9).expect("pow") * &p.pow(m).expect("pow");
    let den = (&t2 * &t3).pow(2 * m + 3).expect("pow");
    num.div(&den).expect("theta product is invertible")
}

/// `Gamma(1/2) / Gamma(1/2 + j) = 4^j j! / (2j)!`.
pub fn gamma_ratio(j: u32) -> Rational {
    let num = Rational::from_integer(BigInt::from(4u32).pow(j)) * crate::arith::factorial(j as u64);
    num / crate::arith::factorial(2 * j as u64)
}
