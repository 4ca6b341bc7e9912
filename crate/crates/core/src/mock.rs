//! Holomorphic parts of the mock modular objects: `F_t`, `M`, the
//! Appell-Lerch sum `mu`, the mock theta series `Q`, and its image under
//! `tau -> -1/tau`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::arith::{ceil_i64, int, rat, CycloElem, CycloField, Rational, Scalar};
use crate::error::{Error, Result};
use crate::forms::{self, eta_quotient, theta_big};
use crate::series::QSeries;

fn check_even(t: u32) -> Result<()> {
    if t % 2 == 1 {
        Err(Error::OddT(t))
    } else {
        Ok(())
    }
}

/// `calF_t(q) = F_t(q^8) = sum_{b >= 0, a > b} (-1)^(a+b) (2b+1)^t q^(4a^2 - (2b+1)^2)`.
pub fn cal_f(t: u32, order: i64) -> Result<QSeries> {
    check_even(t)?;
    let mut terms = Vec::new();
    let mut b: i64 = 0;
    // smallest exponent for a given b sits at a = b + 1 and equals 4b + 3
    while 4 * b + 3 < order {
        let w = Rational::from_integer(BigInt::from(2 * b + 1).pow(t));
        let mut a = b + 1;
        loop {
            let e = 4 * a * a - (2 * b + 1) * (2 * b + 1);
            if e >= order {
                break;
            }
            let c = if (a + b) % 2 == 0 { w.clone() } else { -w.clone() };
            terms.push((e, c));
            a += 1;
        }
        b += 1;
    }
    let s = QSeries::from_rational_terms(1, order, terms);
    Ok(if s.is_zero() { QSeries::zero(&(), 1, order) } else { s })
}

/// `F_t = q^(-1/8) sum (-1)^(a+b) (2b+1)^t q^((a^2 - b(b+1))/2)`.
pub fn f_t(t: u32, order: i64) -> Result<QSeries> {
    Ok(cal_f(t, 8 * order)?.rescale(1, 8))
}

/// The q-hypergeometric series
/// `M = q^(-1) sum_n (-1)^(n+1) q^(8(n+1)^2) prod_{k<=n}(1-q^(16k-8)) / prod_{k<=n+1}(1+q^(16k-8))^2`.
pub fn mock_m(order: i64) -> QSeries {
    let mut acc = QSeries::zero(&(), 1, order);
    let work = order + 1;
    let one = QSeries::one(&(), work);
    let mut num = one.clone();
    let mut den = one.clone();
    let mut n: i64 = 0;
    while 8 * (n + 1) * (n + 1) - 1 < order {
        if n > 0 {
            let f = QSeries::from_rational_terms(1, work, [(0, int(1)), (16 * n - 8, int(-1))]);
            num = &num * &f;
        }
        let g = QSeries::from_rational_terms(1, work, [(0, int(1)), (16 * (n + 1) - 8, int(1))]);
        den = &den * &(&g * &g);
        let sign = if n % 2 == 0 { -1 } else { 1 };
        let term = num.div(&den).expect("unit").shift(&int(8 * (n + 1) * (n + 1) - 1)).scale(&int(sign));
        acc = &acc + &term;
        n += 1;
    }
    acc.truncate_w(order)
}

/// `M = -1/(2 Theta_2) sum_{n in Z} q^(16n^2 - 8n) / (1 + q^(16n - 8))`.
pub fn mock_m_whipple(order: i64) -> QSeries {
    let bound = order + 1;
    let mut terms = Vec::new();
    let mut n: i64 = 1;
    while 16 * n * n - 8 * n < bound {
        let (base, step) = (16 * n * n - 8 * n, 16 * n - 8);
        let mut k = 0;
        while base + k * step < bound {
            terms.push((base + k * step, int(if k % 2 == 0 { 1 } else { -1 })));
            k += 1;
        }
        n += 1;
    }
    let mut n: i64 = 0;
    loop {
        let step = 8 - 16 * n;
        let base = 16 * n * n - 8 * n + step;
        if base >= bound {
            break;
        }
        let mut k = 0;
        while base + k * step < bound {
            terms.push((base + k * step, int(if k % 2 == 0 { 1 } else { -1 })));
            k += 1;
        }
        n -= 1;
    }
    let s = QSeries::from_rational_terms(1, bound, terms);
    let t2 = theta_big(2, order + 2).expect("valid index");
    s.div(&t2).expect("Theta_2 is invertible").scale(&rat(-1, 2)).truncate_w(order)
}

/// `u = u_rat + u_tau tau`, `v = v_rat + v_tau tau`, modular argument `tau_mult tau`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LerchSpec {
    pub u_rat: Rational,
    pub u_tau: Rational,
    pub v_rat: Rational,
    pub v_tau: Rational,
    pub tau_mult: Rational,
}

impl LerchSpec {
    pub fn new(u_rat: Rational, u_tau: Rational, v_rat: Rational, v_tau: Rational, tau_mult: Rational) -> Self {
        assert!(tau_mult.is_positive(), "modular argument must be a positive multiple of tau");
        LerchSpec { u_rat, u_tau, v_rat, v_tau, tau_mult }
    }

    fn ramification(&self) -> u64 {
        let d = |x: Rational| x.denom().to_u64().expect("denominator fits");
        let two = int(2);
        d(&self.u_tau / &two).lcm(&d(&self.v_tau / &two)).lcm(&d(&self.tau_mult / int(8)))
    }
}

fn w_of(e: &Rational, ram: u64) -> i64 {
    let x = e * Rational::from_integer(BigInt::from(ram));
    debug_assert!(x.is_integer());
    x.to_integer().to_i64().expect("exponent fits")
}

/// Indices of a convex integer sequence `f` whose values lie below `bound`,
/// searched outward from `start`.
fn convex_range(start: i64, bound: &Rational, f: impl Fn(i64) -> Rational) -> Vec<i64> {
    let mut out = Vec::new();
    for dir in [1i64, -1] {
        let mut n = if dir == 1 { start } else { start - 1 };
        let mut prev: Option<Rational> = None;
        loop {
            let v = f(n);
            let rising = prev.as_ref().is_some_and(|p| &v > p);
            if &v >= bound && rising {
                break;
            }
            if &v < bound {
                out.push(n);
            }
            // guard against a flat sequence that never rises
            if (n - start).abs() > 1_000_000 {
                break;
            }
            prev = Some(v);
            n += dir;
        }
    }
    out.sort_unstable();
    out
}

/// `theta(v; tau') = sum_{nu in Z + 1/2} (-1)^(nu - 1/2) b^nu q'^(nu^2/2)`, known below `q^bound`.
fn lerch_theta(spec: &LerchSpec, bound: &Rational, ram: u64, field: &Arc<CycloField>) -> Result<QSeries<CycloElem>> {
    let half = rat(1, 2);
    let expo = |j: i64| {
        let nu = int(j) + &half;
        &nu * &spec.v_tau + &spec.tau_mult * &nu * &nu / int(2)
    };
    let start = ceil_i64(&(-&spec.v_tau / &spec.tau_mult - &half));
    let mut terms = Vec::new();
    for j in convex_range(start, bound, expo) {
        let nu = int(j) + &half;
        let mut c = field.exp_2pi_i(&(&nu * &spec.v_rat))?;
        if j.is_odd() {
            c = c.negated();
        }
        terms.push((w_of(&expo(j), ram), c));
    }
    let s = QSeries::from_terms(field, ram, w_of(bound, ram), terms);
    Ok(s)
}

/// `a^(1/2) sum_n (-b)^n q'^(n(n+1)/2) / (1 - a q'^n)`, each geometric
/// expansion weighted by `((k + 1/2) u_omega)^t` on the power `a^(k+1/2)`.
fn lerch_numerator(
    spec: &LerchSpec,
    weight: Option<(&Rational, u32)>,
    bound: &Rational,
    ram: u64,
    field: &Arc<CycloField>,
) -> Result<QSeries<CycloElem>> {
    let half = rat(1, 2);
    let base_exp = |n: i64| {
        let nn = int(n);
        &spec.u_tau / int(2) + &nn * &spec.v_tau + &spec.tau_mult * &nn * (&nn + int(1)) / int(2)
    };
    let step = |n: i64| &spec.u_tau + &spec.tau_mult * int(n);
    let lowest = |n: i64| {
        let e = step(n);
        if e.is_negative() {
            base_exp(n) - e
        } else {
            base_exp(n)
        }
    };
    let wt = |k_half: &Rational| -> Rational {
        match weight {
            Some((uw, t)) => num_traits::pow(k_half * uw, t as usize),
            None => int(1),
        }
    };
    let vertex = -(&spec.v_tau + &spec.tau_mult / int(2)) / &spec.tau_mult;
    let mut terms: Vec<(i64, CycloElem)> = Vec::new();
    for n in convex_range(vertex.round().to_integer().to_i64().expect("fits"), bound, lowest) {
        let mut pre = field.exp_2pi_i(&(int(n) * &spec.v_rat))?;
        if n.is_odd() {
            pre = pre.negated();
        }
        let x = base_exp(n);
        let e = step(n);
        if e.is_zero() {
            let c = field.exp_2pi_i(&spec.u_rat)?;
            if c == CycloElem::one_in(field) {
                return Err(Error::NonExpandableDenominator(n));
            }
            if let Some((uw, t)) = weight {
                if t > 0 && !uw.is_zero() {
                    return Err(Error::NonExpandableDenominator(n));
                }
            }
            let coeff = pre
                .times(&field.exp_2pi_i(&(&spec.u_rat * &half))?)
                .times(&CycloElem::one_in(field).minus(&c).inverse()?);
            terms.push((w_of(&x, ram), coeff.scale(&wt(&half))));
        } else if e.is_positive() {
            let mut k = 0i64;
            loop {
                let ex = &x + &e * int(k);
                if &ex >= bound {
                    break;
                }
                let kh = int(k) + &half;
                let c = field.exp_2pi_i(&(&spec.u_rat * &kh))?;
                terms.push((w_of(&ex, ram), pre.times(&c).scale(&wt(&kh))));
                k += 1;
            }
        } else {
            let mut k = 1i64;
            loop {
                let ex = &x - &e * int(k);
                if &ex >= bound {
                    break;
                }
                let kh = &half - int(k);
                let c = field.exp_2pi_i(&(&spec.u_rat * &kh))?;
                terms.push((w_of(&ex, ram), pre.times(&c).scale(&wt(&kh)).negated()));
                k += 1;
            }
        }
    }
    Ok(QSeries::from_terms(field, ram, w_of(bound, ram), terms))
}

fn lerch_general(
    spec: &LerchSpec,
    weight: Option<(&Rational, u32)>,
    order: i64,
    field: &Arc<CycloField>,
) -> Result<QSeries<CycloElem>> {
    let ram = spec.ramification();
    let target = int(order);
    // locate the true valuation of theta
    let half = rat(1, 2);
    let nu_star = -&spec.v_tau / &spec.tau_mult;
    let raw_min = {
        let j = nu_star.floor() - &half;
        let f = |nu: &Rational| nu * &spec.v_tau + &spec.tau_mult * nu * nu / int(2);
        let a = f(&j);
        let b = f(&(&j + int(1)));
        let c = f(&(&j - int(1)));
        a.min(b).min(c)
    };
    let mut span = int(4) * &spec.tau_mult;
    let theta_val = loop {
        let th = lerch_theta(spec, &(&raw_min + &span), ram, field)?;
        if let Some(v) = th.valuation() {
            break v;
        }
        if span > int(64) * &spec.tau_mult {
            return Err(Error::ThetaNotInvertible);
        }
        span *= int(2);
    };
    // lowest exponent any numerator term can have
    let n_probe = |n: i64| {
        let nn = int(n);
        let e = &spec.u_tau + &spec.tau_mult * &nn;
        let b = &spec.u_tau / int(2) + &nn * &spec.v_tau + &spec.tau_mult * &nn * (&nn + int(1)) / int(2);
        if e.is_negative() {
            b - e
        } else {
            b
        }
    };
    let vertex =
        (-(&spec.v_tau + &spec.tau_mult / int(2)) / &spec.tau_mult).round().to_integer().to_i64().expect("fits");
    let min_l = (vertex - 3..=vertex + 3).map(n_probe).min().expect("nonempty");
    let rel = &target - (&min_l - &theta_val);
    let rel = if rel.is_positive() { rel } else { int(1) };
    let rel = Rational::from_integer(rel.ceil().to_integer());
    let theta = lerch_theta(spec, &(&theta_val + &rel), ram, field)?;
    let numer = lerch_numerator(spec, weight, &(&min_l + &rel), ram, field)?;
    let out = numer.div(&theta).map_err(|e| match e {
        Error::NotInvertible => Error::ThetaNotInvertible,
        other => other,
    })?;
    Ok(out.truncate(&target))
}

/// Zwegers' `mu(u, v; tau')` expanded in q with cyclotomic coefficients.
pub fn lerch_mu(spec: &LerchSpec, order: i64, field: &Arc<CycloField>) -> Result<QSeries<CycloElem>> {
    lerch_general(spec, None, order, field)
}

/// `D_omega^t mu(u + u_omega * omega, v; tau')` at `omega = 0`, with
/// `D_omega = (2 pi i)^(-1) d/d omega`.
pub fn lerch_mu_derivative(
    spec: &LerchSpec,
    u_omega: &Rational,
    t: u32,
    order: i64,
    field: &Arc<CycloField>,
) -> Result<QSeries<CycloElem>> {
    lerch_general(spec, Some((u_omega, t)), order, field)
}

/// `(1/2) D_omega^t mu(4 tau + 2 omega, 4 tau; 8 tau)` at `omega = 0`.
pub fn lerch_mu_weighted(t: u32, order: i64) -> Result<QSeries> {
    check_even(t)?;
    let spec = LerchSpec::new(int(0), int(4), int(0), int(4), int(8));
    let field = CycloField::new(1);
    let s = lerch_mu_derivative(&spec, &int(2), t, order, &field)?;
    Ok(s.to_rational()?.scale(&rat(1, 2)))
}

/// `M = (i/2) q^(-1) [mu(-16 tau, -24 tau - 1/2; 32 tau) - mu(-16 tau, -8 tau - 1/2; 32 tau)]`.
///
/// With `theta` normalized by `(-1)^(nu - 1/2) b^nu` and `b^nu = e^(2 pi i nu v)`,
/// `q theta(-8 tau - 1/2; 32 tau) = -i Theta_2`, hence the prefactor `+i/2`.
pub fn mock_m_lerch(order: i64) -> Result<QSeries> {
    let field = CycloField::new(4);
    let spec = |v_tau: i64| LerchSpec::new(int(0), int(-16), rat(-1, 2), int(v_tau), int(32));
    let a = lerch_mu(&spec(-24), order + 1, &field)?;
    let b = lerch_mu(&spec(-8), order + 1, &field)?;
    let i = field.root_of_unity(4, 1)?;
    let s = (&a - &b).scale_by(&i).scale(&rat(1, 2)).shift(&int(-1));
    s.to_rational()
}

/// `calQ = -(7/2) A_{3,8} + (3/2) A_{7,8} - (1/2) B + 4 M`.
pub fn cal_q(order: i64) -> QSeries {
    forms::form_a38(order).scale(&rat(-7, 2)) + forms::form_a78(order).scale(&rat(3, 2))
        - forms::form_b(order).scale(&rat(1, 2))
        + mock_m(order).scale(&int(4))
}

/// `Q^+(tau) = calQ(tau/8) = q^(-1/8) sum H_a q^(a/2)`.
pub fn q_plus(order: i64) -> QSeries {
    cal_q(8 * order).rescale(1, 8)
}

/// `H_0, ..., H_{n-1}`.
pub fn h_coefficients(n: usize) -> Vec<Rational> {
    let q = cal_q(4 * n as i64);
    (0..n as i64).map(|a| q.coeff_w(4 * a - 1).expect("inside window")).collect()
}

/// `Q^+` rebuilt from a coefficient list: `q^(-1/8) sum_a H_a q^(a/2)` known
/// below `q^(-1/8 + len/2)`.
pub fn q_plus_from_h(h: &[Rational]) -> QSeries {
    let terms = h.iter().enumerate().map(|(a, c)| (4 * a as i64 - 1, c.clone()));
    QSeries::from_rational_terms(8, 4 * h.len() as i64 - 1, terms)
}

/// `eta(tau/d)^r`-type factors: `prod eta(d_i tau / s)^(r_i)` known below `q^order`.
fn eta_scaled(factors: &[(u64, i64)], s: u64, order: i64) -> QSeries {
    eta_quotient(factors, order * s as i64).rescale(1, s)
}

/// Holomorphic part of `M(-1/tau) / sqrt(-i tau)`:
/// `(zeta_8/4) q^(-1/32) mu(1/2, 1/4 - tau/8; tau/4) + (zeta_8^(-1)/4) q^(-1/32) mu(1/2, 3/4 - tau/8; tau/4)`.
///
/// The overall sign is the one matching the `theta` normalization used by
/// [`lerch_mu`], as in [`mock_m_lerch`].
pub fn mock_m_s(order: i64, field: &Arc<CycloField>) -> Result<QSeries<CycloElem>> {
    let spec = |v_rat: Rational| LerchSpec::new(rat(1, 2), int(0), v_rat, rat(-1, 8), rat(1, 4));
    let work = order + 1;
    let a = lerch_mu(&spec(rat(1, 4)), work, field)?;
    let b = lerch_mu(&spec(rat(3, 4)), work, field)?;
    let z = field.root_of_unity(8, 1)?;
    let zi = field.root_of_unity(8, -1)?;
    let s = (a.scale_by(&z) + b.scale_by(&zi)).scale(&rat(1, 4)).shift(&rat(-1, 32));
    Ok(s.truncate(&int(order)))
}

/// S-images of the eta-quotient pieces of `Q`:
/// `(A_{3,8}^S, A_{7,8}^S, B^S)`.
pub fn eta_pieces_s(order: i64) -> (QSeries, QSeries, QSeries) {
    let a38 = eta_scaled(&[(1, 8), (2, -7)], 2, order).scale(&rat(-1, 2));
    let b = eta_scaled(&[(2, 5), (1, -4)], 2, order).scale(&int(4));
    let a78 = &b + &eta_scaled(&[(1, 8), (4, -3), (2, -4)], 4, order).scale(&rat(1, 2));
    (a38, a78, b)
}

/// `Q(-1/tau) / sqrt(-i tau)`, holomorphic part, assembled from the
/// transformed eta quotients and the two mu-specializations for `M`.
pub fn q_transform_s(order: i64) -> Result<QSeries> {
    let field = CycloField::default_field();
    let (a38, a78, b) = eta_pieces_s(order);
    let eta_part = a38.scale(&rat(-7, 2)) + a78.scale(&rat(3, 2)) - b.scale(&rat(1, 2));
    let m = mock_m_s(order, &field)?.scale(&int(4));
    let total = &eta_part.to_cyclo(&field) + &m;
    Ok(total.to_rational()?.reduce_ram())
}

/// `rho^4 = 4 eta(2 tau)^8 / eta(tau)^8`.
pub fn rho4(order: i64) -> QSeries {
    eta_quotient(&[(2, 8), (1, -8)], order).scale(&int(4))
}

/// The `(i, j)` summand `Gamma(1/2)/Gamma(1/2+j) 2^(2j) 3^j E_2^(i-j) (q d/dq)^j Q^+`.
pub fn e_bracket(i: u32, j: u32, order: i64) -> Result<QSeries> {
    if j > i {
        return Err(Error::ConstraintViolation(format!("e_bracket needs j <= i, got ({i}, {j})")));
    }
    let c = forms::gamma_ratio(j) * Rational::from_integer(BigInt::from(12u32).pow(j));
    let e2 = forms::eisenstein_e2(order + 1).pow((i - j) as i64)?;
    let q = q_plus(order).qdq(j);
    Ok((&e2 * &q).scale(&c).truncate(&int(order)))
}

/// Both sides of the S-duality relation at series level, in `Q(zeta_24)`:
/// `Q_S - 14 eta / rho^4(tau/2)` and `-zeta_8 Q^+(tau + 1)`.
pub fn s_duality_sides(order: i64) -> Result<(QSeries<CycloElem>, QSeries<CycloElem>)> {
    let field = CycloField::default_field();
    let qs = q_transform_s(order)?;
    let work = order + 1;
    let inv_rho_half = eta_scaled(&[(1, 8)], 2, work).div(&forms::eta(work).pow(8)?)?.scale(&rat(1, 4));
    let lhs = qs - (&forms::eta(work) * &inv_rho_half).scale(&int(14));
    let z8 = field.root_of_unity(8, 1)?;
    let rhs = q_plus(order).to_cyclo(&field).shift_tau(1)?.scale_by(&z8.negated());
    Ok((lhs.truncate(&int(order)).to_cyclo(&field), rhs))
}

/// Named holomorphic mock series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MockLabel {
    QPlus,
    CalQ,
    M,
    QTransformS,
    Ft(u32),
    CalFt(u32),
}

/// A holomorphic mock series together with its label.
#[derive(Debug, Clone, PartialEq)]
pub struct MockSeries {
    pub label: MockLabel,
    pub series: QSeries,
}

impl MockSeries {
    pub fn build(label: MockLabel, order: i64) -> Result<Self> {
        let series = match label {
            MockLabel::QPlus => q_plus(order),
            MockLabel::CalQ => cal_q(order),
            MockLabel::M => mock_m(order),
            MockLabel::QTransformS => q_transform_s(order)?,
            MockLabel::Ft(t) => f_t(t, order)?,
            MockLabel::CalFt(t) => cal_f(t, order)?,
        };
        Ok(MockSeries { label, series })
    }
}
