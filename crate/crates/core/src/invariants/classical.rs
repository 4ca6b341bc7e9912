use num_traits::Zero;
use serde::Serialize;

use crate::arith::{int, rat, Rational};
use crate::check::CheckOutcome;
use crate::error::Result;
use crate::forms::{
    delta, eisenstein_eodd, eisenstein_estar, eta, eta_quotient, form_a38_closed, form_a78_closed, form_b, form_fm,
    form_h, theta_big, vartheta,
};
use crate::mock::{cal_f, cal_q, lerch_mu_weighted, mock_m_lerch};
use crate::series::QSeries;

/// `Z_0 = calQ + 4 calF_0 / Theta_4`, known below `q^order`.
pub fn z0(order: i64) -> Result<QSeries> {
    let f0 = cal_f(0, order)?.div(&theta_big(4, order)?)?;
    Ok(cal_q(order) + f0.scale(&int(4)))
}

/// Outcome of the `Z_0` suite.
#[derive(Debug, Clone, Serialize)]
pub struct Z0Report {
    pub checks: Vec<CheckOutcome>,
    /// Constant terms of `Z_0 f_m` for `m = 0, 1, ...`.
    pub constant_terms: Vec<String>,
}

impl Z0Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }
}

/// Checks `Z_0 = E*(4 tau) / eta(8 tau)^3` below `q^order` and that
/// `Z_0 f_m` has vanishing constant term for `m <= max_m`.
pub fn z0_suite(order: i64, max_m: u32) -> Result<Z0Report> {
    let z = z0(order)?;
    let closed = &eisenstein_estar(order / 4 + 2).rescale(4, 1) * &eta_quotient(&[(8, -3)], order + 1);
    let mut checks = vec![CheckOutcome::compare("Z0 = calQ + 4 calF0/Theta4 = E*(4 tau)/eta(8 tau)^3", &z, &closed)];
    let lead = QSeries::from_rational_terms(1, 12, [(-1, int(1)), (3, int(24)), (7, int(27)), (11, int(168))]);
    checks.push(CheckOutcome::compare("Z0 = q^-1 + 24 q^3 + 27 q^7 + 168 q^11 + ...", &z.truncate(&int(12)), &lead));
    let mut constant_terms = Vec::new();
    for m in 0..=max_m {
        let zm = z0(2 * m as i64 + 5)?;
        let prod = &zm * &form_fm(m, 2);
        let ct = prod.constant_term()?;
        checks.push(CheckOutcome::flag(format!("CT(Z0 f_{m}) = 0"), ct.is_zero(), || format!("constant term {ct}")));
        constant_terms.push(ct.to_string());
    }
    Ok(Z0Report { checks, constant_terms })
}

/// `Z_0 f_m` known below `q^order`.
pub fn z0_times_fm(m: u32, order: i64) -> Result<QSeries> {
    let z = z0(order + 2 * m as i64 + 4)?;
    Ok((&z * &form_fm(m, order + 2)).truncate(&int(order)))
}

/// Identities satisfied by `h = eta(2 tau)^4 / eta(4 tau)^8 E*(2 tau)`.
pub fn h_suite(order: i64) -> Vec<CheckOutcome> {
    let work = order + 2;
    let h = form_h(work);
    let h2 = &h * &h;
    let c64 = QSeries::one(&(), work).scale(&int(64));
    let ratio = delta(2 * work).rescale(2, 1).div(&delta(work).rescale(4, 1)).expect("eta power is a unit");
    let eodd = eisenstein_eodd(work);
    let estar2 = eisenstein_estar(work / 2 + 2).rescale(2, 1);
    let dh = h.qdq(1);
    vec![
        CheckOutcome::compare("Delta(2 tau)/Delta(4 tau) = h^2 - 64", &ratio.truncate(&int(order)), &(&h2 - &c64)),
        CheckOutcome::compare(
            "q dh/dq = -E*(2 tau) h + 64 E_odd",
            &dh,
            &(&(&estar2 * &h).scale(&int(-1)) + &eodd.scale(&int(64))),
        ),
        CheckOutcome::compare("q dh/dq = -E_odd (h^2 - 64)", &dh, &(&eodd * &(&h2 - &c64)).scale(&int(-1))),
    ]
}

/// `calQ = -(7/2) A_{3,8} + (3/2) A_{7,8} - (1/2) B + 4 M` with `M` as a
/// difference of Appell-Lerch sums, and `calF_t / Theta_4` as a derivative
/// of one.
pub fn mock_identities(order: i64, ts: &[u32]) -> Result<Vec<CheckOutcome>> {
    let lhs = cal_q(order);
    let rhs = form_a38_closed(order).scale(&rat(-7, 2)) + form_a78_closed(order).scale(&rat(3, 2))
        - form_b(order).scale(&rat(1, 2))
        + mock_m_lerch(order)?.scale(&int(4));
    let mut out = vec![CheckOutcome::compare("calQ as Appell-Lerch sums and eta quotients", &lhs, &rhs)];
    for &t in ts {
        let f = cal_f(t, order)?.div(&theta_big(4, order)?)?;
        out.push(CheckOutcome::compare(format!("calF_{t}/Theta4 = (1/2) D^{t} mu"), &f, &lerch_mu_weighted(t, order)?));
    }
    Ok(out)
}

/// Jacobi's identities and the eta-quotient forms of the theta functions.
pub fn theta_identities(order: i64) -> Vec<CheckOutcome> {
    let t2 = vartheta(2, order).expect("index");
    let t3 = vartheta(3, order).expect("index");
    let t4 = vartheta(4, order).expect("index");
    let p = |s: &QSeries, k| s.pow(k).expect("pow");
    let big = |w| theta_big(w, order + 4).expect("index");
    let (b2, b3, b4) = (big(2), big(3), big(4));
    vec![
        CheckOutcome::compare("vartheta3^4 = vartheta2^4 + vartheta4^4", &p(&t3, 4), &(p(&t2, 4) + p(&t4, 4))),
        CheckOutcome::compare(
            "2 eta^3 = vartheta2 vartheta3 vartheta4",
            &p(&eta(order), 3).scale(&int(2)),
            &(&(&t2 * &t3) * &t4),
        ),
        CheckOutcome::compare(
            "E_odd = eta(4 tau)^8 / eta(2 tau)^4",
            &eisenstein_eodd(order),
            &eta_quotient(&[(4, 8), (2, -4)], order),
        ),
        CheckOutcome::compare(
            "16 Theta2^4 + Theta3^4 = E*(4 tau)",
            &(p(&b2, 4).scale(&int(16)) + p(&b3, 4)).truncate(&int(order)),
            &eisenstein_estar(order / 4 + 2).rescale(4, 1).truncate(&int(order)),
        ),
        CheckOutcome::compare(
            "Theta4^9 / (eta(8 tau)^3 Theta2^3 Theta3^3) = Delta(4 tau)/Delta(8 tau)",
            &p(&b4, 9)
                .div(&(&eta_quotient(&[(8, 3)], order + 8) * &p(&(&b2 * &b3), 3)))
                .expect("unit")
                .truncate(&int(order)),
            &eta_quotient(&[(4, 24), (8, -24)], order),
        ),
        CheckOutcome::compare(
            "1 / (Theta2 Theta3)^2 = eta(4 tau)^4 / eta(8 tau)^8",
            &p(&(&b2 * &b3), -2).truncate(&int(order)),
            &eta_quotient(&[(4, 4), (8, -8)], order),
        ),
    ]
}

/// Hurwitz class number `H(n)`: reduced forms of discriminant `-n`, with
/// the classes of `x^2 + y^2` and `x^2 + xy + y^2` weighted `1/2` and `1/3`.
pub fn hurwitz_number(n: u64) -> Rational {
    if n == 0 {
        return rat(-1, 12);
    }
    if n % 4 == 1 || n % 4 == 2 {
        return Rational::zero();
    }
    let n = n as i64;
    let mut total = Rational::zero();
    let mut a = 1i64;
    while 3 * a * a <= n {
        for b in -a..=a {
            let num = b * b + n;
            if num % (4 * a) != 0 {
                continue;
            }
            let c = num / (4 * a);
            if c < a || (b < 0 && (-b == a || a == c)) {
                continue;
            }
            total += if a == c && b == 0 {
                rat(1, 2)
            } else if a == c && b == a {
                rat(1, 3)
            } else {
                int(1)
            };
        }
        a += 1;
    }
    total
}

/// `H(0), ..., H(nmax)`.
pub fn hurwitz(nmax: u64) -> Vec<Rational> {
    (0..=nmax).map(hurwitz_number).collect()
}

/// `Z^+ / eta^6` with `Z^+ = q^(-1/4) sum_k 3 H(4k - 1) q^k`, known below
/// `q^(kmax + 1/2)`.
pub fn vafa_witten_series(kmax: i64) -> QSeries {
    vafa_witten_from(kmax, |k| int(3) * hurwitz_number(4 * k as u64 - 1))
}

fn vafa_witten_from(kmax: i64, coeff: impl Fn(i64) -> Rational) -> QSeries {
    let prec = kmax.max(1) + 1;
    let z = QSeries::from_rational_terms(1, prec, (1..prec).map(|k| (k, coeff(k))));
    let z = if z.is_zero() { QSeries::zero(&(), 1, prec) } else { z };
    let p6 = eta_quotient(&[(1, 6)], prec).shift(&rat(-1, 4));
    z.div(&p6).expect("eta power is a unit").shift(&rat(-1, 2))
}
