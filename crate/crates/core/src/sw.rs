//! Seiberg-Witten curves of the massless families with `N_f = 0, 2, 3`
//! as q-series, with all factors of `pi` removed.
//!
//! `W` stands for `omega^2 / pi^2`; the Weierstrass data then satisfy
//! `g_2 = E_4 / (12 W^2)`, `g_3 = E_6 / (216 W^3)` and `Delta W^6 = eta^24`.

use crate::arith::{int, rat, Rational};
use crate::check::CheckOutcome;
use crate::error::{Error, Result};
use crate::forms::{delta, eisenstein_e2, eisenstein_e4, eisenstein_e6, vartheta};
use crate::series::QSeries;

/// One of the three modular Seiberg-Witten families.
#[derive(Debug, Clone, PartialEq)]
pub struct SwFamily {
    pub nf: u32,
    pub u: QSeries,
    /// `omega^2 / pi^2`.
    pub omega2: QSeries,
    /// `g_2`, `g_3` and `Delta` as polynomials in `u`.
    pub g2: QSeries,
    pub g3: QSeries,
    pub delta: QSeries,
    pub order: i64,
}

impl SwFamily {
    /// Kodaira type of the fibre at `u = infinity`.
    pub fn kodaira_infinity(&self) -> String {
        format!("I{}*", 4 - self.nf)
    }

    fn kronecker3(&self) -> Rational {
        if self.nf == 3 {
            rat(1, 2)
        } else {
            int(0)
        }
    }
}

fn check_nf(nf: u32) -> Result<()> {
    if matches!(nf, 0 | 2 | 3) {
        Ok(())
    } else {
        Err(Error::UnsupportedFamily(nf))
    }
}

fn poly(u: &QSeries, coeffs: &[Rational]) -> QSeries {
    // Horner evaluation, highest degree first
    let mut acc = QSeries::one(&(), u.prec() / u.ram() as i64 + 1).scale(&coeffs[0]);
    for c in &coeffs[1..] {
        acc = &(&acc * u) + &QSeries::one(&(), acc.prec() / acc.ram() as i64 + 1).scale(c);
    }
    acc
}

fn weierstrass_coeffs(nf: u32) -> (Vec<Rational>, Vec<Rational>) {
    match nf {
        0 => (vec![rat(1, 12), int(0), rat(-1, 16)], vec![rat(1, 216), int(0), rat(-1, 192), int(0)]),
        2 => (vec![rat(1, 12), int(0), rat(1, 4)], vec![rat(1, 216), int(0), rat(-1, 24), int(0)]),
        _ => (vec![rat(1, 12), rat(-5, 4), rat(11, 16)], vec![rat(1, 216), rat(7, 48), rat(-29, 96), rat(7, 64)]),
    }
}

fn discriminant_in_u(nf: u32, u: &QSeries) -> QSeries {
    match nf {
        0 => poly(u, &[rat(1, 4096), int(0), rat(-1, 4096)]),
        2 => {
            let s = poly(u, &[int(1), int(0), int(-1)]);
            (&s * &s).scale(&rat(1, 64))
        }
        _ => {
            let a = poly(u, &[int(2), int(-1)]);
            let b = poly(u, &[int(2), int(1)]);
            (&a * &b.pow(4).expect("pow")).scale(&rat(-1, 512))
        }
    }
}

/// `u^(0) = (1/2)(vartheta_2^4 + vartheta_3^4) / (vartheta_2 vartheta_3)^2` and
/// `omega^2/pi^2 = 2 vartheta_2^2 vartheta_3^2`.
fn pure_su2(order: i64) -> (QSeries, QSeries) {
    let work = order + 2;
    let t2 = vartheta(2, work).expect("index");
    let t3 = vartheta(3, work).expect("index");
    let p = t2.pow(4).expect("pow") + t3.pow(4).expect("pow");
    let sq = (&t2 * &t3).pow(2).expect("pow");
    let u = p.div(&sq).expect("unit").scale(&rat(1, 2));
    (u, sq.scale(&int(2)))
}

/// `u^(0)` evaluated at `-1/tau`: `(1/2)(vartheta_3^4 + vartheta_4^4) / (vartheta_3 vartheta_4)^2`.
pub fn u0_inverted(order: i64) -> QSeries {
    let work = order + 2;
    let t3 = vartheta(3, work).expect("index");
    let t4 = vartheta(4, work).expect("index");
    let p = t3.pow(4).expect("pow") + t4.pow(4).expect("pow");
    p.div(&(&t3 * &t4).pow(2).expect("pow")).expect("unit").scale(&rat(1, 2)).truncate(&int(order))
}

/// Builds the family, with every series known at least below `q^order`.
pub fn sw_family(nf: u32, order: i64) -> Result<SwFamily> {
    check_nf(nf)?;
    let (u, omega2) = match nf {
        0 => pure_su2(order),
        2 => {
            let (u, w) = pure_su2(2 * order);
            (u.rescale(2, 1), w.rescale(2, 1))
        }
        _ => {
            let work = order + 3;
            let t3s = vartheta(3, work)?.pow(2)?;
            let t4s = vartheta(4, work)?.pow(2)?;
            let d2 = (&t3s - &t4s).pow(2)?;
            let u = (&t3s * &t4s).div(&d2)?.scale(&int(-4)) - QSeries::one(&(), work).scale(&rat(1, 2));
            (u, d2.scale(&rat(-1, 4)))
        }
    };
    let u = u.truncate(&int(order));
    let omega2 = omega2.truncate(&int(order));
    let (c2, c3) = weierstrass_coeffs(nf);
    let g2 = poly(&u, &c2);
    let g3 = poly(&u, &c3);
    let delta = discriminant_in_u(nf, &u);
    Ok(SwFamily { nf, u, omega2, g2, g3, delta, order })
}

/// `T = -E_2 / (3 W) + u/3 + delta_{3,N_f}/2`.
#[derive(Debug, Clone, PartialEq)]
pub struct ContactTerm {
    pub t_series: QSeries,
}

pub fn contact_term(fam: &SwFamily) -> Result<ContactTerm> {
    let e2 = eisenstein_e2(fam.order + 2);
    let t = e2.div(&fam.omega2)?.scale(&rat(-1, 3))
        + fam.u.scale(&rat(1, 3))
        + QSeries::one(&(), fam.order + 1).scale(&fam.kronecker3());
    let threshold = rat(1, 4 - fam.nf as i64);
    if t.precision() < threshold {
        return Err(Error::InsufficientPrecision {
            exponent: threshold.to_string(),
            precision: t.precision().to_string(),
        });
    }
    Ok(ContactTerm { t_series: t })
}

/// `A = (a/pi)(omega/pi) = ((N_f+2) u/3 - delta_{3,N_f}/2) W + (4 - N_f) E_2 / 3`
/// together with `2 W^2 q du/dq`; `da/du = omega` is equivalent to
/// `2 W q dA/dq - A q dW/dq = 2 W^2 q du/dq`.
pub fn periods_a(fam: &SwFamily) -> Result<(QSeries, QSeries)> {
    let nf = fam.nf as i64;
    let coeff = fam.u.scale(&rat(nf + 2, 3)) - QSeries::one(&(), fam.order + 1).scale(&fam.kronecker3());
    let e2 = eisenstein_e2(fam.order + 1);
    let a = &(&coeff * &fam.omega2) + &e2.scale(&rat(4 - nf, 3));
    let w = &fam.omega2;
    let lhs = (w * &a.qdq(1)).scale(&int(2)) - &a * &w.qdq(1);
    let rhs = (&(w * w) * &fam.u.qdq(1)).scale(&int(2));
    if lhs.is_zero() && rhs.is_zero() {
        return Err(Error::InsufficientPrecision { exponent: "0".into(), precision: lhs.precision().to_string() });
    }
    Ok((lhs, rhs))
}

/// Runs every identity available for the family.
pub fn sw_checks(nf: u32, order: i64) -> Result<Vec<CheckOutcome>> {
    let fam = sw_family(nf, order)?;
    let work = order + 2;
    let w = &fam.omega2;
    let mut out = Vec::new();
    let disc = fam.g2.pow(3)? - fam.g3.pow(2)?.scale(&int(27));
    out.push(CheckOutcome::compare("discriminant g2^3 - 27 g3^2 = Delta(u)", &disc, &fam.delta));
    out.push(CheckOutcome::compare("Delta W^6 = eta^24", &(&fam.delta * &w.pow(6)?), &delta(work)));
    out.push(CheckOutcome::compare(
        "g2 = E4 / (12 W^2)",
        &fam.g2,
        &eisenstein_e4(work).div(&w.pow(2)?)?.scale(&rat(1, 12)),
    ));
    out.push(CheckOutcome::compare(
        "g3 = E6 / (216 W^3)",
        &fam.g3,
        &eisenstein_e6(work).div(&w.pow(3)?)?.scale(&rat(1, 216)),
    ));
    let t = contact_term(&fam)?.t_series;
    let threshold = rat(1, 4 - nf as i64);
    let below = t.truncate(&threshold);
    out.push(CheckOutcome::compare("contact term T = O(1/u)", &below, &QSeries::zero(&(), 1, 1).truncate(&threshold)));
    let (lhs, rhs) = periods_a(&fam)?;
    out.push(CheckOutcome::compare("da/du = omega", &lhs, &rhs));
    let lead = fam.u.pow(4 - nf as i64)?;
    let c0 = lead.coeff_at(&int(-1))?;
    let expect_c0 = match nf {
        0 => rat(1, 4096),
        2 => rat(1, 64),
        _ => rat(-1, 16),
    };
    out.push(CheckOutcome::flag(
        format!("q = c0 / u^{} with c0 = {}", 4 - nf, expect_c0),
        lead.valuation() == Some(int(-1)) && c0 == expect_c0,
        || format!("leading coefficient of u^{} is {}", 4 - nf, c0),
    ));
    match nf {
        2 => {
            let (u0, _) = pure_su2(2 * order);
            out.push(CheckOutcome::compare("u(2) = u(0) at tau(0) = 2 tau(2)", &fam.u, &u0.rescale(2, 1)));
        }
        3 => {
            let us = u0_inverted(order + 2);
            let one = QSeries::one(&(), order + 2);
            let rhs = QSeries::one(&(), order + 2).scale(&int(-2)).div(&(&us - &one))? - one.scale(&rat(1, 2));
            out.push(CheckOutcome::compare("u(3) = -2/(u(0)(-1/tau) - 1) - 1/2", &fam.u, &rhs));
        }
        _ => {}
    }
    Ok(out)
}
