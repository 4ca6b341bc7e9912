use std::collections::BTreeMap;

use num_traits::Zero;

use super::hcombo::HCombo;
use super::uplane::{goettsche_phi, uplane_d};
use crate::arith::{factorial, int, pow_i, rat, Rational};
use crate::error::{Error, Result};
use crate::series::QSeries;

/// Taylor coefficients `f_{i,2j,2l}` of
/// `exp(x J_1(z)/2 + y^2 J_2(z)/4 + J_3(z))` at `x^i y^(2j) z^(2l)`.
#[derive(Debug, Clone, PartialEq)]
pub struct IndexChernCoeffs {
    pub k: i64,
    pub r: i64,
    /// Keyed by `(i, j, l)` for the coefficient `f_{i,2j,2l}`.
    pub table: BTreeMap<(u32, u32, u32), Rational>,
}

impl IndexChernCoeffs {
    /// `f_{i,2j,2l}`; zero outside the computed range.
    pub fn f(&self, i: u32, j: u32, l: u32) -> Rational {
        self.table.get(&(i, j, l)).cloned().unwrap_or_else(Rational::zero)
    }
}

/// `sum_{n < prec} c(n) t^n`.
fn series_in_t(prec: i64, c: impl Fn(i64) -> Rational) -> QSeries {
    let s = QSeries::from_rational_terms(1, prec, (0..prec).map(|n| (n, c(n))));
    if s.is_zero() {
        QSeries::zero(&(), 1, prec)
    } else {
        s
    }
}

fn alt(n: i64) -> Rational {
    if n % 2 == 0 {
        int(1)
    } else {
        int(-1)
    }
}

/// `f_{i,2j,2l}` for `i <= imax`, `j <= jmax`, `l <= lmax`, as series in `t = z^2`:
/// `J_1 = arctan(z)/z`, `J_2 = (z - arctan z)/z^3`,
/// `J_3 = -((r^2 - k)/2) ln(1 + z^2) + (k - 1/4)(J_1 - 1)`.
pub fn index_chern_coeffs(k: i64, r: i64, imax: u32, jmax: u32, lmax: u32) -> IndexChernCoeffs {
    let prec = lmax as i64 + 1;
    let j1 = series_in_t(prec, |n| alt(n) * rat(1, 2 * n + 1));
    let j2 = series_in_t(prec, |n| alt(n) * rat(1, 2 * n + 3));
    let log1p = series_in_t(prec, |n| if n == 0 { int(0) } else { alt(n + 1) * rat(1, n) });
    let one = QSeries::one(&(), prec);
    let j3 = log1p.scale(&rat(k - r * r, 2)) + (&j1 - &one).scale(&(int(k) - rat(1, 4)));
    let e3 = j3.exp().expect("J_3 vanishes at z = 0");
    let mut table = BTreeMap::new();
    for i in 0..=imax {
        let a = j1.scale(&rat(1, 2)).pow(i as i64).expect("pow").scale(&(int(1) / factorial(i as u64)));
        for j in 0..=jmax {
            let b = j2.scale(&rat(1, 4)).pow(j as i64).expect("pow").scale(&(int(1) / factorial(j as u64)));
            let s = &(&a * &b) * &e3;
            for l in 0..=lmax {
                table.insert((i, j, l), s.coeff_w(l as i64).expect("inside window"));
            }
        }
    }
    IndexChernCoeffs { k, r, table }
}

/// Weights `w_j` of `c_k^{N_f} = sum_j w_j mu(H)^(2j) mu(pt)^(N_f k/2 - j)`.
fn euler_weights(nf: u32, f: &IndexChernCoeffs, kappa: u32) -> Vec<Rational> {
    let g: Vec<Rational> = (0..=kappa).map(|j| f.f(0, j, kappa - j)).collect();
    let mut acc = vec![int(1)];
    for _ in 0..nf {
        let mut next = vec![Rational::zero(); acc.len() + g.len() - 1];
        for (a, x) in acc.iter().enumerate() {
            for (b, y) in g.iter().enumerate() {
                next[a + b] += x * y;
            }
        }
        acc = next;
    }
    acc
}

fn check_shape(nf: u32, k: u64, m: u64, n: u64) -> Result<()> {
    let ok = k.is_multiple_of(2)
        && match nf {
            2 => m + n + 2 == k,
            3 => 2 * m + 2 * n + 4 == k,
            _ => return Err(Error::UnsupportedFamily(nf)),
        };
    if ok {
        Ok(())
    } else {
        Err(Error::ConstraintViolation(format!("(k, m, n) = ({k}, {m}, {n}) is not admissible for N_f = {nf}")))
    }
}

/// `Phi^{N_f,c,0}_{k,m,2n}` with `c = H`, `r = 0`, for arbitrary Chern
/// coefficients and an arbitrary evaluation of `Phi_{k, m', 2n'}`.
#[allow(clippy::too_many_arguments)]
pub fn phi_euler_combo_with<T>(
    nf: u32,
    k: u64,
    m: u64,
    n: u64,
    f: &IndexChernCoeffs,
    mut phi: impl FnMut(u64, u64) -> Result<T>,
    mut axpy: impl FnMut(&mut T, &Rational, &T),
    zero: T,
) -> Result<T> {
    check_shape(nf, k, m, n)?;
    let kappa = (k / 2) as u32;
    let total = nf as u64 * kappa as u64;
    let mut acc = zero;
    for (j, w) in euler_weights(nf, f, kappa).iter().enumerate() {
        if w.is_zero() {
            continue;
        }
        let l = total - j as u64;
        let v = phi(m + l, n + j as u64)?;
        axpy(&mut acc, w, &v);
    }
    Ok(acc)
}

/// `Phi^{N_f,c,0}_{k,m,2n}` from Goettsche's formula.
pub fn phi_euler_combo(nf: u32, k: u64, m: u64, n: u64) -> Result<Rational> {
    let kappa = (k / 2) as u32;
    let f = index_chern_coeffs(k as i64, 0, 0, kappa, kappa);
    phi_euler_combo_with(nf, k, m, n, &f, |a, b| goettsche_phi(k, a, b), |acc, w, v| *acc += w * v, Rational::zero())
}

/// The two sides of `Coeff_{H_k}[D^{N_f}_{m,2n}] = Coeff_{H_k}[2^((N_f+2)k/2) Phi^{N_f,c,0}_{k,m,2n}]`,
/// with `Phi_{k,m',2n'}` expanded in the `H_a` through `D^0_{m',2n'}`.
pub fn euler_leading_h(nf: u32, k: u64, m: u64, n: u64) -> Result<(Rational, Rational)> {
    let kappa = (k / 2) as u32;
    let f = index_chern_coeffs(k as i64, 0, 0, kappa, kappa);
    let combo = phi_euler_combo_with(
        nf,
        k,
        m,
        n,
        &f,
        |a, b| Ok(uplane_d(0, a, b)?.1),
        |acc, w, v| *acc = &*acc + &v.scale(w),
        HCombo::new(),
    )?;
    let d = uplane_d(nf, m, n)?.1;
    let scale = pow_i(&int(2), ((nf as u64 + 2) * k / 2) as i64);
    Ok((d.weight(k as usize), combo.weight(k as usize) * scale))
}
