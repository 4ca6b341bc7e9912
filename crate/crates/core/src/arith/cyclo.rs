use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::Rational;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// The field Q(zeta_N), stored as Q[x] / Phi_N(x).
#[derive(Debug)]
pub struct CycloField {
    order: u64,
    degree: usize,
    // zeta^k reduced, for 0 <= k < order
    powers: Vec<Vec<Rational>>,
}

impl PartialEq for CycloField {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
    }
}

impl CycloField {
    pub fn new(order: u64) -> Arc<CycloField> {
        assert!(order >= 1, "cyclotomic order must be positive");
        let phi = cyclotomic_poly(order);
        let degree = phi.len() - 1;
        let mut powers = Vec::with_capacity(order as usize);
        let mut cur = vec![Rational::zero(); degree];
        cur[0] = Rational::one();
        for _ in 0..order {
            powers.push(cur.clone());
            // multiply by x and reduce with the monic Phi_N
            let top = cur[degree - 1].clone();
            for i in (1..degree).rev() {
                cur[i] = cur[i - 1].clone();
            }
            cur[0] = Rational::zero();
            if !top.is_zero() {
                for i in 0..degree {
                    cur[i] -= &top * Rational::from_integer(phi[i].clone());
                }
            }
        }
        Arc::new(CycloField { order, degree, powers })
    }

    /// Shared instance of Q(zeta_24).
    pub fn default_field() -> Arc<CycloField> {
        static FIELD: OnceLock<Arc<CycloField>> = OnceLock::new();
        FIELD.get_or_init(|| CycloField::new(24)).clone()
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// zeta_n^k; requires n | order.
    pub fn root_of_unity(self: &Arc<Self>, n: u64, k: i64) -> Result<CycloElem> {
        if n == 0 || !self.order.is_multiple_of(n) {
            return Err(Error::IncompatibleOrder { order: self.order, requested: n.to_string() });
        }
        let e = (k * (self.order / n) as i64).rem_euclid(self.order as i64) as usize;
        Ok(CycloElem { field: self.clone(), coeffs: self.powers[e].clone() })
    }

    /// exp(2 pi i * x) for rational x with order * x integral.
    pub fn exp_2pi_i(self: &Arc<Self>, x: &Rational) -> Result<CycloElem> {
        let scaled = x * Rational::from_integer(BigInt::from(self.order));
        if !scaled.is_integer() {
            return Err(Error::IncompatibleOrder { order: self.order, requested: x.to_string() });
        }
        let k = scaled.to_integer().mod_floor(&BigInt::from(self.order)).to_usize().expect("residue fits");
        Ok(CycloElem { field: self.clone(), coeffs: self.powers[k].clone() })
    }

    pub fn from_rational(self: &Arc<Self>, r: Rational) -> CycloElem {
        let mut coeffs = vec![Rational::zero(); self.degree];
        coeffs[0] = r;
        CycloElem { field: self.clone(), coeffs }
    }
}

// Integer coefficients of Phi_n, lowest degree first.
fn cyclotomic_poly(n: u64) -> Vec<BigInt> {
    // x^n - 1 divided by Phi_d for every proper divisor d
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            num = exact_div(&num, &cyclotomic_poly(d));
        }
    }
    num
}

fn exact_div(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let dq = a.len() - 1 - db;
    let mut q = vec![BigInt::zero(); dq + 1];
    for i in (0..=dq).rev() {
        // b is monic
        let c = rem[i + db].clone();
        if !c.is_zero() {
            for (k, bk) in b.iter().enumerate() {
                rem[i + k] -= &c * bk;
            }
        }
        q[i] = c;
    }
    debug_assert!(rem.iter().all(|x| x.is_zero()));
    q
}

/// An element of Q(zeta_N) as coefficients of 1, zeta, ..., zeta^(phi(N)-1).
#[derive(Clone)]
pub struct CycloElem {
    field: Arc<CycloField>,
    coeffs: Vec<Rational>,
}

impl CycloElem {
    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn order(&self) -> u64 {
        self.field.order
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field.order != other.field.order {
            Err(Error::OrderMismatch { left: self.field.order, right: other.field.order })
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Scalar::plus(self, other))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Scalar::minus(self, other))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Scalar::times(self, other))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Scalar::times(self, &Scalar::inverse(other)?))
    }

    fn zip(&self, other: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        assert_eq!(self.field.order, other.field.order, "cyclotomic order mismatch");
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a, b)).collect();
        CycloElem { field: self.field.clone(), coeffs }
    }
}

impl PartialEq for CycloElem {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.coeffs == other.coeffs
    }
}

impl fmt::Debug for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloElem({})", self)
    }
}

impl fmt::Display for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let z = format!("z{}", self.field.order);
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = if c.is_negative() { (true, -c) } else { (false, c.clone()) };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "{z}")?,
                _ => write!(f, "{mag}*{z}")?,
            }
            if i > 1 {
                write!(f, "^{i}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Scalar for CycloElem {
    type Ctx = Arc<CycloField>;

    fn zero_in(ctx: &Self::Ctx) -> Self {
        CycloElem { field: ctx.clone(), coeffs: vec![Rational::zero(); ctx.degree] }
    }
    fn one_in(ctx: &Self::Ctx) -> Self {
        ctx.from_rational(Rational::one())
    }
    fn from_rational(ctx: &Self::Ctx, r: Rational) -> Self {
        ctx.from_rational(r)
    }
    fn ctx(&self) -> Self::Ctx {
        self.field.clone()
    }
    fn vanishes(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
    fn plus(&self, o: &Self) -> Self {
        self.zip(o, |a, b| a + b)
    }
    fn minus(&self, o: &Self) -> Self {
        self.zip(o, |a, b| a - b)
    }
    fn accumulate(&mut self, o: &Self) {
        assert_eq!(self.field.order, o.field.order, "cyclotomic order mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&o.coeffs) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }
    fn times(&self, o: &Self) -> Self {
        assert_eq!(self.field.order, o.field.order, "cyclotomic order mismatch");
        let d = self.field.degree;
        let n = self.field.order as usize;
        let mut raw = vec![Rational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += a * b;
                }
            }
        }
        let mut coeffs: Vec<Rational> = raw[..d].to_vec();
        for (e, c) in raw.iter().enumerate().skip(d) {
            if c.is_zero() {
                continue;
            }
            for (k, p) in self.field.powers[e % n].iter().enumerate() {
                if !p.is_zero() {
                    coeffs[k] += c * p;
                }
            }
        }
        CycloElem { field: self.field.clone(), coeffs }
    }
    fn negated(&self) -> Self {
        CycloElem { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
    fn scale(&self, r: &Rational) -> Self {
        CycloElem { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    // Solve (self * y = 1) as a linear system in the power basis.
    fn inverse(&self) -> Result<Self> {
        if Scalar::vanishes(self) {
            return Err(Error::DivisionByZero);
        }
        let d = self.field.degree;
        let ctx = self.field.clone();
        // column j is self * zeta^j
        let cols: Vec<Vec<Rational>> = (0..d)
            .map(|j| Scalar::times(self, &CycloElem { field: ctx.clone(), coeffs: ctx.powers[j].clone() }).coeffs)
            .collect();
        let mut m: Vec<Vec<Rational>> = (0..d)
            .map(|i| {
                let mut row: Vec<Rational> = (0..d).map(|j| cols[j][i].clone()).collect();
                row.push(if i == 0 { Rational::one() } else { Rational::zero() });
                row
            })
            .collect();
        for c in 0..d {
            let p = (c..d).find(|&r| !m[r][c].is_zero()).ok_or(Error::DivisionByZero)?;
            m.swap(c, p);
            let piv = m[c][c].clone();
            for x in m[c].iter_mut() {
                *x /= &piv;
            }
            for r in 0..d {
                if r != c && !m[r][c].is_zero() {
                    let f = m[r][c].clone();
                    let pivot_row = m[c].clone();
                    for (x, p) in m[r].iter_mut().zip(&pivot_row).skip(c) {
                        *x -= &f * p;
                    }
                }
            }
        }
        Ok(CycloElem { field: ctx, coeffs: m.into_iter().map(|row| row[d].clone()).collect() })
    }

    fn root_of_unity(ctx: &Self::Ctx, num: i64, den: i64) -> Result<Self> {
        ctx.exp_2pi_i(&Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    fn to_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }
}
