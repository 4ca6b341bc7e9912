//! Truncated ramified Laurent series `sum c_m w^m`, `w = q^(1/ram)`.
//!
//! A series knows its coefficients exactly on the window `[lead, prec)` and
//! knows that everything below `lead` vanishes. Nothing is known at or above
//! `prec`. A series that is zero up to its precision has `lead == prec`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{int, CycloElem, CycloField, Rational, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct QSeries<C: Scalar = Rational> {
    ctx: C::Ctx,
    ram: u64,
    lead: i64,
    prec: i64,
    coeffs: Vec<C>,
}

fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

impl<C: Scalar> QSeries<C> {
    /// Dense coefficients for `w^lead, w^(lead+1), ...`; missing entries below
    /// `prec` are zero, entries at or above `prec` are dropped.
    pub fn new(ctx: &C::Ctx, ram: u64, lead: i64, prec: i64, mut coeffs: Vec<C>) -> Self {
        assert!(ram >= 1, "ramification must be positive");
        let len = (prec - lead).max(0) as usize;
        coeffs.truncate(len);
        coeffs.resize(len, C::zero_in(ctx));
        let mut s = QSeries { ctx: ctx.clone(), ram, lead: lead.min(prec), prec, coeffs };
        s.normalize();
        s
    }

    /// Sparse constructor; repeated exponents accumulate.
    pub fn from_terms(ctx: &C::Ctx, ram: u64, prec: i64, terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let terms: Vec<(i64, C)> = terms.into_iter().filter(|(m, _)| *m < prec).collect();
        let lead = terms.iter().map(|(m, _)| *m).min().unwrap_or(prec);
        let mut coeffs = vec![C::zero_in(ctx); (prec - lead) as usize];
        for (m, c) in terms {
            coeffs[(m - lead) as usize].accumulate(&c);
        }
        Self::new(ctx, ram, lead, prec, coeffs)
    }

    pub fn zero(ctx: &C::Ctx, ram: u64, prec: i64) -> Self {
        Self::new(ctx, ram, prec, prec, Vec::new())
    }

    pub fn monomial(ctx: &C::Ctx, ram: u64, m: i64, c: C, prec: i64) -> Self {
        Self::from_terms(ctx, ram, prec, [(m, c)])
    }

    /// The constant 1, known below `q^prec_q`.
    pub fn one(ctx: &C::Ctx, prec_q: i64) -> Self {
        Self::monomial(ctx, 1, 0, C::one_in(ctx), prec_q)
    }

    fn normalize(&mut self) {
        match self.coeffs.iter().position(|c| !c.vanishes()) {
            Some(0) => {}
            Some(k) => {
                self.coeffs.drain(..k);
                self.lead += k as i64;
            }
            None => {
                self.coeffs.clear();
                self.lead = self.prec;
            }
        }
    }

    pub fn ctx(&self) -> &C::Ctx {
        &self.ctx
    }
    pub fn ram(&self) -> u64 {
        self.ram
    }
    pub fn lead(&self) -> i64 {
        self.lead
    }
    pub fn prec(&self) -> i64 {
        self.prec
    }
    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// True when every known coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Exponent (in q) of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<Rational> {
        (!self.is_zero()).then(|| self.q_exp(self.lead))
    }

    /// Exclusive bound (in q) of the known window.
    pub fn precision(&self) -> Rational {
        self.q_exp(self.prec)
    }

    fn q_exp(&self, m: i64) -> Rational {
        Rational::new(BigInt::from(m), BigInt::from(self.ram))
    }

    /// Nonzero terms as `(w-exponent, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.vanishes()).map(move |(i, c)| (self.lead + i as i64, c))
    }

    /// Nonzero terms with exponents in q.
    pub fn q_terms(&self) -> Vec<(Rational, C)> {
        self.terms().map(|(m, c)| (self.q_exp(m), c.clone())).collect()
    }

    /// Coefficient of `w^m`.
    pub fn coeff_w(&self, m: i64) -> Result<C> {
        if m >= self.prec {
            return Err(Error::InsufficientPrecision {
                exponent: self.q_exp(m).to_string(),
                precision: self.precision().to_string(),
            });
        }
        if m < self.lead {
            return Ok(C::zero_in(&self.ctx));
        }
        Ok(self.coeffs[(m - self.lead) as usize].clone())
    }

    /// Coefficient of `q^e`.
    pub fn coeff_at(&self, e: &Rational) -> Result<C> {
        let m = e * Rational::from_integer(BigInt::from(self.ram));
        if !m.is_integer() {
            return Err(Error::IrrepresentableExponent { exponent: e.to_string(), ramification: self.ram });
        }
        let m = m.to_integer().to_i64().expect("exponent out of range");
        self.coeff_w(m)
    }

    pub fn constant_term(&self) -> Result<C> {
        self.coeff_w(0)
    }

    /// Same series written with ramification `r`, a multiple of the current one.
    pub fn with_ram(&self, r: u64) -> Self {
        assert!(r.is_multiple_of(self.ram), "ramification {r} is not a multiple of {}", self.ram);
        let f = (r / self.ram) as i64;
        if f == 1 {
            return self.clone();
        }
        let lead = self.lead * f;
        let prec = self.prec * f;
        let mut coeffs = vec![C::zero_in(&self.ctx); (prec - lead) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * f as usize] = c.clone();
        }
        QSeries { ctx: self.ctx.clone(), ram: r, lead, prec, coeffs }
    }

    /// Smallest ramification that represents the same series.
    pub fn reduce_ram(&self) -> Self {
        let mut g = self.ram;
        g = g.gcd(&(self.prec.unsigned_abs()));
        for (m, _) in self.terms() {
            g = g.gcd(&m.unsigned_abs());
            if g == 1 {
                return self.clone();
            }
        }
        if g <= 1 {
            return self.clone();
        }
        let gi = g as i64;
        let terms: Vec<(i64, C)> = self.terms().map(|(m, c)| (m / gi, c.clone())).collect();
        Self::from_terms(&self.ctx, self.ram / g, self.prec / gi, terms)
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        assert!(self.ctx == other.ctx, "coefficient rings differ");
        let r = lcm(self.ram, other.ram);
        (self.with_ram(r), other.with_ram(r))
    }

    pub fn truncate_w(&self, prec: i64) -> Self {
        if prec >= self.prec {
            return self.clone();
        }
        let keep = (prec - self.lead).max(0) as usize;
        Self::new(&self.ctx, self.ram, self.lead.min(prec), prec, self.coeffs[..keep.min(self.coeffs.len())].to_vec())
    }

    /// Drops everything at or above `q^e` (rounded up to the ramification).
    pub fn truncate(&self, e: &Rational) -> Self {
        let m = (e * Rational::from_integer(BigInt::from(self.ram))).ceil().to_integer();
        self.truncate_w(m.to_i64().expect("exponent out of range"))
    }

    fn zip_add(&self, other: &Self, sub: bool) -> Self {
        let (a, b) = self.common(other);
        let prec = a.prec.min(b.prec);
        let lead = a.lead.min(b.lead).min(prec);
        let mut coeffs = vec![C::zero_in(&a.ctx); (prec - lead) as usize];
        for (m, c) in a.terms() {
            if m < prec {
                coeffs[(m - lead) as usize].accumulate(c);
            }
        }
        for (m, c) in b.terms() {
            if m < prec {
                let slot = &mut coeffs[(m - lead) as usize];
                *slot = if sub { slot.minus(c) } else { slot.plus(c) };
            }
        }
        Self::new(&a.ctx, a.ram, lead, prec, coeffs)
    }

    fn product(&self, other: &Self) -> Self {
        let (a, b) = self.common(other);
        let prec = (a.lead + b.prec).min(b.lead + a.prec);
        let lead = (a.lead + b.lead).min(prec);
        let n = (prec - lead) as usize;
        let coeffs = if a.is_zero() || b.is_zero() { Vec::new() } else { C::convolve(&a.ctx, &a.coeffs, &b.coeffs, n) };
        Self::new(&a.ctx, a.ram, lead, prec, coeffs)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        Ok(self.zip_add(other, false))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        Ok(self.zip_add(other, true))
    }

    /// Product; fails if neither factor is zero yet not even the leading
    /// coefficient of the product is known.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let p = self.product(other);
        if !self.is_zero() && !other.is_zero() {
            let r = lcm(self.ram, other.ram) as i64;
            let lead = self.lead * (r / self.ram as i64) + other.lead * (r / other.ram as i64);
            if p.prec <= lead {
                return Err(Error::PrecisionUnderflow);
            }
        }
        Ok(p)
    }

    /// Reciprocal: valuation `v` and precision `p` give valuation `-v`,
    /// precision `p - 2v`.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::NotInvertible);
        }
        let v = self.lead;
        let n = (self.prec - v) as usize;
        let coeffs = C::series_inverse(&self.ctx, &self.coeffs, n)?;
        Ok(Self::new(&self.ctx, self.ram, -v, self.prec - 2 * v, coeffs))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.try_mul(&other.inv()?)
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        if k == 0 {
            // 1 is known as far as the base is known relative to its lead
            let rel = self.prec - self.lead;
            return Ok(Self::monomial(&self.ctx, self.ram, 0, C::one_in(&self.ctx), rel));
        }
        let mut result: Option<Self> = None;
        let mut base = self.clone();
        let mut e = k as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = Some(match result {
                    Some(r) => &r * &base,
                    None => base.clone(),
                });
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(result.expect("k > 0"))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let coeffs = self.coeffs.iter().map(|c| c.scale(r)).collect();
        Self::new(&self.ctx, self.ram, self.lead, self.prec, coeffs)
    }

    pub fn scale_by(&self, c: &C) -> Self {
        let coeffs = self.coeffs.iter().map(|x| x.times(c)).collect();
        Self::new(&self.ctx, self.ram, self.lead, self.prec, coeffs)
    }

    /// Multiplies by `q^e`.
    pub fn shift(&self, e: &Rational) -> Self {
        let r = lcm(self.ram, e.denom().to_u64().expect("denominator fits"));
        let s = self.with_ram(r);
        let m = (e * Rational::from_integer(BigInt::from(r))).to_integer().to_i64().expect("exponent fits");
        QSeries { ctx: s.ctx, ram: r, lead: s.lead + m, prec: s.prec + m, coeffs: s.coeffs }
    }

    /// `tau -> (num/den) tau`, i.e. `q -> q^(num/den)`.
    pub fn rescale(&self, num: u64, den: u64) -> Self {
        assert!(num > 0 && den > 0, "rescale factors must be positive");
        let g = num.gcd(&den);
        let (num, den) = (num / g, den / g);
        let ram = self.ram * den;
        let f = num as i64;
        let terms: Vec<(i64, C)> = self.terms().map(|(m, c)| (m * f, c.clone())).collect();
        let out = Self::from_terms(&self.ctx, ram, self.prec * f, terms);
        let out = if out.is_zero() { Self::zero(&self.ctx, ram, self.prec * f) } else { out };
        out.reduce_ram()
    }

    /// `tau -> tau + k`: the coefficient of `w^m` picks up `zeta_ram^(k m)`.
    pub fn shift_tau(&self, k: i64) -> Result<Self> {
        let ram = self.ram as i64;
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.vanishes() {
                coeffs.push(c.clone());
                continue;
            }
            let m = self.lead + i as i64;
            let t = (k.rem_euclid(ram) * m.rem_euclid(ram)).rem_euclid(ram);
            coeffs.push(if t == 0 { c.clone() } else { c.times(&C::root_of_unity(&self.ctx, t, ram)?) });
        }
        Ok(Self::new(&self.ctx, self.ram, self.lead, self.prec, coeffs))
    }

    /// `(q d/dq)^j`.
    pub fn qdq(&self, j: u32) -> Self {
        if j == 0 {
            return self.clone();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if c.vanishes() {
                    return c.clone();
                }
                let e = self.q_exp(self.lead + i as i64);
                c.scale(&num_traits::pow(e, j as usize))
            })
            .collect();
        Self::new(&self.ctx, self.ram, self.lead, self.prec, coeffs)
    }

    /// Keeps the terms `w^m` with `m = residue (mod modulus)`.
    pub fn sieve_w(&self, modulus: i64, residue: i64) -> Self {
        let terms: Vec<(i64, C)> =
            self.terms().filter(|(m, _)| (m - residue).rem_euclid(modulus) == 0).map(|(m, c)| (m, c.clone())).collect();
        let out = Self::from_terms(&self.ctx, self.ram, self.prec, terms);
        if out.is_zero() {
            Self::zero(&self.ctx, self.ram, self.prec)
        } else {
            out
        }
    }

    /// `exp(self)` for a series with only positive exponents.
    pub fn exp(&self) -> Result<Self> {
        if !self.is_zero() && self.lead <= 0 {
            return Err(Error::ConstraintViolation("exp needs a series with positive valuation".into()));
        }
        let n = self.prec.max(0) as usize;
        let g: Vec<C> = (0..n).map(|m| self.coeff_w(m as i64).expect("inside window")).collect();
        let mut e: Vec<C> = Vec::with_capacity(n);
        if n > 0 {
            e.push(C::one_in(&self.ctx));
        }
        for m in 1..n {
            let mut s = C::zero_in(&self.ctx);
            for k in 1..=m {
                if !g[k].vanishes() {
                    s.accumulate(&g[k].times(&e[m - k]).scale(&int(k as i64)));
                }
            }
            e.push(s.scale(&Rational::new(BigInt::one(), BigInt::from(m))));
        }
        Ok(Self::new(&self.ctx, self.ram, 0, self.prec, e))
    }

    pub fn map<D: Scalar>(&self, ctx: &D::Ctx, f: impl Fn(&C) -> D) -> QSeries<D> {
        QSeries::new(ctx, self.ram, self.lead, self.prec, self.coeffs.iter().map(f).collect())
    }

    /// First q-exponent, inside both known windows, where the two series
    /// disagree.
    pub fn first_difference(&self, other: &Self) -> Option<Rational> {
        let (a, b) = self.common(other);
        let prec = a.prec.min(b.prec);
        let start = a.lead.min(b.lead);
        (start..prec)
            .find(|&m| a.coeff_w(m).expect("inside window") != b.coeff_w(m).expect("inside window"))
            .map(|m| a.q_exp(m))
    }

    /// Equal on the common known window.
    pub fn agrees_with(&self, other: &Self) -> bool {
        self.first_difference(other).is_none()
    }
}

impl<C: Scalar> PartialEq for QSeries<C> {
    fn eq(&self, other: &Self) -> bool {
        self.ctx == other.ctx && self.precision() == other.precision() && self.agrees_with(other)
    }
}

impl QSeries<Rational> {
    pub fn from_rational_terms(ram: u64, prec: i64, terms: impl IntoIterator<Item = (i64, Rational)>) -> Self {
        Self::from_terms(&(), ram, prec, terms)
    }

    /// Series from `(q-exponent, coefficient)` pairs, known below `q^prec_q`.
    pub fn from_q_terms(prec_q: &Rational, terms: &[(Rational, Rational)]) -> Self {
        let mut ram = prec_q.denom().to_u64().expect("denominator fits");
        for (e, _) in terms {
            ram = lcm(ram, e.denom().to_u64().expect("denominator fits"));
        }
        let r = Rational::from_integer(BigInt::from(ram));
        let w = |e: &Rational| (e * &r).to_integer().to_i64().expect("exponent fits");
        Self::from_terms(&(), ram, w(prec_q), terms.iter().map(|(e, c)| (w(e), c.clone())))
    }

    pub fn to_cyclo(&self, field: &std::sync::Arc<CycloField>) -> QSeries<CycloElem> {
        self.map(field, |c| field.from_rational(c.clone()))
    }
}

impl QSeries<CycloElem> {
    /// Back to rational coefficients; fails on the first irrational one.
    pub fn to_rational(&self) -> Result<QSeries<Rational>> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (i, c) in self.coeffs.iter().enumerate() {
            match c.to_rational() {
                Some(r) => coeffs.push(r),
                None => {
                    return Err(Error::NonRationalResult { exponent: self.q_exp(self.lead + i as i64).to_string() })
                }
            }
        }
        Ok(QSeries::new(&(), self.ram, self.lead, self.prec, coeffs))
    }
}

macro_rules! forward_binop {
    ($Op:ident, $op:ident, $body:expr) => {
        impl<'a, C: Scalar> $Op<&'a QSeries<C>> for &'a QSeries<C> {
            type Output = QSeries<C>;
            fn $op(self, rhs: &'a QSeries<C>) -> QSeries<C> {
                $body(self, rhs)
            }
        }
        impl<C: Scalar> $Op<QSeries<C>> for QSeries<C> {
            type Output = QSeries<C>;
            fn $op(self, rhs: QSeries<C>) -> QSeries<C> {
                $body(&self, &rhs)
            }
        }
        impl<'a, C: Scalar> $Op<&'a QSeries<C>> for QSeries<C> {
            type Output = QSeries<C>;
            fn $op(self, rhs: &'a QSeries<C>) -> QSeries<C> {
                $body(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &QSeries<C>, b: &QSeries<C>| a.zip_add(b, false));
forward_binop!(Sub, sub, |a: &QSeries<C>, b: &QSeries<C>| a.zip_add(b, true));
forward_binop!(Mul, mul, |a: &QSeries<C>, b: &QSeries<C>| a.product(b));

impl<C: Scalar> Neg for &QSeries<C> {
    type Output = QSeries<C>;
    fn neg(self) -> QSeries<C> {
        let coeffs = self.coeffs.iter().map(|c| c.negated()).collect();
        QSeries { ctx: self.ctx.clone(), ram: self.ram, lead: self.lead, prec: self.prec, coeffs }
    }
}

impl<C: Scalar> Neg for QSeries<C> {
    type Output = QSeries<C>;
    fn neg(self) -> QSeries<C> {
        -&self
    }
}

pub(crate) fn fmt_exp(e: &Rational) -> String {
    if e.is_integer() {
        if e.is_negative() {
            format!("q^({e})")
        } else if e.is_one() {
            "q".to_string()
        } else {
            format!("q^{e}")
        }
    } else {
        format!("q^({e})")
    }
}

fn fmt_terms<C: Scalar>(terms: &[(Rational, C)], tail: &Rational) -> String {
    let mut out = String::new();
    for (k, (e, c)) in terms.iter().enumerate() {
        let mut cs = c.to_string();
        let compound = cs.contains(" + ") || cs[1..].contains(" - ");
        if compound {
            cs = format!("({cs})");
        }
        let neg = !compound && cs.starts_with('-');
        let mag = if neg { cs[1..].to_string() } else { cs };
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if e.is_zero() {
            out.push_str(&mag);
        } else if mag == "1" {
            out.push_str(&fmt_exp(e));
        } else {
            out.push_str(&format!("{mag}*{}", fmt_exp(e)));
        }
    }
    if !terms.is_empty() {
        out.push_str(" + ");
    }
    out.push_str(&format!("O({})", if tail.is_zero() { "1".to_string() } else { fmt_exp(tail) }));
    out
}

impl<C: Scalar> fmt::Display for QSeries<C> {
    /// `q^(-1/8) * (1 + 28*q^(1/2) + ... + O(q^5))` when the valuation is not
    /// an integer, plain `q^(-1) + 28*q^3 + ... + O(q^40)` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.q_terms();
        let prec = self.precision();
        match self.valuation() {
            Some(v) if !v.is_integer() => {
                let shifted: Vec<(Rational, C)> = terms.into_iter().map(|(e, c)| (e - &v, c)).collect();
                write!(f, "{} * ({})", fmt_exp(&v), fmt_terms(&shifted, &(prec - &v)))
            }
            _ => write!(f, "{}", fmt_terms(&terms, &prec)),
        }
    }
}

/// Wire form of a rational series: `{ram, lead, prec, coeffs: [[m, c], ...]}`
/// with exponents in w-units and only nonzero coefficients listed.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct SeriesRecord {
    pub ram: u64,
    pub lead: i64,
    pub prec: i64,
    pub coeffs: Vec<(String, String)>,
}

impl From<&QSeries<Rational>> for SeriesRecord {
    fn from(s: &QSeries<Rational>) -> Self {
        SeriesRecord {
            ram: s.ram,
            lead: s.lead,
            prec: s.prec,
            coeffs: s.terms().map(|(m, c)| (m.to_string(), c.to_string())).collect(),
        }
    }
}

impl TryFrom<&SeriesRecord> for QSeries<Rational> {
    type Error = Error;
    fn try_from(r: &SeriesRecord) -> Result<Self> {
        let mut terms = Vec::with_capacity(r.coeffs.len());
        for (m, c) in &r.coeffs {
            let m: i64 = m.trim().parse().map_err(|_| Error::Parse(format!("bad exponent {m:?}")))?;
            if m < r.lead {
                return Err(Error::Parse(format!("exponent {m} below lead {}", r.lead)));
            }
            terms.push((m, crate::arith::parse_rational(c)?));
        }
        if r.ram == 0 {
            return Err(Error::Parse("ramification must be positive".into()));
        }
        Ok(QSeries::from_terms(&(), r.ram, r.prec, terms))
    }
}
