//! Randomized properties of `QSeries`, shared by the property tests and the
//! acceptance report.

use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};
use qdonald::named::named_series;
use qdonald::{int, rat, QSeries, Rational};

fn coefficient() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

/// A series `sum c_m w^m`, `w = q^(1/ram)`, with `lead <= m < prec`.
pub fn series() -> impl Strategy<Value = QSeries> {
    (prop::sample::select(vec![1u64, 2, 4, 8]), -6i64..6, 1usize..14).prop_flat_map(|(ram, lead, len)| {
        prop::collection::vec(coefficient(), len).prop_map(move |cs| {
            let prec = lead + cs.len() as i64;
            let terms = cs.into_iter().enumerate().map(|(i, c)| (lead + i as i64, c));
            QSeries::from_rational_terms(ram, prec, terms)
        })
    })
}

/// A series whose leading coefficient is nonzero.
pub fn unit_series() -> impl Strategy<Value = QSeries> {
    let head = coefficient().prop_filter("nonzero", |c| *c != int(0));
    (prop::sample::select(vec![1u64, 2, 4, 8]), -6i64..6, head, prop::collection::vec(coefficient(), 0..13)).prop_map(
        |(ram, lead, head, tail)| {
            let prec = lead + 1 + tail.len() as i64;
            let terms = std::iter::once(head).chain(tail).enumerate().map(|(i, c)| (lead + i as i64, c));
            QSeries::from_rational_terms(ram, prec, terms)
        },
    )
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), TestCaseError> {
    if ok {
        Ok(())
    } else {
        Err(TestCaseError::fail(what()))
    }
}

fn run<S: Strategy>(
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<u32, String>
where
    S::Value: std::fmt::Debug,
{
    let mut runner = TestRunner::new(Config { cases, failure_persistence: None, ..Config::default() });
    runner.run(&strategy, test).map(|()| cases).map_err(|e| e.to_string())
}

/// Commutativity, associativity and distributivity on the common window,
/// plus `a - a = 0` and `1 a = a`.
pub fn ring_laws(cases: u32) -> Result<u32, String> {
    run(cases, (series(), series(), series()), |(a, b, c)| {
        ensure(&a + &b == &b + &a, || "a + b != b + a".into())?;
        ensure(&a * &b == &b * &a, || "a b != b a".into())?;
        ensure((&(&a + &b) + &c).agrees_with(&(&a + &(&b + &c))), || "addition not associative".into())?;
        ensure((&(&a * &b) * &c).agrees_with(&(&a * &(&b * &c))), || "multiplication not associative".into())?;
        ensure((&a * &(&b + &c)).agrees_with(&(&(&a * &b) + &(&a * &c))), || "not distributive".into())?;
        let same = a.clone();
        ensure((&a - &same).is_zero(), || "a - a != 0".into())?;
        let one = QSeries::one(&(), 1000);
        ensure(&one * &a == a, || "1 a != a".into())
    })
}

/// `q d/dq (a b) = (q d/dq a) b + a (q d/dq b)` and linearity.
pub fn derivation_law(cases: u32) -> Result<u32, String> {
    run(cases, (series(), series()), |(a, b)| {
        let lhs = (&a * &b).qdq(1);
        let rhs = &(&a.qdq(1) * &b) + &(&a * &b.qdq(1));
        ensure(lhs.agrees_with(&rhs), || format!("Leibniz rule fails for {a} and {b}"))?;
        ensure((&a + &b).qdq(2).agrees_with(&(&a.qdq(2) + &b.qdq(2))), || "qdq^2 not additive".into())?;
        ensure(a.qdq(1).qdq(2) == a.qdq(3), || "qdq powers do not compose".into())
    })
}

/// `rescale(n, d)` undone by `rescale(d, n)`, `shift(e)` undone by `shift(-e)`.
pub fn rescale_shift_inverses(cases: u32) -> Result<u32, String> {
    let factors = (1u64..=8, 1u64..=8);
    let exponent = (-20i64..=20, 1i64..=8).prop_map(|(n, d)| rat(n, d));
    run(cases, (series(), factors, exponent), |(a, (n, d), e)| {
        ensure(a.rescale(n, d).rescale(d, n) == a, || format!("rescale({n},{d}) not inverted"))?;
        ensure(a.shift(&e).shift(&-e.clone()) == a, || format!("shift({e}) not inverted"))?;
        ensure(a.shift(&e).valuation() == a.valuation().map(|v| v + e.clone()), || "shift moves valuation".into())?;
        ensure(a.rescale(n, 1).precision() == a.precision() * int(n as i64), || "rescale scales precision".into())
    })
}

const NAMED: &[&str] =
    &["eta", "theta2", "theta3", "vtheta2", "vtheta4", "E2", "E4", "Estar", "Eodd", "Delta", "A", "B", "h", "Qplus"];

/// Every coefficient a result claims to know is the coefficient of the
/// exact result: arithmetic on truncations agrees with arithmetic on longer
/// truncations of the same series, and named series agree when rebuilt at a
/// higher order.
pub fn precision_soundness(cases: u32) -> Result<u32, String> {
    let inputs = (unit_series(), unit_series(), 0i64..8, 0i64..8, -3i64..=3, prop::sample::select(NAMED), 1i64..8);
    run(cases, inputs, |(a, b, cut_a, cut_b, k, name, order)| {
        let short_a = a.truncate_w(a.lead() + 1 + cut_a.min(a.prec() - a.lead() - 1));
        let short_b = b.truncate_w(b.lead() + 1 + cut_b.min(b.prec() - b.lead() - 1));
        let pairs = [
            (&short_a + &short_b, &a + &b),
            (&short_a * &short_b, &a * &b),
            (short_a.div(&short_b).unwrap(), a.div(&b).unwrap()),
            (short_a.pow(k).unwrap(), a.pow(k).unwrap()),
        ];
        for (i, (short, long)) in pairs.iter().enumerate() {
            ensure(short.precision() <= long.precision(), || format!("op {i}: truncation gained precision"))?;
            ensure(short.agrees_with(long), || format!("op {i}: {short} disagrees with {long}"))?;
        }
        let low = named_series(name, order).unwrap();
        let high = named_series(name, order + 5).unwrap();
        ensure(low.precision() >= int(order), || format!("{name}: precision below request"))?;
        ensure(low.agrees_with(&high), || format!("{name}: order {order} disagrees with order {}", order + 5))
    })
}
