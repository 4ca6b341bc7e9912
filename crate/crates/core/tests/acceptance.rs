//! Acceptance report: one PASS/FAIL line per criterion.
//!
//! Two criteria are false as literally stated and print FAIL: the printed
//! `h^2 + 64` differential equation (6) and two misprinted `H`-weights (8).
//! The target succeeds when every other criterion passes and those two fail
//! for exactly the documented reason.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use num_traits::Zero;
use qdonald::arith::parse_rational;
use qdonald::check::CheckOutcome;
use qdonald::forms::{eisenstein_eodd, form_h};
use qdonald::invariants::{
    criterion_series, goettsche_phi, h_suite, hurwitz, invariant_table, lambda_summand, mock_identities, printed_table,
    printed_table_checks, uplane_d, vafa_witten_series, z0_suite, z0_times_fm, z_rho_checks, Side,
};
use qdonald::mock::{cal_q, q_transform_s};
use qdonald::sw::sw_checks;
use qdonald::{int, rat, QSeries, Rational, Result};

struct Verdict {
    passed: bool,
    detail: String,
}

fn verdict(passed: bool, detail: impl Into<String>) -> Verdict {
    Verdict { passed, detail: detail.into() }
}

fn all_pass(checks: &[CheckOutcome]) -> Verdict {
    match checks.iter().find(|c| !c.passed()) {
        Some(c) => verdict(false, c.to_string()),
        None => verdict(true, format!("{} checks", checks.len())),
    }
}

/// Every check passes and each series comparison covered everything below `q^target`.
fn all_pass_to(checks: &[CheckOutcome], target: i64) -> Verdict {
    let v = all_pass(checks);
    if !v.passed {
        return v;
    }
    let reached = checks.iter().filter_map(|c| c.checked_below.as_deref().map(r)).min();
    match reached {
        Some(b) if b < int(target) => verdict(false, format!("{}, but only compared below q^{b}", v.detail)),
        Some(b) => verdict(true, format!("{}, compared below q^{b}", v.detail)),
        None => verdict(false, "no series comparison"),
    }
}

fn r(s: &str) -> Rational {
    parse_rational(s).unwrap()
}

/// Brute-force Hurwitz class number: all forms `(a, b, c)` with
/// `b^2 - 4ac = -n` that are reduced, `|b| <= a <= c`, `b >= 0` on the
/// boundary, weighted by the inverse of their automorphism count over 2.
fn hurwitz_oracle(n: i64) -> Rational {
    if n == 0 {
        return rat(-1, 12);
    }
    let mut total = Rational::zero();
    for a in 1..=n {
        for b in -a..=a {
            let num = b * b + n;
            if num % (4 * a) != 0 {
                continue;
            }
            let c = num / (4 * a);
            if c < a || ((b.abs() == a || a == c) && b < 0) {
                continue;
            }
            total += match (a == c, b) {
                (true, 0) => rat(1, 2),
                (true, b) if b == a => rat(1, 3),
                _ => int(1),
            };
        }
    }
    total
}

fn c1_qplus_coefficients() -> Result<Verdict> {
    let q = cal_q(40);
    let want = [1, 28, 39, 196, 161, 756];
    for e in -1..20 {
        let expect = if (e + 1) % 4 == 0 { int(want[((e + 1) / 4) as usize]) } else { int(0) };
        let got = q.coeff_w(e)?;
        if got != expect {
            return Ok(verdict(false, format!("coefficient of q^{e} is {got}, expected {expect}")));
        }
    }
    Ok(verdict(
        q.precision() >= int(40),
        format!("q^-1 + 28q^3 + 39q^7 + 196q^11 + 161q^15 + 756q^19, known below q^{}", q.precision()),
    ))
}

fn c2_qasmu() -> Result<Verdict> {
    Ok(all_pass_to(&mock_identities(200, &[])?, 200))
}

fn c3_fasmu() -> Result<Verdict> {
    let checks = mock_identities(100, &[0, 2, 4])?;
    Ok(all_pass_to(&checks[1..], 100))
}

fn c4_z0_identity() -> Result<Verdict> {
    let report = z0_suite(200, 0)?;
    let identity = all_pass_to(&report.checks[..1], 200);
    let lead = &report.checks[1];
    Ok(verdict(identity.passed && lead.passed(), format!("{}; {lead}", identity.detail)))
}

fn c5_z0_constant_terms() -> Result<Verdict> {
    let report = z0_suite(24, 10)?;
    let cts = &report.checks[2..];
    if cts.len() != 11 {
        return Ok(verdict(false, format!("{} constant terms checked", cts.len())));
    }
    let spot0 = QSeries::from_rational_terms(1, 13, [(-4, int(1)), (4, int(-276)), (8, int(4096)), (12, int(-33606))]);
    let spot3 = QSeries::from_rational_terms(1, 3, [(-10, int(1)), (-6, int(60)), (-2, int(738)), (2, int(-11256))]);
    let z0f0 = z0_times_fm(0, 13)?;
    let z0f3 = z0_times_fm(3, 3)?;
    if z0f0 != spot0 || z0f3 != spot3 {
        return Ok(verdict(false, format!("spot series differ: {z0f0}; {z0f3}")));
    }
    let v = all_pass(cts);
    Ok(verdict(v.passed, format!("CT(Z0 f_m) = 0 for m = 0..10, Z0 f_0 and Z0 f_3 spot series exact; {}", v.detail)))
}

fn c6_h_suite() -> Result<Verdict> {
    let order = 100;
    let checks = h_suite(order);
    let h = form_h(order + 2);
    let printed =
        (&eisenstein_eodd(order + 2) * &(&(&h * &h) + &QSeries::one(&(), order + 2).scale(&int(64)))).scale(&int(-1));
    let diff = h.qdq(1).truncate(&int(order)).first_difference(&printed.truncate(&int(order)));
    let others = all_pass_to(&checks, order);
    let detail = match &diff {
        Some(e) => format!(
            "printed q dh/dq = -E_odd (h^2 + 64) fails at q^{e}; Delta(2tau)/Delta(4tau) = h^2 - 64, \
             q dh/dq = -E*(2tau) h + 64 E_odd and q dh/dq = -E_odd (h^2 - 64) hold to q^{order}: {}",
            others.detail
        ),
        None => "printed h^2 + 64 form holds".into(),
    };
    Ok(verdict(diff.is_none() && others.passed, detail))
}

const NF0_VALUES: &[&[&str]] = &[
    &["-1"],
    &["-3/16", "-5/16", "-19/16"],
    &["-29/32", "-19/32", "-17/32", "-23/32", "-85/32"],
    &["-69525/4096", "-26907/4096", "-12853/4096", "-7803/4096", "-6357/4096", "-8155/4096", "-29557/4096"],
];

fn c7_main_theorem() -> Result<Verdict> {
    let mut cells = 0;
    for (half, values) in NF0_VALUES.iter().enumerate() {
        let w = 2 * half as u64;
        for (m, want) in values.iter().enumerate() {
            let (m, n) = (m as u64, w - m as u64);
            let phi = goettsche_phi(half as u64 + 1, m, n)?;
            let d = uplane_d(0, m, n)?.0;
            if phi != d || d != r(want) {
                return Ok(verdict(false, format!("(m,n) = ({m},{n}): Phi = {phi}, D^0 = {d}, table {want}")));
            }
            cells += 1;
        }
    }
    Ok(verdict(true, format!("{cells} cells with m + n in {{0,2,4,6}}")))
}

fn c8_printed_combinations() -> Result<Verdict> {
    let q = cal_q(48);
    let h: Vec<Rational> = (0..12).map(|k| q.coeff_w(4 * k - 1).unwrap()).collect();
    let mut bad = Vec::new();
    let mut rows = 0;
    for nf in [0, 2, 3] {
        for row in printed_table(nf) {
            rows += 1;
            let value: Rational = row.combo.iter().map(|(k, w)| r(w) * &h[*k]).sum();
            if value != r(row.value) {
                bad.push(format!("N_f={nf} (m,n)=({},{}) evaluates to {value}, printed {}", row.m, row.n, row.value));
            }
        }
    }
    let corrected = [0, 2, 3].iter().map(|&nf| printed_table_checks(nf, true)).collect::<Result<Vec<_>>>()?;
    let corrected_ok = corrected.iter().flatten().all(CheckOutcome::passed);
    let detail = format!(
        "{} of {rows} printed rows do not evaluate to their value: {}; with the weights 743/3072 and -451/1024 \
         every row matches value and computed combination: {corrected_ok}",
        bad.len(),
        bad.join("; ")
    );
    let expected_failures = bad.len() == 2
        && bad[0].starts_with("N_f=2 (m,n)=(3,1)")
        && bad[1].starts_with("N_f=3 (m,n)=(1,1)")
        && corrected_ok;
    Ok(verdict(
        bad.is_empty() && corrected_ok,
        if bad.is_empty() || expected_failures { detail } else { format!("unexpected: {detail}") },
    ))
}

fn c9_nf2_table() -> Result<Verdict> {
    let t = invariant_table(2, 6)?;
    for (m, n, want) in [(0, 0, "-3"), (0, 2, "-21/16"), (2, 0, "-53/16"), (0, 4, "-3955/256")] {
        let got = t.get(m, n).map(|row| row.value.as_str()).unwrap_or("missing");
        if got != want {
            return Ok(verdict(false, format!("D^2 at ({m},{n}) is {got}, expected {want}")));
        }
    }
    let mut odd = 0;
    for w in (1..=6u64).step_by(2) {
        for m in 0..=w {
            let v = uplane_d(2, m, w - m)?.0;
            if !v.is_zero() {
                return Ok(verdict(false, format!("odd-parity entry ({m},{}) is {v}", w - m)));
            }
            odd += 1;
        }
    }
    Ok(verdict(true, format!("four printed values and {odd} odd-parity zeros")))
}

fn c10_qtransform_and_nf3() -> Result<Verdict> {
    let qs = q_transform_s(5)?;
    let want = QSeries::from_q_terms(
        &rat(39, 8),
        &[
            (rat(-1, 8), rat(5, 2)),
            (rat(7, 8), rat(111, 2)),
            (rat(15, 8), rat(413, 2)),
            (rat(23, 8), int(819)),
            (rat(31, 8), rat(4407, 2)),
        ],
    );
    if qs.truncate(&rat(39, 8)) != want {
        return Ok(verdict(false, format!("Q_S = {qs}")));
    }
    for (m, n, v) in [(0, 0, "-5/4"), (0, 1, "-95/96"), (1, 0, "45/32"), (3, 0, "5843/2048")] {
        let d = uplane_d(3, m, n)?.0;
        if d != r(v) {
            return Ok(verdict(false, format!("D^3 at ({m},{n}) is {d}, expected {v}")));
        }
    }
    Ok(verdict(true, "Q_S expansion and D^3 at 1, S^2, p, p^3"))
}

/// `(side, k, j, [(exponent, coefficient)])` as printed for `(m, n) = (3, 1)`.
type PrintedLambda = (Side, u64, u64, &'static [(i64, &'static str)]);

fn c11_lambda_example() -> Result<Verdict> {
    let printed: [PrintedLambda; 6] = [
        (Side::F, 0, 0, &[(-8, "1/256"), (-4, "43/256"), (0, "7/16")]),
        (Side::F, 1, 0, &[(-8, "1/768"), (-4, "35/768"), (0, "-13/48")]),
        (Side::F, 1, 1, &[(-8, "-1/768"), (-4, "-59/768"), (0, "-85/96")]),
        (Side::Q, 0, 0, &[(-12, "-1/3072"), (-8, "-7/256"), (-4, "-11/16"), (0, "-85/96")]),
        (Side::Q, 1, 0, &[(-12, "1/3072"), (-8, "5/256"), (-4, "13/64"), (0, "-247/48")]),
        (Side::Q, 1, 1, &[(-12, "1/1024"), (-8, "-13/256"), (-4, "-203/64"), (0, "85/16")]),
    ];
    for (side, k, j, terms) in printed {
        let s = lambda_summand(side, 3, 1, k, j, 1)?;
        let lead = terms[0].0;
        for e in lead..=0 {
            let want = terms.iter().find(|(x, _)| *x == e).map_or(int(0), |(_, c)| r(c));
            if s.coeff_w(e)? != want {
                return Ok(verdict(false, format!("{side:?}({k},{j}) at q^{e}: {}, printed {want}", s.coeff_w(e)?)));
            }
        }
    }
    let telescoped = r("7/16") - r("13/48") - r("85/96") + r("85/96") + r("247/48") - r("85/16");
    let ct = criterion_series(3, 1, 1)?.constant_term()?;
    Ok(verdict(ct.is_zero() && telescoped.is_zero(), format!("six series match through q^0; CT = {ct}")))
}

fn c12_vafa_witten() -> Result<Verdict> {
    let oracle: Vec<Rational> = (0..=40).map(hurwitz_oracle).collect();
    if hurwitz(40) != oracle {
        return Ok(verdict(false, "H(n) disagrees with the brute-force count"));
    }
    let s = vafa_witten_series(7).shift(&rat(1, 2));
    let want = [1, 9, 48, 203, 729, 2346, 6918];
    for (k, w) in want.iter().enumerate() {
        let c = s.coeff_at(&int(k as i64 + 1))?;
        if c != int(*w) {
            return Ok(verdict(false, format!("coefficient of q^{} is {c}, expected {w}", k + 1)));
        }
    }
    Ok(verdict(s.coeff_at(&int(0))?.is_zero(), "q + 9q^2 + ... + 6918q^7; H(n) matches brute force for n <= 40"))
}

fn c13_sw_geometry() -> Result<Verdict> {
    let (mut series, mut contact, mut c0) = (Vec::new(), Vec::new(), Vec::new());
    for nf in [0, 2, 3] {
        for c in sw_checks(nf, 56)? {
            if c.name.starts_with("discriminant") || c.name.starts_with("Delta W^6") {
                series.push(c);
            } else if c.name.starts_with("contact term") {
                contact.push(c);
            } else if c.name.starts_with("q = c0") {
                c0.push(c);
            }
        }
    }
    let series = all_pass_to(&series, 50);
    let contact = all_pass(&contact);
    let nf3 = c0.len() == 3 && c0.iter().all(CheckOutcome::passed) && c0[2].name.ends_with("c0 = -1/16");
    Ok(verdict(
        series.passed && contact.passed && contact.detail == "3 checks" && nf3,
        format!(
            "discriminant and eta relations: {}; contact terms: {}; N_f=3 has c0 = -1/16: {nf3}",
            series.detail, contact.detail
        ),
    ))
}

fn c14_z_rho() -> Result<Verdict> {
    Ok(all_pass_to(&z_rho_checks(51)?, 50))
}

type PropertySuite = fn(u32) -> std::result::Result<u32, String>;

fn c15_properties() -> Result<Verdict> {
    let cases = 1000;
    let suites: [(&str, PropertySuite); 4] = [
        ("ring laws", common::ring_laws),
        ("qdq derivation law", common::derivation_law),
        ("rescale/shift inverses", common::rescale_shift_inverses),
        ("precision soundness", common::precision_soundness),
    ];
    for (name, suite) in suites {
        if let Err(e) = suite(cases) {
            return Ok(verdict(false, format!("{name}: {e}")));
        }
    }
    Ok(verdict(true, format!("4 suites x {cases} cases")))
}

type Criterion = (u32, &'static str, fn() -> Result<Verdict>);

const CRITERIA: &[Criterion] = &[
    (1, "Q+ coefficients to q^40", c1_qplus_coefficients),
    (2, "calQ as Appell-Lerch sums to q^200", c2_qasmu),
    (3, "calF_t/Theta4 as mu derivatives, t = 0, 2, 4, to q^100", c3_fasmu),
    (4, "Z0 = E*(4tau)/eta(8tau)^3 to q^200 and leading terms", c4_z0_identity),
    (5, "constant terms of Z0 f_m vanish", c5_z0_constant_terms),
    (6, "h-suite to q^100", c6_h_suite),
    (7, "Goettsche = D^0 and the N_f=0 table", c7_main_theorem),
    (8, "printed H-combinations evaluate to printed values", c8_printed_combinations),
    (9, "N_f=2 table", c9_nf2_table),
    (10, "Q_transform_S and N_f=3 table", c10_qtransform_and_nf3),
    (11, "Lambda(3,1,k,j) example", c11_lambda_example),
    (12, "Hurwitz numbers and the Vafa-Witten series", c12_vafa_witten),
    (13, "Seiberg-Witten geometry to q^50", c13_sw_geometry),
    (14, "Z(tau), rho^4 and the N_f=4 partition function to q^50", c14_z_rho),
    (15, "property suites", c15_properties),
];

/// Criteria that are false as stated, with the text their report must contain.
const EXPECTED_FAILURES: &[(u32, &str)] = &[(6, "fails at q^1;"), (8, "2 of 41 printed rows")];

fn main() -> ExitCode {
    let mut unexpected = Vec::new();
    for &(id, name, run) in CRITERIA {
        let start = Instant::now();
        let v = run().unwrap_or_else(|e| verdict(false, format!("error: {e}")));
        let secs = start.elapsed().as_secs_f64();
        println!("{} {id:>2} {name} ({secs:.1}s): {}", if v.passed { "PASS" } else { "FAIL" }, v.detail);
        let expected = EXPECTED_FAILURES.iter().find(|(i, _)| *i == id);
        let as_expected = match expected {
            Some((_, reason)) => !v.passed && v.detail.contains(reason) && !v.detail.starts_with("unexpected"),
            None => v.passed,
        };
        if !as_expected {
            unexpected.push(id);
        }
    }
    if unexpected.is_empty() {
        println!("acceptance: all criteria behave as documented");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected outcome for criteria {unexpected:?}");
        ExitCode::FAILURE
    }
}
