use crate::arith::{int, rat, CycloElem, CycloField};
use crate::check::CheckOutcome;
use crate::error::Result;
use crate::forms::{eta, vartheta};
use crate::mock::{h_coefficients, q_plus, rho4};
use crate::series::QSeries;

/// `Z^+ = eta^3 Q^+`, known below `q^order`.
pub fn z_function(order: i64) -> QSeries {
    (&eta(order + 1).pow(3).expect("pow") * &q_plus(order + 1)).truncate(&int(order)).reduce_ram()
}

/// `g = -(1/36) [(vartheta_2/eta)^8 - (vartheta_2/eta)^4 (vartheta_3/eta)^4 + (vartheta_3/eta)^8]`.
pub fn g_function(order: i64) -> QSeries {
    let work = order + 2;
    let e = eta(work);
    let a = vartheta(2, work).expect("index").div(&e).expect("unit").pow(4).expect("pow");
    let b = vartheta(3, work).expect("index").div(&e).expect("unit").pow(4).expect("pow");
    let s = &(&a * &a) - &(&a * &b) + &b * &b;
    s.scale(&rat(-1, 36)).truncate(&int(order))
}

/// Holomorphic part of `[ (1/2) (q/eta^4 d/dq)^2 + g ] (Z / eta^4)`, known
/// below `q^order`.
pub fn nf4_partition(order: i64) -> Result<QSeries> {
    let work = order + 2;
    let inv4 = eta(work).pow(-4)?;
    let x = &z_function(work) * &inv4;
    let d1 = &inv4 * &x.qdq(1);
    let d2 = &inv4 * &d1.qdq(1);
    let out = d2.scale(&rat(1, 2)) + &g_function(work) * &x;
    Ok(out.truncate(&int(order)).reduce_ram())
}

/// `Z(tau + k)` for `k = 0, 1, 2, 3`, with coefficients in `Q(zeta_24)`.
fn z_shifts(order: i64) -> Result<Vec<QSeries<CycloElem>>> {
    let field = CycloField::default_field();
    let z = z_function(order).to_cyclo(&field);
    (0..4).map(|k| z.shift_tau(k)).collect()
}

/// Checks the translation behaviour of `Z = eta^3 Q` and of `Z^4_UP`.
pub fn z_rho_checks(order: i64) -> Result<Vec<CheckOutcome>> {
    let field = CycloField::default_field();
    let zs = z_shifts(order)?;
    let work = order + 1;
    let r4 = rho4(work);
    let eta4 = eta(work).pow(4)?;
    let mut out = Vec::new();
    let diff = &zs[0] - &zs[1];
    let want = (&eta4 * &r4).scale(&int(14)).to_cyclo(&field);
    out.push(CheckOutcome::compare("Z(tau) - Z(tau+1) = 14 eta^4 rho^4", &diff, &want));
    out.push(CheckOutcome::compare("Z(tau+2) = Z(tau)", &zs[2], &zs[0]));
    let alt = &(&(&zs[0] - &zs[1]) + &zs[2]) - &zs[3];
    let lhs = alt.to_rational()?.div(&eta4)?;
    out.push(CheckOutcome::compare("sum_k (-1)^k Z(tau+k) / eta^4 = 28 rho^4", &lhs, &r4.scale(&int(28))));
    let n = (2 * order + 4) as usize;
    let h = h_coefficients(2 * n + 2);
    let odd = QSeries::from_rational_terms(1, n as i64, (0..n).map(|m| (m as i64, h[2 * m + 1].clone())));
    let rhs = odd.div(&eta(work))?.shift(&rat(3, 8)).scale(&int(4));
    out.push(CheckOutcome::compare("28 rho^4 = (4 q^(3/8)/eta) sum H_(2m+1) q^m", &r4.scale(&int(28)), &rhs));
    let p = nf4_partition(order)?.to_cyclo(&field);
    out.push(CheckOutcome::compare("Z^4_UP(tau+2) = Z^4_UP(tau)", &p.shift_tau(2)?, &p));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g_leading() {
        let g = g_function(3);
        assert_eq!(g.valuation(), Some(rat(-1, 3)));
        assert_eq!(g.coeff_at(&rat(-1, 3)).unwrap(), rat(-1, 36));
    }

    #[test]
    fn z_leading() {
        // eta^3 Q^+ = q^0 (1 - 3q + ...)(1 + 28 q^(1/2) + 39 q + ...)
        let z = z_function(2);
        assert_eq!(z.coeff_at(&int(0)).unwrap(), int(1));
        assert_eq!(z.coeff_at(&rat(1, 2)).unwrap(), int(28));
        assert_eq!(z.coeff_at(&int(1)).unwrap(), int(36));
    }

    #[test]
    fn translation_checks() {
        for c in z_rho_checks(12).unwrap() {
            assert!(c.passed(), "{c}");
        }
    }

    #[test]
    fn partition_has_half_integral_exponents() {
        let p = nf4_partition(6).unwrap();
        assert!(p.terms().all(|(m, _)| (2 * m) % p.ram() as i64 == 0));
    }
}
