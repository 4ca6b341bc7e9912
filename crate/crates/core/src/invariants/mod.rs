//! Donaldson invariants of the projective plane: Goettsche's closed
//! formula, the u-plane coefficients for `N_f = 0, 2, 3`, the constant-term
//! criterion, and the auxiliary series used to check them.

mod classical;
mod hcombo;
mod index;
mod nf4;
mod precision;
mod reference;
mod table;
mod uplane;

pub use classical::{
    h_suite, hurwitz, hurwitz_number, mock_identities, theta_identities, vafa_witten_series, z0, z0_suite, z0_times_fm,
    Z0Report,
};
pub use hcombo::HCombo;
pub use index::{euler_leading_h, index_chern_coeffs, phi_euler_combo, phi_euler_combo_with, IndexChernCoeffs};
pub use nf4::{g_function, nf4_partition, z_function, z_rho_checks};
pub use precision::at_precision;
pub use reference::{errata, printed_table, Erratum, PrintedRow};
pub use table::{invariant_table, monomial, printed_combo, printed_table_checks, InvariantRow, InvariantTable};
pub use uplane::{
    criterion_check, criterion_series, d_coefficient, goettsche_phi, goettsche_value, lambda_summand, uplane_d,
    uplane_d_with, Side,
};
