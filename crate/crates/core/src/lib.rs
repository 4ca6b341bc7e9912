//! Exact q-series engine for mock modular forms, Appell-Lerch sums and the
//! Donaldson invariants of the complex projective plane.

pub mod arith;
pub mod check;
pub mod error;
pub mod forms;
pub mod invariants;
pub mod mock;
pub mod named;
pub mod series;
pub mod sw;

pub use arith::{int, rat, CycloElem, CycloField, Rational, Scalar};
pub use error::{Error, Result};
pub use series::QSeries;
