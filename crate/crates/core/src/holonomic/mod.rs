//! P-recursive sequences, exact truncated power series, and linear ODEs with
//! polynomial coefficients.

pub mod catalog;
mod ode;
mod poly;
mod recurrence;
mod series;

pub use ode::{apply_ode, apply_to_monomial, OdeSpec};
pub use poly::IntPoly;
pub use recurrence::{evaluate_recurrence, verify_recurrence, RecurrenceCheck, RecurrenceSpec};
pub use series::TruncatedSeries;
