//! Exact algebra: cyclotomic coefficients, Laurent polynomials, resultants,
//! period lattices and randomized zero testing.

pub mod cyclotomic;
pub mod laurent;
pub mod lattice;
pub mod resultant;
mod upoly;

pub use cyclotomic::{cyclotomic_minimal_poly, parse_cyclotomic, parse_rational, Cyclotomic};
pub use laurent::{ArithOp, ExponentVector, LaurentPoly};
pub use lattice::{smith_normal_form, support_period_group, PeriodGroup};
pub use resultant::{discriminant_lambda, resultant_lambda};
pub use zero_test::{is_zero_probabilistic, ZeroTestConfig, ZeroVerdict};
