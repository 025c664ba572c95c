//! Exact period and band-overlap criteria for periodic graph operators.
//!
//! The characteristic polynomial `det(𝒜(z) − λI)` of a Floquet symbol is
//! computed exactly over cyclotomic rationals; square-freeness, shift
//! invariance and offset conditions are decided through `λ`-resultants, and
//! band functions are sampled numerically to measure coincidences on grids.

pub mod algebra;
pub mod bands;
pub mod cli;
pub mod error;
pub mod operator;
pub mod variety;

pub use error::{Error, Result};
