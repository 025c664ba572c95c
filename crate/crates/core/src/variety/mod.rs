//! The characteristic polynomial and the algebraic criteria decided on it.

pub mod analyze;
pub mod charpoly;
pub mod criteria;
pub mod report;
pub mod schrodinger;

pub use analyze::{analyze, describe_operator, AnalyzeOptions, TestKind};
pub use charpoly::{charpoly, CharPoly};
pub use criteria::{
    c_alpha_sweep, c_alpha_test, no_nontrivial_periods_certificate, offset_test, squarefree_test, CriteriaConfig,
};
pub use report::{Method, TestRecord, TestReport, Verdict, Witness};
pub use schrodinger::{dual_consistency_check, top_component_check, top_component_product};
