//! Numerical band structure: eigenvalues on Brillouin-zone grids and
//! overlap statistics.

pub mod eigen;
pub mod stats;
pub mod sweep;

pub use eigen::{hermitian_eigenvalues, ComplexMatrix};
pub use stats::{decay_series, degeneracy_statistic, offset_statistic, overlap_statistic, DecayRow, DecayTable, OffsetReport, OverlapReport};
pub use sweep::{sweep_grid, BandGrid, SweepOptions};
