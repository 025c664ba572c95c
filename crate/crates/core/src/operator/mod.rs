//! Periodic operators and their Floquet symbols.

pub mod spec;
pub mod symbol;

pub use spec::{Edge, GraphSpec, OperatorSpec, SchrodingerSpec};
pub use symbol::{
    build_dual_symbol, build_graph_symbol, build_schrodinger_symbol, build_symbol, dft_potential,
    FloquetSymbol, HermitianCheck, PotentialSpectrumTable,
};
