//! Exact algebra and analysis on the three-dimensional q-deformed Euclidean
//! quantum space.

pub mod braided;
pub mod derivatives;
pub mod lattice;
pub mod qexp;
pub mod quantum_algebra;
pub mod scalars;
pub mod series;
pub mod star;
