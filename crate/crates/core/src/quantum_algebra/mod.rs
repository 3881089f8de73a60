//! The noncommutative coordinate algebra: PBW rewriting, Moyal-Weyl maps,
//! conjugation, the metric, and spin representations of the symmetry algebra.

mod metric;
mod ncpoly;
mod spin;

pub use metric::{lower_index, lower_pair, metric, metric_trace, raise_index};
pub use ncpoly::{nc_conjugate, nc_mul, normal_order, normal_order_with, unweyl, weyl, NCPoly, NCWord};
pub use spin::{is_zero_matrix, mat_mul, uqsu2_matrices, uqsu2_relation_residuals, Matrix, SpinRep, Surd};
