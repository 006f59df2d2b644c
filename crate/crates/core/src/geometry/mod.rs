//! Exact polyhedral geometry in orthant coordinates.
//!
//! Every polytope here lives in the coordinates `x_i`, `i ∈ T`, of a colored
//! set `T`, ordered by block. In those coordinates the vectors `ē_i` are
//! orthonormal, so the normal complex of a divisor and the independence
//! polytopes of a rank function are cut out by coordinate sums.

pub mod complex;
pub mod minkowski;
pub mod polytope;
pub mod svg;
pub mod volume;

pub use complex::{
    compare_normal_complex, independence_polytope, ipc_volume, ipc_volume_via_transversals, normal_complex_equals_ipc,
    normal_complex_piece, orthant_volumes, NormalComplexReport,
};
pub use minkowski::{minkowski_sum, mixed_volume_simplices, scaled_simplex, simplex};
pub use polytope::{ExactPolytope, Halfspace, Point};
pub use volume::{normalized_volume, normalized_volume_with_order};
