//! Smoothness of the projective toric variety attached to the inverse-system
//! points `A_I`: face enumeration of `conv(A_I)` and the per-face lattice
//! and semigroup conditions.

mod hull;
mod smooth;

pub use hull::{affine_dim, polytope_faces, Face};
pub use smooth::{
    face_lattice_condition, face_semigroup_condition, is_smooth, is_smooth_points, FaceCondition,
    FaceFailure, SmoothnessVerdict,
};
