//! Finite-element solvers for the two boundary-value problems behind the
//! shape functionals: the torsion problem `-Δu = 1` and the first Dirichlet
//! eigenvalue `-Δu = λu`, both with zero boundary values on a convex
//! polygon.
//!
//! The pipeline is deliberately simple and fully deterministic: a fan
//! triangulation from the incenter, uniform midpoint refinement, piecewise
//! linear elements, Jacobi-preconditioned conjugate gradients, and a
//! shift-accelerated inverse power iteration for the eigenvalue. Every
//! returned quantity carries an a-posteriori error estimate from two-level
//! Richardson extrapolation.

pub mod assembly;
pub mod cg;
pub mod closed_form;
pub mod mesh;
pub mod solver;
pub mod sparse;

pub use closed_form::closed_form_rectangle_torsion;
pub use mesh::{fan_triangulation, refine, triangulate, TriangleMesh};
pub use solver::{
    functional_values, solve_lambda1, solve_torsion, FunctionalValues, MeshResolution, PdeError,
    ValueWithError, DEFAULT_TOLERANCE, MAX_TOLERANCE, MIN_TOLERANCE,
};
