//! Shape functionals of planar convex bodies.
//!
//! `shapebounds` computes geometric and spectral quantities of convex
//! polygons — area, perimeter, inradius, minimal width, diameter, inner
//! parallel profiles, torsional rigidity, and the first Dirichlet Laplacian
//! eigenvalue — and verifies a family of sharp inequalities relating them,
//! including quantitative stability versions with explicit constants.
//!
//! # Modules
//! - [`geometry`]: convex polygons, widths, inradius, erosion, inner
//!   parallel profiles;
//! - [`pde`]: P1 finite-element solvers for torsional rigidity and the first
//!   Dirichlet eigenvalue, with Richardson extrapolation and error estimates;
//! - [`bounds`]: closed-form torsion and eigenvalue bounds built from the
//!   inner parallel profile;
//! - [`inequalities`]: scale-invariant shape functionals, explicit constants,
//!   and the inequality verification report;
//! - [`harness`]: parametric shape families, sweeps, sharpness tables, and
//!   the batch verification suite behind the command-line interface.

pub mod bounds;
pub mod geometry;
pub mod harness;
pub mod inequalities;
pub mod pde;
