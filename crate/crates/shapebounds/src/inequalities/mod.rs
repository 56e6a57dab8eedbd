//! The shape functionals, their asymmetry measures, the explicit constants,
//! and the machinery that turns an analyzed shape into a pass/fail report
//! covering every inequality in scope.

pub mod analysis;
pub mod closed_form;
pub mod constants;
pub mod functionals;
pub mod report;

use thiserror::Error;

pub use analysis::{analyze, ShapeData, DEFAULT_PROFILE_SAMPLES};
pub use closed_form::{verify_closed_form, ClosedFormValues};
pub use constants::{
    c1_constant, c2_constant, derive_2d_constants, q1_area_fraction, q2_perimeter_fraction,
    InequalityConstants, TOTAL_TURNING_2D,
};
pub use functionals::{asymmetries, functional_suite, FunctionalSuite};
pub use report::{
    empirical_constant, verify, DiskReference, Entry, InequalityReport, Remainder,
    GEOMETRY_TOLERANCE,
};

/// Errors from analysis and verification.
#[derive(Debug, Error)]
pub enum InequalityError {
    /// The polygon could not be measured, eroded, or profiled.
    #[error(transparent)]
    Geometry(#[from] crate::geometry::GeometryError),
    /// A finite-element solve failed.
    #[error(transparent)]
    Pde(#[from] crate::pde::PdeError),
    /// The bundled quantities do not belong to the bundled polygon.
    #[error("shape_mismatch")]
    ShapeMismatch,
    /// An empirical-constant sweep contained no points.
    #[error("empty sweep")]
    EmptySweep,
}
