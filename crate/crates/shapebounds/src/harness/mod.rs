//! Verification harness: parametric shape families, polygon file I/O,
//! parameter sweeps, thin-limit calibration tables, and the batch
//! verification suite.

pub mod asymptotics;
pub mod families;
pub mod io;
pub mod suite;
pub mod sweep;

use thiserror::Error;

pub use asymptotics::{
    family_asymptotics_report, AsymptoticEntry, AsymptoticRow, AsymptoticsReport, FamilyBlock,
    ReferenceBasis, EXACT_RELATIVE_TOLERANCE,
};
pub use families::{
    random_polygon, FamilyKind, FamilySpec, Realization, DEFAULT_BOUNDARY_RESOLUTION,
};
pub use io::{load_polygon, polygon_from_json, polygon_to_json};
pub use suite::{fixed_suite_polygons, run_suite, SuiteOutcome};
pub use sweep::{
    functional_gaps, sweep, thinning_ratio_specs, RatioDenominator, RatioNumerator, RatioSpec,
    SweepRow, SweepTable,
};

/// Errors from shape families, sweeps, reports, and file handling.
#[derive(Debug, Error)]
pub enum HarnessError {
    /// A family was given out-of-range or malformed parameters.
    #[error("invalid family: {0}")]
    InvalidFamily(String),
    /// The family only provides closed-form values, not a polygon.
    #[error("closed_form_only")]
    ClosedFormOnly,
    /// Random sampling failed to produce a usable hull.
    #[error("random hull degenerate after retries")]
    DegenerateHull,
    /// A ratio column specification could not be parsed.
    #[error("invalid ratio spec: {0}")]
    InvalidRatio(String),
    /// A sweep member failed; names the parameter value.
    #[error("sweep failed at parameter {parameter}: {message}")]
    SweepFailure { parameter: f64, message: String },
    /// A polygon file was malformed or described an invalid polygon.
    #[error("invalid polygon input: {0}")]
    PolygonFile(String),
    /// Measurement or profiling failed.
    #[error(transparent)]
    Geometry(#[from] crate::geometry::GeometryError),
    /// Analysis or verification failed.
    #[error(transparent)]
    Inequality(#[from] crate::inequalities::InequalityError),
    /// A file could not be read or written.
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
