//! Convex planar geometry: polygons, widths, inradius, erosion, and inner
//! parallel profiles.
//!
//! The central type is [`ConvexPolygon`]. On top of it this module provides
//! the scalar functionals used throughout the crate (area, perimeter, minimal
//! width, diameter, inradius) and the inner-parallel-set machinery: eroding a
//! polygon by a distance `t` ([`erode`]) and tabulating area and perimeter of
//! the eroded bodies as functions of `t` ([`inner_profile`]).

pub mod erosion;
pub mod inradius;
pub mod point;
pub mod polygon;
pub mod profile;

pub use erosion::erode;
pub use inradius::{inradius_center, Incircle};
pub use point::{Direction, Point};
pub use polygon::ConvexPolygon;
pub use profile::{inner_profile, profile_integral, InnerParallelProfile, ProfileIntegrand};

/// Errors produced by geometric constructions and queries.
#[derive(Debug, thiserror::Error)]
pub enum GeometryError {
    /// The vertex list does not describe a valid counterclockwise convex
    /// polygon: too few corners, wrong orientation, a reflex corner, or
    /// non-finite coordinates.
    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),

    /// The polygon is numerically degenerate for the requested operation
    /// (for example, its inradius vanishes at working precision).
    #[error("degenerate polygon")]
    DegeneratePolygon,

    /// A direction vector was zero or non-finite and cannot be normalized.
    #[error("invalid direction: zero or non-finite vector")]
    InvalidDirection,
}

/// Scalar measurements of a convex polygon gathered in one pass.
#[derive(Clone, Copy, Debug, serde::Serialize)]
pub struct ShapeMeasurements {
    /// Enclosed area.
    pub area: f64,
    /// Boundary length.
    pub perimeter: f64,
    /// Radius of the largest inscribed disk.
    pub inradius: f64,
    /// Center of the largest inscribed disk (a representative point when the
    /// optimal center is not unique).
    pub incenter: Point,
    /// Minimal width over all directions.
    pub min_width: f64,
    /// Largest distance between two points of the region.
    pub diameter: f64,
}

/// Measures all scalar quantities of `polygon` at once.
///
/// # Errors
/// [`GeometryError::DegeneratePolygon`] when the inradius computation fails.
pub fn measure(polygon: &ConvexPolygon) -> Result<ShapeMeasurements, GeometryError> {
    let incircle = inradius_center(polygon)?;
    Ok(ShapeMeasurements {
        area: polygon.area(),
        perimeter: polygon.perimeter(),
        inradius: incircle.radius,
        incenter: incircle.center,
        min_width: polygon.min_width(),
        diameter: polygon.diameter(),
    })
}
