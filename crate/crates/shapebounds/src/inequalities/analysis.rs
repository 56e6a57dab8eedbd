//! One-stop analysis of a convex polygon: exact geometry, inner parallel
//! profile, profile bounds, finite-element functionals, and the combined
//! functional suite.

use serde::Serialize;

use super::functionals::{functional_suite, FunctionalSuite};
use super::InequalityError;
use crate::bounds::{bound_values, BoundValues};
use crate::geometry::{inner_profile, measure, ConvexPolygon, InnerParallelProfile, ShapeMeasurements};
use crate::pde::{functional_values, FunctionalValues};

/// Number of inner-profile samples used by the analysis pipeline.
pub const DEFAULT_PROFILE_SAMPLES: usize = 512;

/// Everything the verification report needs to know about one polygon.
#[derive(Clone, Debug, Serialize)]
pub struct ShapeData {
    pub label: String,
    pub polygon: ConvexPolygon,
    pub measurements: ShapeMeasurements,
    pub values: FunctionalValues,
    pub profile: InnerParallelProfile,
    pub bounds: BoundValues,
    pub functionals: FunctionalSuite,
}

/// Runs the full pipeline on a polygon: exact measurements, the inner
/// parallel profile at the default resolution, the profile bounds, the
/// finite-element solves at tolerance `fem_tol`, and the functional suite.
pub fn analyze(
    label: &str,
    polygon: ConvexPolygon,
    fem_tol: f64,
) -> Result<ShapeData, InequalityError> {
    let measurements = measure(&polygon)?;
    let profile = inner_profile(&polygon, DEFAULT_PROFILE_SAMPLES)?;
    let bounds = bound_values(&profile);
    let values = functional_values(&polygon, fem_tol)?;
    let functionals = functional_suite(&measurements, &values);
    Ok(ShapeData {
        label: label.to_string(),
        polygon,
        measurements,
        values,
        profile,
        bounds,
        functionals,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Point;

    #[test]
    fn analysis_bundles_consistent_quantities() {
        let square = ConvexPolygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(0.0, 1.0),
        ])
        .unwrap();
        let data = analyze("unit-square", square, 1e-6).unwrap();
        assert_eq!(data.label, "unit-square");
        assert!((data.measurements.area - 1.0).abs() < 1e-12);
        // The torsion sandwich from independent computations.
        assert!(data.bounds.web_torsion <= data.values.torsion.value);
        assert!(data.values.torsion.value <= data.bounds.makai_torsion_upper);
        // The eigenvalue upper bound.
        assert!(data.values.lambda1.value <= data.bounds.polya_lambda_upper);
        // Functional suite coupled to the same numbers.
        let expect_f1 = data.values.torsion.value * data.measurements.perimeter.powi(2)
            / data.measurements.area.powi(3);
        assert_eq!(data.functionals.f1, expect_f1);
    }
}
