//! The full verification suite: a fixed battery of polygons (square,
//! equilateral triangle, fine disk polygon, thinning rectangles, regular
//! polygons), seeded random convex hulls, and the closed-form thinning
//! boxes in dimensions three to five.

use super::families::random_polygon;
use super::HarnessError;
use crate::geometry::{ConvexPolygon, Point};
use crate::inequalities::{
    analyze, verify, verify_closed_form, ClosedFormValues, DiskReference, InequalityReport,
};

/// Vertex count of the disk polygon used both as a suite shape and as the
/// reference for the disk-comparison entries.
pub const DISK_RESOLUTION: usize = 256;

/// Number of uniform samples behind each random suite polygon.
pub const RANDOM_HULL_POINTS: usize = 30;

/// The closed-form thinning boxes exercised by the suite: dimensions paired
/// with thicknesses.
pub const CLOSED_FORM_DIMENSIONS: [u32; 3] = [3, 4, 5];
/// Thicknesses for the closed-form thinning boxes.
pub const CLOSED_FORM_THICKNESSES: [f64; 3] = [0.2, 0.1, 0.05];

/// Outcome of a suite run.
#[derive(Clone, Debug)]
pub struct SuiteOutcome {
    pub reports: Vec<InequalityReport>,
}

impl SuiteOutcome {
    /// True when every entry of every report passes.
    #[must_use]
    pub fn all_pass(&self) -> bool {
        self.reports.iter().all(InequalityReport::all_pass)
    }

    /// Total number of evaluated inequality entries.
    #[must_use]
    pub fn entry_count(&self) -> usize {
        self.reports.iter().map(|r| r.entries.len()).sum()
    }

    /// `(shape label, failing entry id, margin)` for every failed entry.
    #[must_use]
    pub fn failures(&self) -> Vec<(String, String, f64)> {
        let mut out = Vec::new();
        for report in &self.reports {
            for entry in report.failures() {
                out.push((report.shape_label.clone(), entry.id.clone(), entry.margin));
            }
        }
        out
    }

    /// A short human-readable summary.
    #[must_use]
    pub fn summary(&self) -> String {
        let failures = self.failures();
        let mut text = format!(
            "{} shapes, {} inequality entries, {} failures",
            self.reports.len(),
            self.entry_count(),
            failures.len()
        );
        for (label, id, margin) in failures.iter().take(20) {
            text.push_str(&format!("\n  FAIL {label} {id} margin {margin:.3e}"));
        }
        if failures.len() > 20 {
            text.push_str(&format!("\n  ... and {} more", failures.len() - 20));
        }
        text
    }
}

fn polygon(points: &[(f64, f64)]) -> ConvexPolygon {
    ConvexPolygon::new(points.iter().map(|&(x, y)| Point::new(x, y)).collect())
        .expect("fixed suite shapes are valid")
}

fn regular(k: usize, r: f64) -> ConvexPolygon {
    let vertices = (0..k)
        .map(|i| {
            let phi = std::f64::consts::TAU * i as f64 / k as f64;
            Point::new(r * phi.cos(), r * phi.sin())
        })
        .collect();
    ConvexPolygon::new(vertices).expect("regular polygons are valid")
}

/// The fixed (non-random) polygon battery with its labels.
#[must_use]
pub fn fixed_suite_polygons() -> Vec<(String, ConvexPolygon)> {
    let mut shapes = Vec::new();
    shapes.push((
        "unit-square".to_string(),
        polygon(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]),
    ));
    shapes.push((
        "equilateral-triangle".to_string(),
        polygon(&[(0.0, 0.0), (1.0, 0.0), (0.5, 3f64.sqrt() / 2.0)]),
    ));
    shapes.push((format!("disk-{DISK_RESOLUTION}"), regular(DISK_RESOLUTION, 1.0)));
    for a in [0.5, 0.2, 0.1, 0.05] {
        shapes.push((
            format!("rectangle-1x{a}"),
            polygon(&[(0.0, 0.0), (1.0, 0.0), (1.0, a), (0.0, a)]),
        ));
    }
    for k in 3..=12 {
        shapes.push((format!("regular-{k}"), regular(k, 1.0)));
    }
    shapes
}

/// Runs the verification suite: the fixed battery, `random_count` seeded
/// random hulls (seeds 1..=random_count), and the closed-form thinning
/// boxes. `fem_tolerance` controls the solver, `tolerance` is the extra
/// margin floor handed to the verifier.
pub fn run_suite(
    random_count: usize,
    fem_tolerance: f64,
    tolerance: f64,
) -> Result<SuiteOutcome, HarnessError> {
    let disk = DiskReference::compute(fem_tolerance)?;
    let mut reports = Vec::new();

    for (label, poly) in fixed_suite_polygons() {
        let data = analyze(&label, poly, fem_tolerance)?;
        reports.push(verify(&data, &disk, tolerance)?);
    }
    for seed in 1..=random_count as u64 {
        let poly = random_polygon(seed, RANDOM_HULL_POINTS)?;
        let label = format!("random-{seed}-{RANDOM_HULL_POINTS}");
        let data = analyze(&label, poly, fem_tolerance)?;
        reports.push(verify(&data, &disk, tolerance)?);
    }
    for dimension in CLOSED_FORM_DIMENSIONS {
        for thickness in CLOSED_FORM_THICKNESSES {
            let values = ClosedFormValues::thinning_box(dimension, thickness);
            reports.push(verify_closed_form(&values, tolerance));
        }
    }
    Ok(SuiteOutcome { reports })
}
