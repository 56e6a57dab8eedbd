//! The four scale-invariant shape functionals and the two asymmetry
//! measures built from the basic geometric quantities.

use serde::Serialize;

use crate::geometry::ShapeMeasurements;
use crate::pde::FunctionalValues;

/// The dimensionless functionals of one shape.
///
/// With torsion `T`, eigenvalue `λ`, area `|Ω|`, perimeter `P`, and
/// inradius `R`:
///
/// * `f1 = T·P²/|Ω|³` — torsion–perimeter functional, in `[1/3, 2/3]`;
/// * `f2 = λ·|Ω|²/P²` — eigenvalue–perimeter functional, in `[π²/16, π²/4]`;
/// * `f3 = T/(R²·|Ω|)` — torsion–inradius functional, in `[1/8, 1/3]`;
/// * `f4 = λ·R²` — eigenvalue–inradius functional, at least `π²/4`.
///
/// The asymmetries: `alpha = w/diam` (width ratio) and
/// `beta = P·R/|Ω| − 1` (thinness), both in `(0, 1]` in the plane; thin
/// bodies drive both to zero, while every tangential body (disk, triangle,
/// regular polygon) has `beta = 1` exactly.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct FunctionalSuite {
    pub f1: f64,
    pub f2: f64,
    pub f3: f64,
    pub f4: f64,
    pub alpha: f64,
    pub beta: f64,
}

/// The two asymmetry measures `(alpha, beta)` of a measured shape.
#[must_use]
pub fn asymmetries(m: &ShapeMeasurements) -> (f64, f64) {
    let alpha = m.min_width / m.diameter;
    let beta = m.perimeter * m.inradius / m.area - 1.0;
    (alpha, beta)
}

/// Combines exact measurements with solver output into the functional suite.
#[must_use]
pub fn functional_suite(m: &ShapeMeasurements, f: &FunctionalValues) -> FunctionalSuite {
    let t = f.torsion.value;
    let lambda = f.lambda1.value;
    let (alpha, beta) = asymmetries(m);
    FunctionalSuite {
        f1: t * m.perimeter * m.perimeter / m.area.powi(3),
        f2: lambda * m.area * m.area / (m.perimeter * m.perimeter),
        f3: t / (m.inradius * m.inradius * m.area),
        f4: lambda * m.inradius * m.inradius,
        alpha,
        beta,
    }
}
