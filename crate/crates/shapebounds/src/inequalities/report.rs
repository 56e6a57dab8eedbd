//! Pass/fail verification report: every inequality in scope evaluated on
//! one analyzed shape, with margins and the tolerances actually used.

use std::f64::consts::{PI, TAU};

use serde::Serialize;

use super::analysis::ShapeData;
use super::constants::derive_2d_constants;
use super::InequalityError;
use crate::geometry::{erode, ConvexPolygon, Point};

/// Absolute tolerance for entries that involve no solver output.
pub const GEOMETRY_TOLERANCE: f64 = 1e-9;

/// One verified inequality: `margin ≥ -tolerance_used` means `pass`.
/// For one-sided entries the margin is the signed slack (`lhs − rhs` for
/// `lhs ≥ rhs`, `rhs − lhs` for `lhs ≤ rhs`); for two-sided entries it is
/// the distance to the nearer bound.
#[derive(Clone, Debug, Serialize)]
pub struct Entry {
    pub id: String,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub pass: bool,
    #[serde(rename = "tol")]
    pub tolerance_used: f64,
}

impl Entry {
    fn finish(id: &str, lhs: f64, rhs: f64, margin: f64, tolerance_used: f64) -> Self {
        Entry {
            id: id.to_string(),
            lhs,
            rhs,
            margin,
            pass: margin >= -tolerance_used,
            tolerance_used,
        }
    }

    /// `lhs ≥ rhs` with slack `lhs − rhs`.
    pub(crate) fn ge(id: &str, lhs: f64, rhs: f64, tol: f64) -> Self {
        Self::finish(id, lhs, rhs, lhs - rhs, tol)
    }

    /// `lhs ≤ rhs` with slack `rhs − lhs`.
    pub(crate) fn le(id: &str, lhs: f64, rhs: f64, tol: f64) -> Self {
        Self::finish(id, lhs, rhs, rhs - lhs, tol)
    }

    /// `lo ≤ value ≤ hi` with slack to the nearer end. `lhs` holds the
    /// value and `rhs` the lower end.
    pub(crate) fn within(id: &str, value: f64, lo: f64, hi: f64, tol: f64) -> Self {
        Self::finish(id, value, lo, (value - lo).min(hi - value), tol)
    }
}

/// The full report for one shape.
#[derive(Clone, Debug, Serialize)]
pub struct InequalityReport {
    #[serde(rename = "shape")]
    pub shape_label: String,
    pub entries: Vec<Entry>,
}

impl InequalityReport {
    /// True when every entry passed.
    #[must_use]
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    /// The entries that failed, if any.
    #[must_use]
    pub fn failures(&self) -> Vec<&Entry> {
        self.entries.iter().filter(|e| !e.pass).collect()
    }

    /// Looks up an entry by id.
    #[must_use]
    pub fn entry(&self, id: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.id == id)
    }
}

/// Reference values of the near-disk comparison body: a regular 256-gon of
/// circumradius 1, fully analyzed. The eigenvalue–inradius functional of any
/// convex body is bounded above by the disk value (domain monotonicity after
/// scaling to unit inradius); the 256-gon stands in for the disk.
#[derive(Clone, Debug)]
pub struct DiskReference {
    pub data: ShapeData,
    /// The reference upper bound for the eigenvalue–inradius functional.
    pub f4: f64,
    /// Tolerance carried by the reference value itself.
    pub f4_tolerance: f64,
}

impl DiskReference {
    /// Number of vertices in the reference polygon.
    pub const VERTICES: usize = 256;

    /// Builds the reference body and runs the full analysis at `fem_tol`.
    pub fn compute(fem_tol: f64) -> Result<Self, InequalityError> {
        let k = Self::VERTICES;
        let vertices = (0..k)
            .map(|i| {
                let phi = TAU * i as f64 / k as f64;
                Point::new(phi.cos(), phi.sin())
            })
            .collect();
        let polygon = ConvexPolygon::new(vertices).expect("regular polygon is convex");
        let data = super::analysis::analyze("disk-256", polygon, fem_tol)?;
        let r = data.measurements.inradius;
        let f4 = data.functionals.f4;
        let f4_tolerance = 10.0 * r * r * data.values.lambda1.error_estimate;
        Ok(DiskReference {
            data,
            f4,
            f4_tolerance,
        })
    }
}

/// Confirms that the bundled quantities in `data` belong to `data.polygon`.
fn check_consistency(data: &ShapeData) -> Result<(), InequalityError> {
    let fresh = crate::geometry::measure(&data.polygon)?;
    let close = |a: f64, b: f64| {
        let scale = a.abs().max(b.abs()).max(1e-30);
        (a - b).abs() <= 1e-9 * scale
    };
    let m = &data.measurements;
    let consistent = close(fresh.area, m.area)
        && close(fresh.perimeter, m.perimeter)
        && close(fresh.inradius, m.inradius)
        && close(fresh.min_width, m.min_width)
        && close(fresh.diameter, m.diameter)
        && close(data.profile.inradius, m.inradius);
    // The functional suite must be derived from exactly these numbers.
    let f = &data.functionals;
    let t = data.values.torsion.value;
    let l = data.values.lambda1.value;
    let derived = close(f.f1, t * m.perimeter * m.perimeter / m.area.powi(3))
        && close(f.f2, l * m.area * m.area / (m.perimeter * m.perimeter))
        && close(f.f3, t / (m.inradius * m.inradius * m.area))
        && close(f.f4, l * m.inradius * m.inradius);
    if consistent && derived {
        Ok(())
    } else {
        Err(InequalityError::ShapeMismatch)
    }
}

/// Evaluates every inequality in scope on an analyzed polygon.
///
/// `tolerance` is an extra caller-provided floor applied to every entry;
/// independent of it, solver-backed entries use ten times the propagated
/// error estimate and purely geometric entries use an absolute 1e-9. The
/// strict torsion–inradius gap (`Q3-LO`) is checked with zero tolerance.
pub fn verify(
    data: &ShapeData,
    disk: &DiskReference,
    tolerance: f64,
) -> Result<InequalityReport, InequalityError> {
    check_consistency(data)?;
    let user_tol = if tolerance.is_finite() && tolerance > 0.0 {
        tolerance
    } else {
        0.0
    };

    let c = derive_2d_constants();
    let m = &data.measurements;
    let f = &data.functionals;
    let (alpha, beta) = (f.alpha, f.beta);
    let (area, per, r) = (m.area, m.perimeter, m.inradius);
    let t_err = data.values.torsion.error_estimate;
    let l_err = data.values.lambda1.error_estimate;

    // Propagated one-sigma error of each functional.
    let ef1 = per * per / area.powi(3) * t_err;
    let ef2 = area * area / (per * per) * l_err;
    let ef3 = t_err / (r * r * area);
    let ef4 = r * r * l_err;
    let tol1 = user_tol.max(10.0 * ef1);
    let tol2 = user_tol.max(10.0 * ef2);
    let tol3 = user_tol.max(10.0 * ef3);
    let tol4 = user_tol.max(10.0 * ef4);
    let geom = user_tol.max(GEOMETRY_TOLERANCE);

    let quarter_pi_sq = PI * PI / 4.0;
    let mut entries = Vec::with_capacity(24);

    // The four classical chains.
    entries.push(Entry::within("CHAIN-T", f.f1, 1.0 / 3.0, 2.0 / 3.0, tol1));
    entries.push(Entry::within(
        "CHAIN-L",
        f.f2,
        PI * PI / 16.0,
        quarter_pi_sq,
        tol2,
    ));
    entries.push(Entry::within("CHAIN-M", f.f3, 1.0 / 8.0, 1.0 / 3.0, tol3));
    entries.push(Entry::within(
        "CHAIN-H",
        f.f4,
        quarter_pi_sq,
        disk.f4,
        tol4 + disk.f4_tolerance,
    ));

    // Quantitative gaps in the thinness asymmetry β.
    let beta3 = beta * beta * beta;
    entries.push(Entry::ge("Q1-LO", f.f1 - 1.0 / 3.0, c.c1 * beta3, tol1));
    entries.push(Entry::le("Q1-HI", f.f1 - 1.0 / 3.0, beta, tol1));
    entries.push(Entry::ge(
        "Q2-LO",
        quarter_pi_sq - f.f2,
        c.c2 * beta3 * beta,
        tol2,
    ));
    entries.push(Entry::le(
        "Q2-HI",
        quarter_pi_sq - f.f2,
        PI * PI / 2.0 * beta,
        tol2,
    ));
    entries.push(Entry::ge("Q3-LO", 1.0 / 3.0 - f.f3, beta / 6.0, 0.0));
    entries.push(Entry::le("Q3-HI", 1.0 / 3.0 - f.f3, 2.0 * beta / 3.0, tol3));
    entries.push(Entry::le(
        "Q4",
        f.f4 - quarter_pi_sq,
        3.0 * PI * PI / 4.0 * beta,
        tol4,
    ));

    // Width-asymmetry bounds with the chained 2D constants.
    entries.push(Entry::ge("Q5", beta, c.k_width * alpha, geom));
    entries.push(Entry::ge("Q6", f.f1 - 1.0 / 3.0, c.c3_alpha * alpha, tol1));
    entries.push(Entry::ge(
        "Q7",
        quarter_pi_sq - f.f2,
        c.c4_alpha * alpha,
        tol2,
    ));

    // Erosion at the contract depth t̄ = |Ω|/P, evaluated exactly.
    let t_bar = area / per;
    let (mu_bar, per_bar) = match erode(&data.polygon, t_bar) {
        Some(inner) => (inner.area(), inner.perimeter()),
        None => (0.0, 0.0),
    };
    entries.push(Entry::ge("L1", mu_bar, c.q1(beta) * area, geom));
    entries.push(Entry::le("L2", per_bar, c.q2(beta) * per, geom));

    // Elementary geometric comparisons.
    entries.push(Entry::within(
        "G1",
        r,
        m.min_width / 3.0,
        m.min_width / 2.0,
        geom,
    ));
    entries.push(Entry::le("G2", per, TAU * m.diameter / 3f64.sqrt(), geom));
    entries.push(Entry::within("G3", per * r / area, 1.0, 2.0, geom));

    // Inner-parallel profile estimates, each at its worst sample.
    entries.push(worst_prof1(data, geom));
    entries.push(worst_prof2(data, geom));
    entries.push(worst_prof3(data, geom));
    entries.push(worst_prof4(data, geom));

    // Sandwiches tying the solver output to the independent profile bounds.
    let t_val = data.values.torsion.value;
    let l_val = data.values.lambda1.value;
    entries.push(Entry::within(
        "SAND-T",
        t_val,
        data.bounds.web_torsion,
        data.bounds.makai_torsion_upper,
        user_tol.max(10.0 * t_err),
    ));
    entries.push(Entry::le(
        "SAND-L",
        l_val,
        data.bounds.polya_lambda_upper,
        user_tol.max(10.0 * l_err),
    ));

    Ok(InequalityReport {
        shape_label: data.label.clone(),
        entries,
    })
}

/// `μ(t) ≥ |Ω| − P·t` at every profile sample.
fn worst_prof1(data: &ShapeData, tol: f64) -> Entry {
    let prof = &data.profile;
    let (area, per) = (data.measurements.area, data.measurements.perimeter);
    let mut worst = (f64::INFINITY, 0.0, 0.0);
    for i in 0..prof.ts.len() {
        let rhs = area - per * prof.ts[i];
        let margin = prof.areas[i] - rhs;
        if margin < worst.0 {
            worst = (margin, prof.areas[i], rhs);
        }
    }
    Entry::ge("PROF-1", worst.1, worst.2, tol)
}

/// `P(t) ≤ P − 2π·t` at every profile sample.
fn worst_prof2(data: &ShapeData, tol: f64) -> Entry {
    let prof = &data.profile;
    let per = data.measurements.perimeter;
    let mut worst = (f64::INFINITY, 0.0, 0.0);
    for i in 0..prof.ts.len() {
        let rhs = per - TAU * prof.ts[i];
        let margin = rhs - prof.perimeters[i];
        if margin < worst.0 {
            worst = (margin, prof.perimeters[i], rhs);
        }
    }
    Entry::le("PROF-2", worst.1, worst.2, tol)
}

/// `P(t) ≤ P − 2π(|Ω| − μ(t))/P` at every profile sample.
fn worst_prof3(data: &ShapeData, tol: f64) -> Entry {
    let prof = &data.profile;
    let (area, per) = (data.measurements.area, data.measurements.perimeter);
    let mut worst = (f64::INFINITY, 0.0, 0.0);
    for i in 0..prof.ts.len() {
        let rhs = per - TAU * (area - prof.areas[i]) / per;
        let margin = rhs - prof.perimeters[i];
        if margin < worst.0 {
            worst = (margin, prof.perimeters[i], rhs);
        }
    }
    Entry::le("PROF-3", worst.1, worst.2, tol)
}

/// `μ(t) ≤ P(t)(R−t) + (R−t)²/2 · P'(t⁺)`, checked just after each profile
/// breakpoint with the right-segment slope (and at the start when the
/// profile has no breakpoints). Valid because the perimeter profile is
/// concave, so it lies below its right tangents.
fn worst_prof4(data: &ShapeData, tol: f64) -> Entry {
    let prof = &data.profile;
    let r = prof.inradius;
    let mut check_points: Vec<usize> = Vec::new();
    if prof.breakpoints.is_empty() {
        check_points.push(0);
    } else {
        for &bp in &prof.breakpoints {
            if let Some(i) = prof.ts.iter().position(|&t| t > bp) {
                if i + 1 < prof.ts.len() {
                    check_points.push(i);
                }
            }
        }
        if check_points.is_empty() {
            check_points.push(0);
        }
    }
    let mut worst = (f64::INFINITY, 0.0, 0.0);
    for &i in &check_points {
        let (t, mu, p) = (prof.ts[i], prof.areas[i], prof.perimeters[i]);
        let dt = prof.ts[i + 1] - t;
        if dt <= 0.0 {
            continue;
        }
        let slope = (prof.perimeters[i + 1] - p) / dt;
        let rem = r - t;
        let rhs = p * rem + rem * rem / 2.0 * slope;
        let margin = rhs - mu;
        if margin < worst.0 {
            worst = (margin, mu, rhs);
        }
    }
    Entry::le("PROF-4", worst.1, worst.2, tol)
}

/// Selects the remainder term a sweep ratio divides by.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Remainder {
    Alpha,
    AlphaSquared,
    Beta,
    BetaSquared,
    BetaCubed,
    BetaFourth,
}

impl Remainder {
    fn evaluate(self, alpha: f64, beta: f64) -> f64 {
        match self {
            Remainder::Alpha => alpha,
            Remainder::AlphaSquared => alpha * alpha,
            Remainder::Beta => beta,
            Remainder::BetaSquared => beta * beta,
            Remainder::BetaCubed => beta * beta * beta,
            Remainder::BetaFourth => beta * beta * beta * beta,
        }
    }
}

/// Smallest observed ratio `gap / remainder(α, β)` over a sweep — a lower
/// estimate of the best constant in inequalities whose constants are not
/// explicit. Each sweep point is `(alpha, beta, gap)`.
pub fn empirical_constant(
    sweep: &[(f64, f64, f64)],
    remainder: Remainder,
) -> Result<f64, InequalityError> {
    if sweep.is_empty() {
        return Err(InequalityError::EmptySweep);
    }
    Ok(sweep
        .iter()
        .map(|&(alpha, beta, gap)| gap / remainder.evaluate(alpha, beta))
        .fold(f64::INFINITY, f64::min))
}
