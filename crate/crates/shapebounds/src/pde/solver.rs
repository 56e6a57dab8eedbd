//! Finite-element evaluation of torsional rigidity and the first Dirichlet
//! eigenvalue on convex polygons.
//!
//! Both quantities are computed on two nested mesh levels and combined by
//! Richardson extrapolation with the observed second-order convergence rate,
//! which also yields an a-posteriori error estimate.

use std::f64::consts::PI;

use serde::Serialize;
use thiserror::Error;

use super::assembly::{assemble, DirichletSystem};
use super::cg::pcg;
use super::mesh::{fan_triangulation, refine, TriangleMesh};
use crate::geometry::{inradius_center, ConvexPolygon, GeometryError};

/// Smallest accepted solver tolerance; requests below are clamped.
pub const MIN_TOLERANCE: f64 = 1e-8;
/// Largest accepted solver tolerance; requests above are clamped.
pub const MAX_TOLERANCE: f64 = 1e-2;
/// Default solver tolerance used by the command-line tools.
pub const DEFAULT_TOLERANCE: f64 = 1e-6;

const TARGET_FINE_TRIANGLES: f64 = 16384.0;
const MIN_FINE_LEVEL: u32 = 2;
const MAX_FINE_LEVEL: u32 = 8;
const MAX_EIG_ITERATIONS: usize = 1000;

/// Errors from the finite-element solvers.
#[derive(Debug, Error)]
pub enum PdeError {
    /// The polygon could not be measured or meshed.
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    /// The conjugate-gradient iteration hit its iteration cap.
    #[error("cg_divergence")]
    CgDivergence,
    /// The eigenvalue iteration failed to settle.
    #[error("eig_divergence")]
    EigDivergence,
}

/// A computed quantity with an a-posteriori error estimate.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ValueWithError {
    pub value: f64,
    pub error_estimate: f64,
}

/// Resolution descriptor for the mesh pair behind a solve.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct MeshResolution {
    /// Refinement levels applied to the incenter fan for the fine mesh.
    pub fine_level: u32,
    pub fine_triangles: usize,
    pub coarse_triangles: usize,
    pub fine_max_edge: f64,
}

/// Torsional rigidity and first Dirichlet eigenvalue of a convex polygon.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct FunctionalValues {
    pub torsion: ValueWithError,
    pub lambda1: ValueWithError,
    pub mesh_size: MeshResolution,
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Refinement level for the fine mesh: quadrupling from `m` fan triangles
/// toward the triangle budget, clamped to a sane range.
fn fine_level(fan_triangles: usize) -> u32 {
    let ideal = (TARGET_FINE_TRIANGLES / fan_triangles as f64).log(4.0).round();
    ideal.clamp(f64::from(MIN_FINE_LEVEL), f64::from(MAX_FINE_LEVEL)) as u32
}

struct LevelPair {
    coarse_mesh: TriangleMesh,
    fine_mesh: TriangleMesh,
    coarse: DirichletSystem,
    fine: DirichletSystem,
    /// Parent node pair of each node the last refinement created.
    parents: Vec<(usize, usize)>,
    fine_level: u32,
    /// Hersch shift `π² / (4R²)`, a strict lower bound on the eigenvalue.
    sigma: f64,
}

fn build_levels(polygon: &ConvexPolygon) -> Result<LevelPair, PdeError> {
    let incircle = inradius_center(polygon)?;
    let sigma = PI * PI / (4.0 * incircle.radius * incircle.radius);
    let fan = fan_triangulation(polygon)?;
    let level = fine_level(fan.triangles.len());
    let mut coarse_mesh = fan;
    for _ in 0..level - 1 {
        coarse_mesh = refine(&coarse_mesh).0;
    }
    let (fine_mesh, parents) = refine(&coarse_mesh);
    let coarse = assemble(&coarse_mesh);
    let fine = assemble(&fine_mesh);
    Ok(LevelPair {
        coarse_mesh,
        fine_mesh,
        coarse,
        fine,
        parents,
        fine_level: level,
        sigma,
    })
}

/// Interpolates a coarse interior-node vector onto the fine interior nodes:
/// carried nodes copy their value, midpoints average their parents (boundary
/// parents contribute zero).
fn prolong(pair: &LevelPair, coarse_vals: &[f64]) -> Vec<f64> {
    let coarse_n = pair.coarse_mesh.nodes.len();
    let mut by_node = vec![0.0; pair.fine_mesh.nodes.len()];
    for (k, &node) in pair.coarse.interior_nodes.iter().enumerate() {
        by_node[node] = coarse_vals[k];
    }
    for (k, &(u, v)) in pair.parents.iter().enumerate() {
        by_node[coarse_n + k] = 0.5 * (by_node[u] + by_node[v]);
    }
    pair.fine
        .interior_nodes
        .iter()
        .map(|&node| by_node[node])
        .collect()
}

/// Solves `-Δu = 1` on one level; returns the solution and `∫ u`.
fn torsion_on_level(
    sys: &DirichletSystem,
    warm: Option<&[f64]>,
    rel_tol: f64,
) -> Result<(Vec<f64>, f64), PdeError> {
    let (u, _iters) =
        pcg(&sys.stiffness, &sys.load, warm, rel_tol).ok_or(PdeError::CgDivergence)?;
    let integral = dot(&sys.load, &u);
    Ok((u, integral))
}

/// Shift-accelerated inverse power iteration for the smallest eigenvalue of
/// `K x = λ M x`. The shift is a guaranteed strict lower bound on λ, so
/// `K - σM` stays positive definite while the spectral separation collapses
/// to a few outer iterations even on elongated domains.
fn lambda_on_level(
    sys: &DirichletSystem,
    sigma: f64,
    seed: &[f64],
    rel_tol: f64,
) -> Result<(Vec<f64>, f64), PdeError> {
    let n = sys.load.len();
    if n == 0 {
        return Err(PdeError::EigDivergence);
    }
    let shifted = sys.stiffness.add_scaled(&sys.mass, -sigma);
    let inner_tol = (0.01 * rel_tol).clamp(1e-13, 1e-4);

    let mut x = seed.to_vec();
    let mut mx = vec![0.0; n];
    sys.mass.mul_vec(&x, &mut mx);
    let norm_sq = dot(&x, &mx);
    if !(norm_sq.is_finite() && norm_sq > 0.0) {
        x = vec![1.0; n];
        sys.mass.mul_vec(&x, &mut mx);
    } else {
        let s = norm_sq.sqrt();
        for v in &mut x {
            *v /= s;
        }
        for v in &mut mx {
            *v /= s;
        }
    }

    let mut rho_prev = f64::INFINITY;
    let mut warm: Option<Vec<f64>> = None;
    for _ in 0..MAX_EIG_ITERATIONS {
        let (y, _) =
            pcg(&shifted, &mx, warm.as_deref(), inner_tol).ok_or(PdeError::CgDivergence)?;
        let mut my = vec![0.0; n];
        sys.mass.mul_vec(&y, &mut my);
        let ymy = dot(&y, &my);
        if !(ymy.is_finite() && ymy > 0.0) {
            return Err(PdeError::EigDivergence);
        }
        let s = ymy.sqrt();
        x = y.iter().map(|&v| v / s).collect();
        mx = my.iter().map(|&v| v / s).collect();
        let rho = sys.stiffness.quadratic_form(&x);
        if (rho - rho_prev).abs() <= rel_tol * rho.abs() {
            return Ok((x, rho));
        }
        rho_prev = rho;
        // Predict the next inner solution: for an eigenvector,
        // (K - σM)⁻¹ M x = x / (λ - σ).
        let gap = rho - sigma;
        warm = if gap > 1e-300 {
            Some(x.iter().map(|&v| v / gap).collect())
        } else {
            None
        };
    }
    Err(PdeError::EigDivergence)
}

/// Second-order Richardson extrapolation over a nested mesh pair; the spread
/// between levels drives the error estimate.
fn extrapolate(coarse: f64, fine: f64) -> ValueWithError {
    let correction = (fine - coarse) / 3.0;
    let value = fine + correction;
    let error_estimate = correction
        .abs()
        .max(value.abs() * 1e-12)
        .max(f64::MIN_POSITIVE);
    ValueWithError {
        value,
        error_estimate,
    }
}

fn clamp_tolerance(tol: f64) -> f64 {
    if tol.is_nan() {
        return DEFAULT_TOLERANCE;
    }
    tol.clamp(MIN_TOLERANCE, MAX_TOLERANCE)
}

fn mesh_resolution(pair: &LevelPair) -> MeshResolution {
    MeshResolution {
        fine_level: pair.fine_level,
        fine_triangles: pair.fine_mesh.triangles.len(),
        coarse_triangles: pair.coarse_mesh.triangles.len(),
        fine_max_edge: pair.fine_mesh.max_edge_length(),
    }
}

/// Torsional rigidity `T = ∫ u` for `-Δu = 1`, `u = 0` on the boundary,
/// with an a-posteriori error estimate. The extrapolated value exceeds both
/// single-level values, which approach the true rigidity from below.
pub fn solve_torsion(polygon: &ConvexPolygon, tol: f64) -> Result<(f64, f64), PdeError> {
    let tol = clamp_tolerance(tol);
    let pair = build_levels(polygon)?;
    let (u_c, t_c) = torsion_on_level(&pair.coarse, None, tol)?;
    let warm = prolong(&pair, &u_c);
    let (_, t_f) = torsion_on_level(&pair.fine, Some(&warm), tol)?;
    let out = extrapolate(t_c, t_f);
    Ok((out.value, out.error_estimate))
}

/// First Dirichlet eigenvalue with an a-posteriori error estimate. The
/// single-level Rayleigh quotients are upper bounds on the true eigenvalue;
/// extrapolation removes most of the mesh bias.
pub fn solve_lambda1(polygon: &ConvexPolygon, tol: f64) -> Result<(f64, f64), PdeError> {
    let tol = clamp_tolerance(tol);
    let pair = build_levels(polygon)?;
    let seed: Vec<f64> = pair.coarse.load.clone();
    let (eig_c, l_c) = lambda_on_level(&pair.coarse, pair.sigma, &seed, tol)?;
    let fine_seed = prolong(&pair, &eig_c);
    let (_, l_f) = lambda_on_level(&pair.fine, pair.sigma, &fine_seed, tol)?;
    let out = extrapolate(l_c, l_f);
    Ok((out.value, out.error_estimate))
}

/// Both functionals in one pass over a shared mesh pair: the torsion solve
/// doubles as the seed for the eigenvalue iteration.
pub fn functional_values(
    polygon: &ConvexPolygon,
    tol: f64,
) -> Result<FunctionalValues, PdeError> {
    let tol = clamp_tolerance(tol);
    let pair = build_levels(polygon)?;

    let (u_c, t_c) = torsion_on_level(&pair.coarse, None, tol)?;
    let torsion_warm = prolong(&pair, &u_c);
    let (_, t_f) = torsion_on_level(&pair.fine, Some(&torsion_warm), tol)?;

    let (eig_c, l_c) = lambda_on_level(&pair.coarse, pair.sigma, &u_c, tol)?;
    let eig_seed = prolong(&pair, &eig_c);
    let (_, l_f) = lambda_on_level(&pair.fine, pair.sigma, &eig_seed, tol)?;

    Ok(FunctionalValues {
        torsion: extrapolate(t_c, t_f),
        lambda1: extrapolate(l_c, l_f),
        mesh_size: mesh_resolution(&pair),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Point;
    use crate::pde::closed_form::closed_form_rectangle_torsion;

    fn unit_square() -> ConvexPolygon {
        ConvexPolygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(0.0, 1.0),
        ])
        .unwrap()
    }

    fn rectangle(a: f64, b: f64) -> ConvexPolygon {
        ConvexPolygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(a, 0.0),
            Point::new(a, b),
            Point::new(0.0, b),
        ])
        .unwrap()
    }

    #[test]
    fn square_torsion_and_eigenvalue_hit_reference_values() {
        let square = unit_square();
        let values = functional_values(&square, 1e-7).unwrap();

        let t_exact = closed_form_rectangle_torsion(1.0, 1.0);
        let t_rel = (values.torsion.value - t_exact).abs() / t_exact;
        assert!(
            t_rel < 1e-3,
            "square torsion {} vs exact {t_exact}: relative error {t_rel}",
            values.torsion.value
        );

        let l_exact = 2.0 * PI * PI;
        let l_rel = (values.lambda1.value - l_exact).abs() / l_exact;
        assert!(
            l_rel < 1e-3,
            "square eigenvalue {} vs exact {l_exact}: relative error {l_rel}",
            values.lambda1.value
        );

        assert!(values.torsion.error_estimate > 0.0);
        assert!(values.lambda1.error_estimate > 0.0);
        assert_eq!(values.mesh_size.fine_level, 6);
        assert_eq!(values.mesh_size.fine_triangles, 4 * 4usize.pow(6));
    }

    #[test]
    fn dedicated_solvers_match_combined_path() {
        let square = unit_square();
        let combined = functional_values(&square, 1e-6).unwrap();
        let (t, t_err) = solve_torsion(&square, 1e-6).unwrap();
        let (l, _l_err) = solve_lambda1(&square, 1e-6).unwrap();
        assert!((t - combined.torsion.value).abs() <= 1e-12 * t.abs());
        assert!(t_err > 0.0);
        // Different eigenvalue seeds may shift the iterate slightly; both
        // runs must agree far below the discretization error.
        assert!((l - combined.lambda1.value).abs() <= 1e-6 * l.abs());
    }

    #[test]
    fn rectangle_torsion_matches_series() {
        let poly = rectangle(1.0, 0.4);
        let (t, err) = solve_torsion(&poly, 1e-7).unwrap();
        let exact = closed_form_rectangle_torsion(1.0, 0.4);
        let rel = (t - exact).abs() / exact;
        assert!(rel < 2e-3, "torsion {t} vs series {exact}: relative {rel}");
        assert!((t - exact).abs() <= 10.0 * err.max(1e-6 * exact));
    }

    #[test]
    fn invariant_bounds_hold() {
        // λ ≥ π²/(4R²) and T ≤ R²|Ω|/3 for any convex domain.
        for poly in [unit_square(), rectangle(1.0, 0.3)] {
            let incircle = inradius_center(&poly).unwrap();
            let v = functional_values(&poly, 1e-6).unwrap();
            let hersch = PI * PI / (4.0 * incircle.radius * incircle.radius);
            assert!(
                v.lambda1.value >= hersch - 10.0 * v.lambda1.error_estimate,
                "eigenvalue {} below cavity bound {hersch}",
                v.lambda1.value
            );
            let saint_venant = incircle.radius * incircle.radius * poly.area() / 3.0;
            assert!(
                v.torsion.value <= saint_venant + 10.0 * v.torsion.error_estimate,
                "torsion {} above inradius bound {saint_venant}",
                v.torsion.value
            );
        }
    }

    #[test]
    fn tolerance_is_clamped() {
        let square = unit_square();
        // Absurd tolerances must not panic or change the outcome class.
        let (t_loose, _) = solve_torsion(&square, 1.0).unwrap();
        let (t_tight, _) = solve_torsion(&square, 0.0).unwrap();
        let exact = closed_form_rectangle_torsion(1.0, 1.0);
        assert!((t_tight - exact).abs() / exact < 1e-3);
        // The loose solve is clamped to 1e-2 relative residual, still sane.
        assert!((t_loose - exact).abs() / exact < 1e-2);
    }

    #[test]
    fn fine_level_policy() {
        assert_eq!(fine_level(4), 6);
        assert_eq!(fine_level(256), 3);
        assert_eq!(fine_level(30), 5);
        assert_eq!(fine_level(100_000), MIN_FINE_LEVEL);
        assert_eq!(fine_level(1), 7);
    }
}
