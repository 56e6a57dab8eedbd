//! Inner parallel profiles: area and perimeter of erosions as functions of
//! the erosion depth.
//!
//! For a convex polygon the eroded perimeter `P(t)` is piecewise linear in
//! `t` and the eroded area `mu(t)` is piecewise quadratic, with kinks exactly
//! where an edge of the eroded polygon disappears. The profile is built from
//! those exact pieces:
//!
//! 1. breakpoints are located by bisection on the eroded edge count, which is
//!    nonincreasing in the depth;
//! 2. depths are sampled on a uniform grid united with both flanks of every
//!    breakpoint, two extra points inside the final piece, and all pair
//!    midpoints;
//! 3. area and perimeter are evaluated exactly at every sampled depth by
//!    actually eroding, and the terminal values at the inradius are the limit
//!    `mu = 0` together with the linear extrapolation of the last perimeter
//!    piece.
//!
//! Because consecutive samples never straddle a kink, every integral of the
//! profile reduces to closed forms on each sample pair; [`profile_integral`]
//! evaluates the integrands needed by the torsion and eigenvalue bounds with
//! no quadrature error beyond roundoff.

use super::erosion::erode;
use super::inradius::inradius_center;
use super::polygon::ConvexPolygon;
use super::GeometryError;

/// Minimum number of grid samples; requests below this are raised to it.
pub const MIN_SAMPLES: usize = 16;

/// Relative bisection tolerance (in units of the inradius) for breakpoints.
const BREAKPOINT_TOL: f64 = 1e-12;

/// Relative distance (in units of the inradius) kept between profile samples
/// and any kink depth. Erosions evaluated closer than this to a kink can hit
/// the reconstruction noise floor when adjacent edges are nearly collinear.
const KINK_SAMPLE_MARGIN: f64 = 1e-9;

/// Sampled inner parallel profile of a convex polygon.
#[derive(Clone, Debug, serde::Serialize)]
pub struct InnerParallelProfile {
    /// Erosion depths, strictly increasing from `0` to the inradius.
    pub ts: Vec<f64>,
    /// Area of the erosion at each depth; ends with exactly `0`.
    pub areas: Vec<f64>,
    /// Perimeter of the erosion at each depth; the terminal value is the
    /// one-sided limit at the inradius (positive when the erosion collapses
    /// to a segment rather than a point).
    pub perimeters: Vec<f64>,
    /// Depths at which the eroded polygon loses edges, strictly inside
    /// `(0, inradius)`, each located to relative accuracy `1e-12`.
    pub breakpoints: Vec<f64>,
    /// Inradius of the polygon: the depth at which the erosion vanishes.
    pub inradius: f64,
}

/// Integrands of [`profile_integral`], integrated in the depth `t` over
/// `[0, inradius]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProfileIntegrand {
    /// `mu(t)`: the eroded area.
    Mu,
    /// `t * P(t)`: depth times eroded perimeter.
    TPer,
    /// `t^2 * P(t)`.
    TSqPer,
    /// `mu(t)^2 / P(t)`.
    MuSqOverPer,
}

/// Builds the inner parallel profile of `polygon` with at least `n_samples`
/// grid points (raised to [`MIN_SAMPLES`] if smaller).
///
/// # Errors
/// [`GeometryError::DegeneratePolygon`] when the inradius vanishes at working
/// precision.
pub fn inner_profile(
    polygon: &ConvexPolygon,
    n_samples: usize,
) -> Result<InnerParallelProfile, GeometryError> {
    let n = n_samples.max(MIN_SAMPLES);
    let r = inradius_center(polygon)?.radius;
    let breakpoints = find_breakpoints(polygon, r);

    // Depths at (or within reconstruction noise of) a kink make several
    // shifted edge lines concurrent, which the half-plane sweep does not
    // handle reliably. Nearly simultaneous edge collapses — common when a
    // hull has an almost-collinear vertex triple — are grouped into one
    // cluster, and samples are placed a safe margin outside each cluster.
    let margin = KINK_SAMPLE_MARGIN * r;
    let mut clusters: Vec<(f64, f64)> = Vec::new();
    for &bp in &breakpoints {
        match clusters.last_mut() {
            Some((_, hi)) if bp - *hi <= 2.0 * margin => *hi = bp,
            _ => clusters.push((bp, bp)),
        }
    }
    let away = |t: f64| {
        clusters
            .iter()
            .all(|&(lo, hi)| t < lo - 0.5 * margin || t > hi + 0.5 * margin)
    };
    let t_max = r * (1.0 - 1e-12);
    let mut candidates: Vec<f64> = (0..n)
        .map(|j| r * j as f64 / n as f64)
        .filter(|&t| t < t_max && away(t))
        .collect();
    for &(lo, hi) in &clusters {
        for flank in [lo - margin, hi + margin] {
            if flank > 0.0 && flank < t_max {
                candidates.push(flank);
            }
        }
    }
    // Two extra points inside the final polynomial piece so the terminal
    // perimeter can be extrapolated from the correct linear segment.
    let piece_start = breakpoints.last().copied().unwrap_or(0.0);
    candidates.push(piece_start + 0.5 * (r - piece_start));
    candidates.push(piece_start + 0.75 * (r - piece_start));
    candidates.sort_by(f64::total_cmp);
    candidates.dedup_by(|b, a| *b - *a <= 0.25 * margin);

    // Midpoints keep two samples inside every polynomial piece, which the
    // closed-form integration and consistency checks rely on.
    let mut with_mids = Vec::with_capacity(2 * candidates.len());
    for (i, &t) in candidates.iter().enumerate() {
        with_mids.push(t);
        if let Some(&next) = candidates.get(i + 1) {
            // No midpoint between the two flanks of a kink cluster: it
            // would land back on the degenerate depths.
            if next - t > 4.0 * margin {
                with_mids.push(0.5 * (t + next));
            }
        }
    }

    let mut ts = Vec::with_capacity(with_mids.len() + 1);
    let mut areas = Vec::with_capacity(with_mids.len() + 1);
    let mut perimeters = Vec::with_capacity(with_mids.len() + 1);
    for t in with_mids {
        // Erosion may already be numerically empty within a sliver of the
        // inradius; such depths are simply not sampled.
        if let Some(e) = erode(polygon, t) {
            ts.push(t);
            areas.push(e.area());
            perimeters.push(e.perimeter());
        }
    }
    if ts.len() < 2 {
        return Err(GeometryError::DegeneratePolygon);
    }

    // Terminal values at t = inradius: the area limit is exactly zero; the
    // perimeter limit comes from extrapolating the final linear piece.
    let k = ts.len();
    let slope = (perimeters[k - 1] - perimeters[k - 2]) / (ts[k - 1] - ts[k - 2]);
    let p_end = (perimeters[k - 1] + slope * (r - ts[k - 1])).max(0.0);
    ts.push(r);
    areas.push(0.0);
    perimeters.push(p_end);

    Ok(InnerParallelProfile {
        ts,
        areas,
        perimeters,
        breakpoints,
        inradius: r,
    })
}

/// Locates the depths where the eroded polygon loses edges.
///
/// The eroded edge count is nonincreasing in the depth, so equal counts at
/// the ends of an interval mean no breakpoint inside; each jump is then
/// isolated by bisection to `BREAKPOINT_TOL * inradius`.
fn find_breakpoints(polygon: &ConvexPolygon, r: f64) -> Vec<f64> {
    let count = |t: f64| erode(polygon, t).map_or(0, |e| e.len());
    let hi = r * (1.0 - 1e-12);
    let mut out = Vec::new();
    bisect_jumps(
        &count,
        0.0,
        hi,
        count(0.0),
        count(hi),
        BREAKPOINT_TOL * r,
        &mut out,
    );
    out.dedup_by(|b, a| *b - *a <= 2.0 * BREAKPOINT_TOL * r);
    out
}

fn bisect_jumps(
    count: &dyn Fn(f64) -> usize,
    lo: f64,
    hi: f64,
    clo: usize,
    chi: usize,
    tol: f64,
    out: &mut Vec<f64>,
) {
    if clo == chi {
        return;
    }
    if hi - lo <= tol {
        // A jump to zero edges is the terminal collapse at the inradius (or
        // its numerical shadow just below), not an interior kink.
        if chi > 0 {
            out.push(hi);
        }
        return;
    }
    let mid = 0.5 * (lo + hi);
    let cmid = count(mid);
    bisect_jumps(count, lo, mid, clo, cmid, tol, out);
    bisect_jumps(count, mid, hi, cmid, chi, tol, out);
}

/// Integrates `integrand` over the full depth range `[0, inradius]`.
///
/// On each consecutive sample pair the perimeter is linear and the area
/// quadratic (with the area slope equal to minus the perimeter), so every
/// integrand has a closed form; the results are exact up to roundoff.
#[must_use]
pub fn profile_integral(profile: &InnerParallelProfile, integrand: ProfileIntegrand) -> f64 {
    let mut total = 0.0;
    for i in 0..profile.ts.len() - 1 {
        let t1 = profile.ts[i];
        let t2 = profile.ts[i + 1];
        let h = t2 - t1;
        if h <= 0.0 {
            continue;
        }
        let mu1 = profile.areas[i];
        let mu2 = profile.areas[i + 1];
        let p1 = profile.perimeters[i];
        let p2 = profile.perimeters[i + 1];
        // Perimeter slope magnitude; mu(t) = mu1 - p1 (t-t1) + q (t-t1)^2 / 2.
        let q = (p1 - p2) / h;

        total += match integrand {
            ProfileIntegrand::Mu => mu1 * h - p1 * h * h / 2.0 + q * h * h * h / 6.0,
            ProfileIntegrand::TPer => {
                let i0 = p1 * h - q * h * h / 2.0;
                let i1 = p1 * h * h / 2.0 - q * h * h * h / 3.0;
                t1 * i0 + i1
            }
            ProfileIntegrand::TSqPer => {
                let i0 = p1 * h - q * h * h / 2.0;
                let i1 = p1 * h * h / 2.0 - q * h * h * h / 3.0;
                let i2 = p1 * h * h * h / 3.0 - q * h * h * h * h / 4.0;
                t1 * t1 * i0 + 2.0 * t1 * i1 + i2
            }
            ProfileIntegrand::MuSqOverPer => mu_sq_over_per(h, mu1, mu2, p1, p2, q),
        };
    }
    total
}

/// Closed form of the pair integral of `mu^2 / P`.
///
/// Substituting `u = P(t)` (with `du = -q dt`) turns the integrand into a
/// rational function of `u`, because `mu = B + u^2 / (2q)` for the constant
/// `B = mu2 - P2^2 / (2q)`. Two degenerate regimes are handled separately:
/// nearly constant perimeter (`q ~ 0`), and `B ~ 0`, where the body collapses
/// to a point and the logarithmic antiderivative term vanishes.
fn mu_sq_over_per(h: f64, mu1: f64, mu2: f64, p1: f64, p2: f64, q: f64) -> f64 {
    let pbar = 0.5 * (p1 + p2);
    if pbar <= 0.0 {
        return 0.0;
    }
    if q <= 0.0 || q * h <= 1e-9 * pbar {
        // The true perimeter is non-increasing, so a flat pair — or one
        // inverted by reconstruction noise across a near-parallel kink —
        // carries no usable slope. Integrate it with the affine rule.
        return (mu1.powi(3) - mu2.powi(3)) / (3.0 * pbar * pbar);
    }
    // Anchoring B at the right endpoint is stable when the body is close to
    // collapse there.
    let b = mu2 - p2 * p2 / (2.0 * q);
    let b_scale = mu1 + p1 * p1 / (2.0 * q.abs());
    if b.abs() <= 1e-9 * b_scale {
        return (p1.powi(4) - p2.powi(4)) / (16.0 * q.powi(3));
    }
    let p2safe = p2.max(1e-300);
    (b * b * (p1 / p2safe).ln() + b * (p1 * p1 - p2 * p2) / (2.0 * q)
        + (p1.powi(4) - p2.powi(4)) / (16.0 * q * q))
        / q
}
