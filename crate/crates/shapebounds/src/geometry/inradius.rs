//! Largest inscribed disk of a convex polygon.
//!
//! The inradius and a center attaining it solve the linear program
//!
//! ```text
//!   maximize r   subject to   n_i . c + r <= n_i . v_i   for every edge i,
//! ```
//!
//! where `n_i` is the outward unit normal of edge `i` and `v_i` a vertex on
//! that edge. The program is solved with Seidel's randomized incremental
//! algorithm in the three variables `(c_x, c_y, r)`, using a deterministic
//! seeded shuffle so results are reproducible. Coordinates are normalized to
//! the polygon's centroid and bounding-box extent first, and a fixed bounding
//! cube keeps every subproblem bounded.
//!
//! The optimal center can be non-unique (a rectangle's incircle slides along
//! a segment). The returned center is then a deterministic representative:
//! the centroid of the erosion at depth just below the inradius, which picks
//! the middle of the optimal segment. The returned radius always equals the
//! minimum over edges of the distance from the returned center to the edge
//! line.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::erosion::erode;
use super::point::Point;
use super::polygon::ConvexPolygon;
use super::GeometryError;

/// The largest inscribed disk: its radius and a center attaining it.
#[derive(Clone, Copy, Debug, serde::Serialize)]
pub struct Incircle {
    /// Radius of the largest inscribed disk.
    pub radius: f64,
    /// A center attaining the radius (deterministic representative when the
    /// optimal center is not unique).
    pub center: Point,
}

/// Half the side of the bounding cube added as scaffold constraints; the
/// normalized optimum always lies well inside.
const CUBE: f64 = 4.0;
/// Half the side of the seeding square for two-dimensional subproblems; large
/// enough to contain the cube's intersection with any plane.
const SQUARE: f64 = 16.0;
/// Feasibility slack: constraint violations up to this are ignored
/// (coordinates are normalized to order one).
const FEAS_TOL: f64 = 1e-12;
/// Coefficient magnitudes below this are treated as parallel in the
/// one-dimensional base case.
const PAR_TOL: f64 = 1e-14;
/// Seed for the reproducible constraint shuffle.
const SHUFFLE_SEED: u64 = 0x5EED_1E5;

/// Computes the inradius and an optimal center of `polygon`.
///
/// # Errors
/// [`GeometryError::DegeneratePolygon`] when the inradius vanishes at working
/// precision relative to the polygon's extent.
pub fn inradius_center(polygon: &ConvexPolygon) -> Result<Incircle, GeometryError> {
    let c0 = polygon.centroid();
    let (bb_min, bb_max) = polygon.bounding_box();
    let scale = (bb_max.x - bb_min.x).max(bb_max.y - bb_min.y);

    // Scaffold cube faces first (never shuffled), then the edge constraints
    // n . c + r <= n . v in normalized coordinates.
    let mut cons: Vec<([f64; 3], f64)> = vec![
        ([1.0, 0.0, 0.0], CUBE),
        ([-1.0, 0.0, 0.0], CUBE),
        ([0.0, 1.0, 0.0], CUBE),
        ([0.0, -1.0, 0.0], CUBE),
        ([0.0, 0.0, 1.0], CUBE),
        ([0.0, 0.0, -1.0], CUBE),
    ];
    for i in 0..polygon.len() {
        let n = polygon.outward_normal(i);
        let (a, _) = polygon.edge(i);
        let v = (a - c0) * (1.0 / scale);
        cons.push(([n.x, n.y, 1.0], n.x * v.x + n.y * v.y));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SHUFFLE_SEED);
    cons[6..].shuffle(&mut rng);

    let u = lp3(&cons, [0.0, 0.0, 1.0]).ok_or(GeometryError::DegeneratePolygon)?;
    if u[2] <= 1e-10 {
        return Err(GeometryError::DegeneratePolygon);
    }

    let lp_center = c0 + Point::new(u[0], u[1]) * scale;
    let mut center = lp_center;
    let mut radius = min_edge_distance(polygon, lp_center);

    // Deterministic representative center: centroid of the near-maximal
    // erosion. Kept only when it does not lose inradius.
    if radius > 0.0 {
        if let Some(deep) = erode(polygon, radius * (1.0 - 1e-6)) {
            let g = deep.centroid();
            let rg = min_edge_distance(polygon, g);
            if rg >= radius {
                center = g;
                radius = rg;
            }
        }
    }

    if radius <= 1e-10 * scale {
        return Err(GeometryError::DegeneratePolygon);
    }
    Ok(Incircle { radius, center })
}

/// Minimum over edges of the signed distance from `p` to the edge line
/// (positive inside the polygon).
#[must_use]
pub fn min_edge_distance(polygon: &ConvexPolygon, p: Point) -> f64 {
    let mut best = f64::INFINITY;
    for i in 0..polygon.len() {
        let n = polygon.outward_normal(i);
        let (a, _) = polygon.edge(i);
        best = best.min(n.dot(a - p));
    }
    best
}

fn dot3(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross3(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn norm3(a: [f64; 3]) -> f64 {
    dot3(a, a).sqrt()
}

fn corner(c: f64, bound: f64) -> f64 {
    if c >= 0.0 {
        bound
    } else {
        -bound
    }
}

/// Maximizes `c . u` over `{u : cons . u <= rhs}`; the first constraints must
/// form a bounded scaffold satisfied by the seeding cube corner.
fn lp3(cons: &[([f64; 3], f64)], c: [f64; 3]) -> Option<[f64; 3]> {
    let mut x = [corner(c[0], CUBE), corner(c[1], CUBE), corner(c[2], CUBE)];
    for i in 0..cons.len() {
        let (a, b) = cons[i];
        if dot3(a, x) <= b + FEAS_TOL {
            continue;
        }
        // The new optimum lies on this constraint's plane; solve the
        // two-dimensional restriction over all earlier constraints.
        x = lp3_on_plane(a, b, &cons[..i], c)?;
    }
    Some(x)
}

/// Maximizes `c . u` on the plane `a . u = b` subject to `cons`.
fn lp3_on_plane(a: [f64; 3], b: f64, cons: &[([f64; 3], f64)], c: [f64; 3]) -> Option<[f64; 3]> {
    let nn = norm3(a);
    let n = [a[0] / nn, a[1] / nn, a[2] / nn];
    let u0 = [n[0] * b / nn, n[1] * b / nn, n[2] * b / nn];

    // Orthonormal in-plane basis: start from the axis least aligned with n.
    let k = (0..3)
        .min_by(|&i, &j| n[i].abs().total_cmp(&n[j].abs()))
        .unwrap();
    let mut e1 = [0.0; 3];
    e1[k] = 1.0;
    let proj = dot3(e1, n);
    for (e, &ni) in e1.iter_mut().zip(&n) {
        *e -= proj * ni;
    }
    let l = norm3(e1);
    for e in &mut e1 {
        *e /= l;
    }
    let e2 = cross3(n, e1);

    // Seeding square plus projected constraints.
    let mut cons2: Vec<([f64; 2], f64)> = vec![
        ([1.0, 0.0], SQUARE),
        ([-1.0, 0.0], SQUARE),
        ([0.0, 1.0], SQUARE),
        ([0.0, -1.0], SQUARE),
    ];
    cons2.extend(cons.iter().map(|&(aj, bj)| {
        (
            [dot3(aj, e1), dot3(aj, e2)],
            bj - dot3(aj, u0),
        )
    }));
    let c2 = [dot3(c, e1), dot3(c, e2)];

    let y = lp2(&cons2, c2)?;
    Some([
        u0[0] + y[0] * e1[0] + y[1] * e2[0],
        u0[1] + y[0] * e1[1] + y[1] * e2[1],
        u0[2] + y[0] * e1[2] + y[1] * e2[2],
    ])
}

fn lp2(cons: &[([f64; 2], f64)], c: [f64; 2]) -> Option<[f64; 2]> {
    let mut y = [corner(c[0], SQUARE), corner(c[1], SQUARE)];
    for i in 0..cons.len() {
        let (a, b) = cons[i];
        if a[0] * y[0] + a[1] * y[1] <= b + FEAS_TOL {
            continue;
        }
        y = lp2_on_line(a, b, &cons[..i], c)?;
    }
    Some(y)
}

/// Maximizes `c . y` on the line `a . y = b` subject to `cons`.
fn lp2_on_line(a: [f64; 2], b: f64, cons: &[([f64; 2], f64)], c: [f64; 2]) -> Option<[f64; 2]> {
    let nn = (a[0] * a[0] + a[1] * a[1]).sqrt();
    if nn < PAR_TOL {
        // Degenerate projected constraint: violated but directionless.
        return None;
    }
    let y0 = [a[0] * b / (nn * nn), a[1] * b / (nn * nn)];
    let d = [-a[1] / nn, a[0] / nn];

    let mut lo = f64::NEG_INFINITY;
    let mut hi = f64::INFINITY;
    for &(aj, bj) in cons {
        let coef = aj[0] * d[0] + aj[1] * d[1];
        let rhs = bj - (aj[0] * y0[0] + aj[1] * y0[1]);
        if coef > PAR_TOL {
            hi = hi.min(rhs / coef);
        } else if coef < -PAR_TOL {
            lo = lo.max(rhs / coef);
        } else if rhs < -FEAS_TOL {
            return None;
        }
    }
    if lo > hi + FEAS_TOL {
        return None;
    }
    if lo > hi {
        let mid = 0.5 * (lo + hi);
        lo = mid;
        hi = mid;
    }
    let alpha = c[0] * d[0] + c[1] * d[1];
    let tau = if alpha >= 0.0 { hi } else { lo };
    debug_assert!(tau.is_finite(), "scaffold must bound every subproblem");
    Some([y0[0] + tau * d[0], y0[1] + tau * d[1]])
}
