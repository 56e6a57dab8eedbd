//! Inward erosion (inner parallel sets) of convex polygons.
//!
//! The erosion of a convex polygon by distance `t` is the set of interior
//! points at distance at least `t` from the boundary. For a polygon it equals
//! the intersection of the half-planes obtained by shifting every edge line
//! inward by `t`, so it is again a convex polygon (possibly empty, never with
//! more edges than the original).
//!
//! The half-planes inherit the edge ordering of the polygon, which makes them
//! sorted by direction angle; the intersection is therefore computed with the
//! linear-time deque sweep for angularly sorted half-planes.

use std::collections::VecDeque;

use super::point::Point;
use super::polygon::ConvexPolygon;

/// A half-plane `{x : (x - p) x d >= 0}`: points on or to the left of the
/// oriented line through `p` with direction `d`.
#[derive(Clone, Copy, Debug)]
struct HalfPlane {
    p: Point,
    d: Point,
}

impl HalfPlane {
    fn angle(&self) -> f64 {
        self.d.y.atan2(self.d.x)
    }

    /// Strictly outside: to the right of the oriented line.
    fn excludes(&self, x: Point) -> bool {
        self.d.cross(x - self.p) < 0.0
    }

    /// Intersection point of the two boundary lines.
    fn intersect(&self, other: &HalfPlane) -> Point {
        let s = (other.p - self.p).cross(other.d) / self.d.cross(other.d);
        self.p + self.d * s
    }
}

/// Erodes `polygon` inward by distance `t`.
///
/// Returns `None` when the erosion is empty (which happens exactly for `t`
/// at or beyond the inradius, up to working precision). `erode(polygon, 0)`
/// returns an exact copy.
///
/// # Panics
/// When `t` is negative or not finite.
#[must_use]
pub fn erode(polygon: &ConvexPolygon, t: f64) -> Option<ConvexPolygon> {
    assert!(t >= 0.0 && t.is_finite(), "erosion distance must be >= 0");
    if t == 0.0 {
        return Some(polygon.clone());
    }

    let m = polygon.len();
    let mut planes = Vec::with_capacity(m);
    for i in 0..m {
        let (a, b) = polygon.edge(i);
        let n = polygon.outward_normal(i);
        planes.push(HalfPlane {
            p: a - n * t,
            d: b - a,
        });
    }

    // Rotate so direction angles are strictly increasing. Walking the edges
    // of a counterclockwise convex polygon turns monotonically through one
    // full revolution, so starting at the minimal angle removes the single
    // wrap-around of `atan2`.
    let start = (0..m)
        .min_by(|&i, &j| planes[i].angle().total_cmp(&planes[j].angle()))
        .expect("polygon has edges");
    planes.rotate_left(start);

    let mut dq: VecDeque<HalfPlane> = VecDeque::with_capacity(m);
    for &h in &planes {
        while dq.len() >= 2 && h.excludes(dq[dq.len() - 2].intersect(&dq[dq.len() - 1])) {
            dq.pop_back();
        }
        while dq.len() >= 2 && h.excludes(dq[0].intersect(&dq[1])) {
            dq.pop_front();
        }
        dq.push_back(h);
    }
    while dq.len() >= 3 && dq[0].excludes(dq[dq.len() - 2].intersect(&dq[dq.len() - 1])) {
        dq.pop_back();
    }
    while dq.len() >= 3 && dq[dq.len() - 1].excludes(dq[0].intersect(&dq[1])) {
        dq.pop_front();
    }
    if dq.len() < 3 {
        return None;
    }

    let k = dq.len();
    let vertices: Vec<Point> = (0..k).map(|i| dq[i].intersect(&dq[(i + 1) % k])).collect();

    // Near total collapse the sweep can emit a sliver that fails validation;
    // that is the empty erosion at working precision. The dedicated
    // constructor keeps the legitimately tiny corners of fine polygons that
    // the collinearity merge in `ConvexPolygon::new` would flatten.
    ConvexPolygon::from_halfplane_sweep(vertices).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> ConvexPolygon {
        ConvexPolygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(0.0, 1.0),
        ])
        .unwrap()
    }

    fn rectangle(a: f64) -> ConvexPolygon {
        ConvexPolygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, a),
            Point::new(0.0, a),
        ])
        .unwrap()
    }

    fn heptagon() -> ConvexPolygon {
        let verts = (0..7)
            .map(|i| {
                let phi = 2.0 * std::f64::consts::PI * i as f64 / 7.0 + 0.35;
                Point::new(2.0 * phi.cos() + 0.3, 1.5 * phi.sin() - 0.2)
            })
            .collect();
        ConvexPolygon::new(verts).unwrap()
    }

    /// Independent oracle: clip the polygon successively against each shifted
    /// half-plane (Sutherland-Hodgman), then take the shoelace area.
    fn clipped_area(polygon: &ConvexPolygon, t: f64) -> f64 {
        let mut pts: Vec<Point> = polygon.vertices().to_vec();
        for i in 0..polygon.len() {
            let (a, _) = polygon.edge(i);
            let n = polygon.outward_normal(i);
            let p = a - n * t;
            // Keep the side where (x - p) . n <= 0.
            let mut out = Vec::new();
            let k = pts.len();
            for j in 0..k {
                let u = pts[j];
                let v = pts[(j + 1) % k];
                let fu = n.dot(u - p);
                let fv = n.dot(v - p);
                if fu <= 0.0 {
                    out.push(u);
                }
                if (fu < 0.0 && fv > 0.0) || (fu > 0.0 && fv < 0.0) {
                    out.push(u + (v - u) * (fu / (fu - fv)));
                }
            }
            pts = out;
            if pts.len() < 3 {
                return 0.0;
            }
        }
        let k = pts.len();
        0.5 * (0..k)
            .map(|j| pts[j].cross(pts[(j + 1) % k]))
            .sum::<f64>()
    }

    #[test]
    fn square_erosion_is_centered_square() {
        let e = erode(&square(), 0.2).unwrap();
        assert_eq!(e.len(), 4);
        assert!((e.area() - 0.36).abs() < 1e-14);
        assert!((e.perimeter() - 2.4).abs() < 1e-14);
        let (min, max) = e.bounding_box();
        assert!((min.x - 0.2).abs() < 1e-14 && (max.x - 0.8).abs() < 1e-14);
        assert!((min.y - 0.2).abs() < 1e-14 && (max.y - 0.8).abs() < 1e-14);
    }

    #[test]
    fn erosion_beyond_inradius_is_empty() {
        assert!(erode(&square(), 0.5).is_none());
        assert!(erode(&square(), 0.7).is_none());
        assert!(erode(&square(), 0.499).is_some());
        // Right triangle with legs 1: inradius (2 - sqrt(2))/2 ~ 0.2929.
        let tri = ConvexPolygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(0.0, 1.0),
        ])
        .unwrap();
        assert!(erode(&tri, 0.29).is_some());
        assert!(erode(&tri, 0.30).is_none());
    }

    #[test]
    fn erosion_at_zero_is_identity() {
        let p = heptagon();
        let e = erode(&p, 0.0).unwrap();
        assert_eq!(e.len(), p.len());
        for (a, b) in e.vertices().iter().zip(p.vertices()) {
            assert_eq!(a, b);
        }
    }

    #[test]
    fn rectangle_erosion_matches_closed_form() {
        let a = 0.1;
        let e = erode(&rectangle(a), 0.03).unwrap();
        assert!((e.area() - 0.94 * 0.04).abs() < 1e-15);
        assert!((e.perimeter() - 2.0 * (0.94 + 0.04)).abs() < 1e-14);
    }

    #[test]
    fn erosion_is_a_semigroup() {
        let p = heptagon();
        let two_step = erode(&erode(&p, 0.2).unwrap(), 0.3).unwrap();
        let one_step = erode(&p, 0.5).unwrap();
        assert_eq!(two_step.len(), one_step.len());
        for v in two_step.vertices() {
            let nearest = one_step
                .vertices()
                .iter()
                .map(|w| w.distance(*v))
                .fold(f64::INFINITY, f64::min);
            assert!(nearest < 1e-9, "semigroup vertex mismatch: {nearest}");
        }
    }

    #[test]
    fn regular_polygon_erodes_homothetically() {
        let k = 9;
        let apothem = (std::f64::consts::PI / k as f64).cos();
        let gon = crate::geometry::polygon::tests::regular_ngon(k, 1.0);
        let t = 0.4;
        let e = erode(&gon, t).unwrap();
        assert_eq!(e.len(), k);
        let ratio = (apothem - t) / apothem;
        assert!((e.area() - gon.area() * ratio * ratio).abs() < 1e-12);
        assert!((e.perimeter() - gon.perimeter() * ratio).abs() < 1e-12);
    }

    #[test]
    fn erosion_matches_clipping_oracle() {
        let p = heptagon();
        for &t in &[0.05, 0.2, 0.5, 0.8, 1.0, 1.1] {
            let mine = erode(&p, t).map_or(0.0, |e| e.area());
            let oracle = clipped_area(&p, t);
            assert!(
                (mine - oracle).abs() <= 1e-10 * p.area(),
                "t = {t}: {mine} vs oracle {oracle}"
            );
        }
    }

    #[test]
    fn edge_count_never_increases_with_depth() {
        let p = heptagon();
        let mut last = p.len();
        let mut t = 0.0;
        while let Some(e) = erode(&p, t) {
            assert!(e.len() <= last, "edge count grew at t = {t}");
            last = e.len();
            t += 0.02;
        }
    }
}
