//! Convex polygons and their elementary scalar functionals.
//!
//! # Representation
//! A [`ConvexPolygon`] stores its vertices in counterclockwise order; strict
//! convexity is enforced at construction after merging collinear runs, so
//! every stored vertex is a proper corner. All downstream algorithms (support
//! queries, erosion, meshing) rely on this normalization.
//!
//! # Algorithms
//! - area: shoelace formula;
//! - support/width: linear scans over vertices;
//! - minimal width: scan over edge normals (for a convex polygon the minimal
//!   width is always attained in a direction normal to an edge);
//! - diameter: maximal pairwise vertex distance.

use serde::Serialize;

use super::point::{Direction, Point};
use super::GeometryError;

/// Cross-product tolerance factor for merging collinear vertices.
///
/// Two consecutive edges are considered collinear when their cross product is
/// at most this factor times the squared bounding-box extent; such vertices
/// would produce degenerate half-planes under erosion and are removed.
pub const COLLINEAR_MERGE_FACTOR: f64 = 1e-12;

/// A bounded convex region given by its corners in counterclockwise order.
#[derive(Clone, Debug, Serialize)]
pub struct ConvexPolygon {
    vertices: Vec<Point>,
}

impl ConvexPolygon {
    /// Builds a convex polygon from counterclockwise vertices.
    ///
    /// Consecutive duplicate and collinear vertices are merged (tolerance
    /// [`COLLINEAR_MERGE_FACTOR`] times the squared bounding-box extent).
    ///
    /// # Errors
    /// [`GeometryError::InvalidPolygon`] when fewer than three corners remain
    /// after merging, when the orientation is clockwise, when any coordinate
    /// is not finite, or when a reflex corner makes the input non-convex.
    pub fn new(vertices: Vec<Point>) -> Result<Self, GeometryError> {
        if vertices.len() < 3 {
            return Err(GeometryError::InvalidPolygon(
                "fewer than 3 vertices".into(),
            ));
        }
        if vertices.iter().any(|p| !p.x.is_finite() || !p.y.is_finite()) {
            return Err(GeometryError::InvalidPolygon(
                "non-finite coordinate".into(),
            ));
        }

        let scale = bounding_extent(&vertices);
        if scale == 0.0 {
            return Err(GeometryError::InvalidPolygon(
                "all vertices coincide".into(),
            ));
        }
        let cross_tol = COLLINEAR_MERGE_FACTOR * scale * scale;

        let merged = merge_collinear(vertices, cross_tol)?;
        if merged.len() < 3 {
            return Err(GeometryError::InvalidPolygon(
                "degenerate after collinear merge".into(),
            ));
        }

        // After merging, every remaining corner must turn strictly left.
        let m = merged.len();
        for i in 0..m {
            let a = merged[i];
            let b = merged[(i + 1) % m];
            let c = merged[(i + 2) % m];
            let cross = (b - a).cross(c - b);
            if cross <= cross_tol {
                return Err(GeometryError::InvalidPolygon(if cross < 0.0 {
                    "clockwise orientation or reflex corner".into()
                } else {
                    "collinear corner after merge".into()
                }));
            }
        }

        let poly = Self { vertices: merged };
        if poly.area() <= 0.0 {
            return Err(GeometryError::InvalidPolygon(
                "non-positive signed area".into(),
            ));
        }
        Ok(poly)
    }

    /// The corners in counterclockwise order.
    #[must_use]
    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Number of corners (equivalently, edges).
    #[must_use]
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    /// Always false: a valid polygon has at least three corners.
    #[must_use]
    pub fn is_empty(&self) -> bool {
        false
    }

    /// The edge from corner `i` to corner `i + 1` (cyclic).
    #[must_use]
    pub fn edge(&self, i: usize) -> (Point, Point) {
        let m = self.vertices.len();
        (self.vertices[i % m], self.vertices[(i + 1) % m])
    }

    /// Enclosed area via the shoelace formula (positive by construction).
    #[must_use]
    pub fn area(&self) -> f64 {
        let m = self.vertices.len();
        let mut twice = 0.0;
        for i in 0..m {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % m];
            twice += a.cross(b);
        }
        0.5 * twice
    }

    /// Sum of edge lengths.
    #[must_use]
    pub fn perimeter(&self) -> f64 {
        let m = self.vertices.len();
        (0..m)
            .map(|i| self.vertices[i].distance(self.vertices[(i + 1) % m]))
            .sum()
    }

    /// Support function: the largest projection of the region onto `dir`.
    #[must_use]
    pub fn support(&self, dir: Direction) -> f64 {
        let v = dir.vector();
        self.vertices
            .iter()
            .map(|p| p.dot(v))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Width in direction `dir`: `support(dir) + support(-dir)`.
    #[must_use]
    pub fn width(&self, dir: Direction) -> f64 {
        self.support(dir) + self.support(-dir)
    }

    /// Minimal width over all directions.
    ///
    /// For a convex polygon the minimum is attained in a direction normal to
    /// some edge, so an exact scan over edge normals suffices.
    #[must_use]
    pub fn min_width(&self) -> f64 {
        let m = self.vertices.len();
        let mut best = f64::INFINITY;
        for i in 0..m {
            let (a, b) = self.edge(i);
            let e = b - a;
            // Unit normal to the edge; orientation is irrelevant for width.
            let n = e.perp();
            let dir = Direction::new(n.x, n.y).expect("polygon edges have positive length");
            best = best.min(self.width(dir));
        }
        best
    }

    /// Largest distance between two points of the region, attained at a
    /// vertex pair; quadratic scan over vertex pairs.
    #[must_use]
    pub fn diameter(&self) -> f64 {
        let m = self.vertices.len();
        let mut best: f64 = 0.0;
        for i in 0..m {
            for j in (i + 1)..m {
                best = best.max(self.vertices[i].distance(self.vertices[j]));
            }
        }
        best
    }

    /// Axis-aligned bounding box as `(min, max)` corners.
    #[must_use]
    pub fn bounding_box(&self) -> (Point, Point) {
        let mut min = Point::new(f64::INFINITY, f64::INFINITY);
        let mut max = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for p in &self.vertices {
            min.x = min.x.min(p.x);
            min.y = min.y.min(p.y);
            max.x = max.x.max(p.x);
            max.y = max.y.max(p.y);
        }
        (min, max)
    }

    /// Area centroid of the region.
    #[must_use]
    pub fn centroid(&self) -> Point {
        let m = self.vertices.len();
        let mut cx = 0.0;
        let mut cy = 0.0;
        let mut twice_area = 0.0;
        // Shifting by the first vertex keeps the cross products well scaled
        // for polygons far from the origin.
        let origin = self.vertices[0];
        for i in 0..m {
            let a = self.vertices[i] - origin;
            let b = self.vertices[(i + 1) % m] - origin;
            let w = a.cross(b);
            twice_area += w;
            cx += (a.x + b.x) * w;
            cy += (a.y + b.y) * w;
        }
        Point::new(
            origin.x + cx / (3.0 * twice_area),
            origin.y + cy / (3.0 * twice_area),
        )
    }

    /// The image under `x -> factor * x + offset`, `factor > 0`.
    ///
    /// # Errors
    /// Propagates construction failure for non-finite results.
    pub fn scaled(&self, factor: f64, offset: Point) -> Result<Self, GeometryError> {
        Self::new(
            self.vertices
                .iter()
                .map(|&p| p * factor + offset)
                .collect(),
        )
    }

    /// Outward unit normal of edge `i`.
    #[must_use]
    pub(crate) fn outward_normal(&self, i: usize) -> Point {
        let (a, b) = self.edge(i);
        let e = b - a;
        let n = -e.perp();
        n * (1.0 / n.norm())
    }

    /// Builds a polygon from the vertex cycle emitted by a half-plane sweep,
    /// keeping legitimately tiny corners that [`ConvexPolygon::new`] would
    /// flatten.
    ///
    /// Eroding a finely discretized polygon produces corners whose cross
    /// products are far below any area-scaled collinearity threshold while
    /// still being exact geometry (short edges turning by small angles), so
    /// this path merges only true numerical degeneracies: consecutive
    /// vertices closer than `1e-13` of the extent, and corners whose turn is
    /// not strictly left.
    ///
    /// # Errors
    /// [`GeometryError::InvalidPolygon`] when fewer than three corners
    /// survive the cleanup — the collapsed intersection at working
    /// precision.
    pub(crate) fn from_halfplane_sweep(
        mut vertices: Vec<Point>,
    ) -> Result<Self, GeometryError> {
        if vertices.iter().any(|p| !p.x.is_finite() || !p.y.is_finite()) {
            return Err(GeometryError::InvalidPolygon(
                "non-finite coordinate".into(),
            ));
        }
        let scale = bounding_extent(&vertices);
        if scale == 0.0 {
            return Err(GeometryError::InvalidPolygon(
                "all vertices coincide".into(),
            ));
        }
        let dup_tol = 1e-13 * scale;
        loop {
            let m = vertices.len();
            if m < 3 {
                return Err(GeometryError::InvalidPolygon(
                    "degenerate sweep output".into(),
                ));
            }
            let mut keep = vec![true; m];
            let mut changed = false;
            for i in 0..m {
                let prev = vertices[(i + m - 1) % m];
                let here = vertices[i];
                let next = vertices[(i + 1) % m];
                let degenerate = here.distance(next) <= dup_tol
                    || (here - prev).cross(next - here) <= 0.0;
                if degenerate {
                    keep[i] = false;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
            vertices = vertices
                .into_iter()
                .zip(keep)
                .filter_map(|(v, k)| k.then_some(v))
                .collect();
        }
        let poly = Self { vertices };
        if poly.area() <= 0.0 {
            return Err(GeometryError::InvalidPolygon(
                "non-positive signed area".into(),
            ));
        }
        Ok(poly)
    }
}

/// Largest bounding-box side length of a vertex set.
fn bounding_extent(vertices: &[Point]) -> f64 {
    let mut min = Point::new(f64::INFINITY, f64::INFINITY);
    let mut max = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
    for p in vertices {
        min.x = min.x.min(p.x);
        min.y = min.y.min(p.y);
        max.x = max.x.max(p.x);
        max.y = max.y.max(p.y);
    }
    (max.x - min.x).max(max.y - min.y)
}

/// Removes consecutive duplicates and merges collinear runs.
///
/// Repeats until stable: dropping one vertex can make its neighbors collinear.
fn merge_collinear(mut vertices: Vec<Point>, cross_tol: f64) -> Result<Vec<Point>, GeometryError> {
    loop {
        let m = vertices.len();
        if m < 3 {
            return Ok(vertices);
        }
        let mut keep = vec![true; m];
        let mut changed = false;
        for i in 0..m {
            if !keep[i] {
                continue;
            }
            let prev = vertices[(i + m - 1) % m];
            let here = vertices[i];
            let next = vertices[(i + 1) % m];
            let cross = (here - prev).cross(next - here);
            if cross < -cross_tol {
                return Err(GeometryError::InvalidPolygon(
                    "clockwise orientation or reflex corner".into(),
                ));
            }
            let duplicate = here.distance(next) == 0.0;
            if duplicate || cross.abs() <= cross_tol {
                keep[i] = false;
                changed = true;
            }
        }
        if !changed {
            return Ok(vertices);
        }
        vertices = vertices
            .into_iter()
            .zip(keep)
            .filter_map(|(v, k)| k.then_some(v))
            .collect();
    }
}
