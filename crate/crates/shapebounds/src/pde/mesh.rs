//! Conforming triangle meshes over convex polygons: a fan from the incenter,
//! refined by uniform midpoint subdivision.

use std::collections::HashMap;

use crate::geometry::{inradius_center, ConvexPolygon, GeometryError, Point};

/// A conforming triangle mesh. Triangles are positively oriented index
/// triples into `nodes`; `boundary[i]` marks nodes on the domain boundary.
#[derive(Clone, Debug)]
pub struct TriangleMesh {
    pub nodes: Vec<Point>,
    pub triangles: Vec<[usize; 3]>,
    pub boundary: Vec<bool>,
}

impl TriangleMesh {
    /// Signed area of triangle `t` (positive for correct orientation).
    #[must_use]
    pub fn triangle_area(&self, t: usize) -> f64 {
        let [a, b, c] = self.triangles[t];
        let (pa, pb, pc) = (self.nodes[a], self.nodes[b], self.nodes[c]);
        0.5 * (pb - pa).cross(pc - pa)
    }

    /// Sum of all triangle areas.
    #[must_use]
    pub fn total_area(&self) -> f64 {
        (0..self.triangles.len()).map(|t| self.triangle_area(t)).sum()
    }

    /// Length of the longest edge in the mesh.
    #[must_use]
    pub fn max_edge_length(&self) -> f64 {
        let mut h = 0.0f64;
        for &[a, b, c] in &self.triangles {
            h = h.max(self.nodes[a].distance(self.nodes[b]));
            h = h.max(self.nodes[b].distance(self.nodes[c]));
            h = h.max(self.nodes[c].distance(self.nodes[a]));
        }
        h
    }

    /// Number of interior (non-boundary) nodes.
    #[must_use]
    pub fn interior_count(&self) -> usize {
        self.boundary.iter().filter(|&&b| !b).count()
    }
}

/// Recomputes the per-node boundary flags from scratch: an edge belonging to
/// exactly one triangle is a boundary edge, and its endpoints are boundary
/// nodes.
fn boundary_flags(nodes: usize, triangles: &[[usize; 3]]) -> Vec<bool> {
    let mut edge_count: HashMap<(usize, usize), u32> = HashMap::new();
    for &[a, b, c] in triangles {
        for (u, v) in [(a, b), (b, c), (c, a)] {
            let key = (u.min(v), u.max(v));
            *edge_count.entry(key).or_insert(0) += 1;
        }
    }
    let mut flags = vec![false; nodes];
    for (&(u, v), &count) in &edge_count {
        debug_assert!(count <= 2, "non-conforming mesh: edge shared by {count} triangles");
        if count == 1 {
            flags[u] = true;
            flags[v] = true;
        }
    }
    flags
}

/// Fan triangulation from the incenter: one triangle per polygon edge.
pub fn fan_triangulation(polygon: &ConvexPolygon) -> Result<TriangleMesh, GeometryError> {
    let incircle = inradius_center(polygon)?;
    let m = polygon.len();
    let mut nodes = Vec::with_capacity(m + 1);
    nodes.push(incircle.center);
    nodes.extend(polygon.vertices().iter().copied());
    let mut triangles = Vec::with_capacity(m);
    for i in 0..m {
        triangles.push([0, i + 1, (i + 1) % m + 1]);
    }
    let boundary = boundary_flags(nodes.len(), &triangles);
    Ok(TriangleMesh {
        nodes,
        triangles,
        boundary,
    })
}

/// Uniform midpoint refinement: every triangle splits into four similar
/// children. Returns the refined mesh together with the parent node pair of
/// each newly created midpoint (new node `old_node_count + k` is the midpoint
/// of `parents[k]`), which drives interpolation between mesh levels.
///
/// Midpoints of boundary edges are exact segment midpoints, so they remain on
/// the (straight-edged) polygon boundary.
#[must_use]
pub fn refine(mesh: &TriangleMesh) -> (TriangleMesh, Vec<(usize, usize)>) {
    let old_n = mesh.nodes.len();
    let mut nodes = mesh.nodes.clone();
    let mut parents: Vec<(usize, usize)> = Vec::new();
    let mut midpoint_of: HashMap<(usize, usize), usize> = HashMap::new();
    let mut triangles = Vec::with_capacity(4 * mesh.triangles.len());

    let mut midpoint = |u: usize, v: usize,
                        nodes: &mut Vec<Point>,
                        parents: &mut Vec<(usize, usize)>|
     -> usize {
        let key = (u.min(v), u.max(v));
        if let Some(&idx) = midpoint_of.get(&key) {
            return idx;
        }
        let p = Point::new(
            0.5 * (nodes[u].x + nodes[v].x),
            0.5 * (nodes[u].y + nodes[v].y),
        );
        let idx = nodes.len();
        nodes.push(p);
        parents.push(key);
        midpoint_of.insert(key, idx);
        idx
    };

    for &[a, b, c] in &mesh.triangles {
        let mab = midpoint(a, b, &mut nodes, &mut parents);
        let mbc = midpoint(b, c, &mut nodes, &mut parents);
        let mca = midpoint(c, a, &mut nodes, &mut parents);
        triangles.push([a, mab, mca]);
        triangles.push([b, mbc, mab]);
        triangles.push([c, mca, mbc]);
        triangles.push([mab, mbc, mca]);
    }

    debug_assert_eq!(nodes.len(), old_n + parents.len());
    let boundary = boundary_flags(nodes.len(), &triangles);
    (
        TriangleMesh {
            nodes,
            triangles,
            boundary,
        },
        parents,
    )
}

/// Triangulates a convex polygon with maximum edge length at most `target_h`:
/// a fan from the incenter refined by uniform midpoint subdivision until the
/// target is met.
pub fn triangulate(polygon: &ConvexPolygon, target_h: f64) -> Result<TriangleMesh, GeometryError> {
    assert!(
        target_h.is_finite() && target_h > 0.0,
        "target edge length must be a positive finite number"
    );
    let mut mesh = fan_triangulation(polygon)?;
    let mut levels = 0u32;
    while mesh.max_edge_length() > target_h {
        assert!(
            levels < 16,
            "triangulation target {target_h} needs more than 16 refinement levels"
        );
        mesh = refine(&mesh).0;
        levels += 1;
    }
    Ok(mesh)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::polygon::tests::regular_ngon;

    fn unit_square() -> ConvexPolygon {
        ConvexPolygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(0.0, 1.0),
        ])
        .unwrap()
    }

    fn assert_mesh_valid(mesh: &TriangleMesh, polygon_area: f64) {
        let total: f64 = mesh.total_area();
        assert!(
            (total - polygon_area).abs() <= 1e-10 * polygon_area,
            "mesh area {total} vs polygon {polygon_area}"
        );
        for t in 0..mesh.triangles.len() {
            let a = mesh.triangle_area(t);
            assert!(
                a > 1e-14 * polygon_area,
                "triangle {t} has non-positive or negligible area {a}"
            );
        }
    }

    #[test]
    fn square_fan_has_four_triangles() {
        let mesh = fan_triangulation(&unit_square()).unwrap();
        assert_eq!(mesh.triangles.len(), 4);
        assert_eq!(mesh.nodes.len(), 5);
        assert!(!mesh.boundary[0], "incenter is interior");
        assert!(mesh.boundary[1..].iter().all(|&b| b));
        assert_mesh_valid(&mesh, 1.0);
    }

    #[test]
    fn refinement_quadruples_and_conserves_area() {
        let mesh = fan_triangulation(&unit_square()).unwrap();
        let (fine, parents) = refine(&mesh);
        assert_eq!(fine.triangles.len(), 16);
        // 4 original triangles share interior edges: 4 boundary edges split
        // plus 4 spokes = 8 midpoints.
        assert_eq!(parents.len(), 8);
        assert_eq!(fine.nodes.len(), mesh.nodes.len() + 8);
        assert_mesh_valid(&fine, 1.0);
        // Parent bookkeeping: each new node is the midpoint of its parents.
        for (k, &(u, v)) in parents.iter().enumerate() {
            let p = fine.nodes[mesh.nodes.len() + k];
            let mid = Point::new(
                0.5 * (fine.nodes[u].x + fine.nodes[v].x),
                0.5 * (fine.nodes[u].y + fine.nodes[v].y),
            );
            assert_eq!(p.x, mid.x);
            assert_eq!(p.y, mid.y);
        }
    }

    #[test]
    fn boundary_midpoints_stay_on_boundary() {
        let square = unit_square();
        let mesh = triangulate(&square, 0.3).unwrap();
        for (i, node) in mesh.nodes.iter().enumerate() {
            if mesh.boundary[i] {
                let on_an_edge = (0..square.len()).any(|e| {
                    let (a, b) = square.edge(e);
                    let d = b - a;
                    let t = (*node - a).dot(d) / d.dot(d);
                    let proj = a + d * t.clamp(0.0, 1.0);
                    proj.distance(*node) < 1e-12
                });
                assert!(on_an_edge, "boundary node {node:?} off the polygon boundary");
            }
        }
    }

    #[test]
    fn triangulate_meets_edge_target() {
        let square = unit_square();
        for target in [0.8, 0.4, 0.1] {
            let mesh = triangulate(&square, target).unwrap();
            assert!(mesh.max_edge_length() <= target);
            assert_mesh_valid(&mesh, 1.0);
        }
    }

    #[test]
    fn ngon_mesh_covers_polygon_area() {
        let gon = regular_ngon(7, 1.0);
        let mesh = triangulate(&gon, 0.25).unwrap();
        assert_mesh_valid(&mesh, gon.area());
        // Every triangle positively oriented.
        for t in 0..mesh.triangles.len() {
            assert!(mesh.triangle_area(t) > 0.0);
        }
    }

    #[test]
    fn interior_nodes_appear_after_refinement() {
        let mesh = fan_triangulation(&unit_square()).unwrap();
        assert_eq!(mesh.interior_count(), 1);
        let (fine, _) = refine(&mesh);
        // The 4 spoke midpoints are interior; the 4 edge midpoints are not.
        assert_eq!(fine.interior_count(), 5);
    }
}
