//! Piecewise-linear finite-element assembly on triangle meshes with
//! homogeneous Dirichlet boundary conditions eliminated.

use super::mesh::TriangleMesh;
use super::sparse::CsrMatrix;

/// Stiffness, consistent mass, and unit load restricted to interior nodes.
pub struct DirichletSystem {
    pub stiffness: CsrMatrix,
    pub mass: CsrMatrix,
    /// Right-hand side for `-Δu = 1`: the integral of each interior basis
    /// function. Also the quadrature weights for `∫ u_h`.
    pub load: Vec<f64>,
    /// Interior unknown index -> mesh node index.
    pub interior_nodes: Vec<usize>,
    /// Mesh node index -> interior unknown index (None on the boundary).
    pub interior_index: Vec<Option<usize>>,
}

/// Assembles the interior-node system for `-Δu = λ u` / `-Δu = 1` on the
/// mesh: stiffness `∫ ∇φ_i·∇φ_j`, consistent mass `∫ φ_i φ_j`, and load
/// `∫ φ_i`.
#[must_use]
pub fn assemble(mesh: &TriangleMesh) -> DirichletSystem {
    let n = mesh.nodes.len();
    let mut interior_index = vec![None; n];
    let mut interior_nodes = Vec::new();
    for i in 0..n {
        if !mesh.boundary[i] {
            interior_index[i] = Some(interior_nodes.len());
            interior_nodes.push(i);
        }
    }
    let dof = interior_nodes.len();

    let mut k_trip: Vec<(usize, usize, f64)> = Vec::with_capacity(9 * mesh.triangles.len());
    let mut m_trip: Vec<(usize, usize, f64)> = Vec::with_capacity(9 * mesh.triangles.len());
    let mut load = vec![0.0; dof];

    for &[a, b, c] in &mesh.triangles {
        let (pa, pb, pc) = (mesh.nodes[a], mesh.nodes[b], mesh.nodes[c]);
        let twice_area = (pb - pa).cross(pc - pa);
        debug_assert!(twice_area > 0.0, "triangle must be positively oriented");
        let area = 0.5 * twice_area;
        // Barycentric gradients: ∇λ_a is perpendicular to the opposite edge,
        // scaled so λ_a is 1 at `a` and 0 on edge (b, c).
        let grads = [
            (pc - pb).perp() * (1.0 / twice_area),
            (pa - pc).perp() * (1.0 / twice_area),
            (pb - pa).perp() * (1.0 / twice_area),
        ];
        let local = [a, b, c];
        for (i, &gi) in grads.iter().enumerate() {
            let Some(row) = interior_index[local[i]] else {
                continue;
            };
            load[row] += area / 3.0;
            for (j, &gj) in grads.iter().enumerate() {
                let Some(col) = interior_index[local[j]] else {
                    continue;
                };
                k_trip.push((row, col, area * gi.dot(gj)));
                let mass = if i == j { area / 6.0 } else { area / 12.0 };
                m_trip.push((row, col, mass));
            }
        }
    }

    DirichletSystem {
        stiffness: CsrMatrix::from_triplets(dof, k_trip),
        mass: CsrMatrix::from_triplets(dof, m_trip),
        load,
        interior_nodes,
        interior_index,
    }
}
