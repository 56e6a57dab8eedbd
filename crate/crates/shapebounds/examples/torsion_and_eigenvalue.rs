//! Solve the two boundary-value problems on a convex polygon: the torsion
//! problem -Δu = 1 (whose integral is the torsional rigidity T) and the
//! first Dirichlet eigenvalue λ1, both with certified error estimates from
//! two-level Richardson extrapolation.
//!
//! Run with: cargo run --release --example torsion_and_eigenvalue

use shapebounds::geometry::{ConvexPolygon, Point};
use shapebounds::pde::{closed_form_rectangle_torsion, functional_values, DEFAULT_TOLERANCE};

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

fn main() {
    // Unit square: both values are known to high accuracy.
    let values = functional_values(&square(), DEFAULT_TOLERANCE).expect("solvable");
    let series = closed_form_rectangle_torsion(1.0, 1.0);
    println!("unit square:");
    println!(
        "  T  = {:.8} +- {:.1e}   (series: {:.8})",
        values.torsion.value, values.torsion.error_estimate, series
    );
    println!(
        "  λ1 = {:.8} +- {:.1e}   (exact: 2π² = {:.8})",
        values.lambda1.value,
        values.lambda1.error_estimate,
        2.0 * std::f64::consts::PI.powi(2)
    );
    println!(
        "  mesh: fine level {} with {} triangles (max edge {:.4})",
        values.mesh_size.fine_level, values.mesh_size.fine_triangles, values.mesh_size.fine_max_edge
    );

    // Thin rectangles: the eigenvalue has a closed form, the torsion a
    // rapidly converging series.
    println!();
    println!("rectangles 1 x a:");
    for a in [0.5, 0.2, 0.1] {
        let v = functional_values(&rectangle(a), DEFAULT_TOLERANCE).expect("solvable");
        let t_exact = closed_form_rectangle_torsion(1.0, a);
        let l_exact = std::f64::consts::PI.powi(2) * (1.0 + 1.0 / (a * a));
        println!(
            "  a = {a:<4}  T rel err {:.2e}   λ1 rel err {:.2e}",
            (v.torsion.value - t_exact).abs() / t_exact,
            (v.lambda1.value - l_exact).abs() / l_exact
        );
    }
}
