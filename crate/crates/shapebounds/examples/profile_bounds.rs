//! Sandwich the solver values between closed-form bounds computed from the
//! inner parallel profile alone: a web-function lower bound and a
//! moment upper bound for the torsional rigidity, and a trial-function
//! upper bound for the first eigenvalue.
//!
//! Run with: cargo run --release --example profile_bounds

use std::f64::consts::TAU;

use shapebounds::bounds::bound_values;
use shapebounds::geometry::{inner_profile, ConvexPolygon, Point};
use shapebounds::pde::{functional_values, DEFAULT_TOLERANCE};

fn regular_polygon(k: usize) -> ConvexPolygon {
    let vertices = (0..k)
        .map(|i| {
            let phi = TAU * i as f64 / k as f64;
            Point::new(phi.cos(), phi.sin())
        })
        .collect();
    ConvexPolygon::new(vertices).unwrap()
}

fn main() {
    for (label, polygon) in [
        ("triangle (regular)", regular_polygon(3)),
        ("square (regular)", regular_polygon(4)),
        ("disk (256-gon)", regular_polygon(256)),
    ] {
        let profile = inner_profile(&polygon, 512).expect("profilable");
        let bounds = bound_values(&profile);
        let values = functional_values(&polygon, DEFAULT_TOLERANCE).expect("solvable");
        let t = values.torsion.value;
        let t_err = values.torsion.error_estimate;
        let l = values.lambda1.value;
        let l_err = values.lambda1.error_estimate;
        println!("{label}:");
        println!(
            "  torsion:    {:.6} <= T = {:.6} <= {:.6}",
            bounds.web_torsion, t, bounds.makai_torsion_upper
        );
        println!(
            "  eigenvalue: λ1 = {:.6} <= {:.6}",
            l, bounds.polya_lambda_upper
        );
        println!(
            "  lower bound captures {:.2}% of T",
            100.0 * bounds.web_torsion / t
        );
        // The solver value carries an error estimate; the sandwich is
        // asserted up to ten times that estimate.
        assert!(bounds.web_torsion <= t + 10.0 * t_err);
        assert!(t <= bounds.makai_torsion_upper + 10.0 * t_err);
        assert!(l <= bounds.polya_lambda_upper + 10.0 * l_err);
    }
    println!("all sandwiches hold within ten solver error estimates");
}
