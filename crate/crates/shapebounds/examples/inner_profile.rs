//! Compute the inner parallel profile of a convex polygon: the area and
//! perimeter of the inner parallel body K_t (all points at distance at
//! least t from the boundary) as t runs from 0 to the inradius.
//!
//! Run with: cargo run --example inner_profile

use shapebounds::geometry::{erode, inner_profile, ConvexPolygon, Point};

fn main() {
    let pentagon = ConvexPolygon::new(vec![
        Point::new(0.0, 0.0),
        Point::new(2.0, 0.0),
        Point::new(2.6, 1.4),
        Point::new(1.2, 2.3),
        Point::new(-0.5, 1.1),
    ])
    .expect("valid convex pentagon");

    let profile = inner_profile(&pentagon, 12).expect("profilable");
    println!("inradius R = {:.6}", profile.inradius);
    println!(
        "breakpoints (depths where an edge vanishes): {:?}",
        profile
            .breakpoints
            .iter()
            .map(|t| format!("{t:.4}"))
            .collect::<Vec<_>>()
    );
    println!();
    println!("{:>10} {:>12} {:>12}", "t", "area(t)", "perimeter(t)");
    for i in 0..profile.ts.len() {
        println!(
            "{:10.5} {:12.6} {:12.6}",
            profile.ts[i], profile.areas[i], profile.perimeters[i]
        );
    }

    // The profile obeys sharp two-sided bounds:
    //   area(t)      >= A - P t          (with equality only for slabs)
    //   perimeter(t) <= P - 2 pi t       (total turning of a convex loop)
    let (a, p) = (profile.areas[0], profile.perimeters[0]);
    println!();
    for (i, &t) in profile.ts.iter().enumerate() {
        assert!(profile.areas[i] >= a - p * t - 1e-9);
        assert!(profile.perimeters[i] <= p - std::f64::consts::TAU * t + 1e-9);
    }
    println!("checked: area(t) >= A - P t and perimeter(t) <= P - 2*pi*t at every sample");

    // A single eroded polygon is also available directly.
    let half_depth = profile.inradius / 2.0;
    let eroded = erode(&pentagon, half_depth).expect("still nonempty at half the inradius");
    println!(
        "eroded at t = R/2: {} of {} edges survive, area {:.6}",
        eroded.len(),
        pentagon.len(),
        eroded.area()
    );
}
