//! Realize parametric shape families as inscribed polygons and compare
//! their measured quantities with the family's closed forms.
//!
//! Run with: cargo run --example shape_families

use std::f64::consts::PI;

use shapebounds::geometry::measure;
use shapebounds::harness::{FamilyKind, FamilySpec, Realization};

fn main() {
    let families = [
        ("sector, opening 0.4", FamilyKind::Sector { theta: 0.4 }),
        (
            "ellipse, semi-axes 1 and 0.1",
            FamilyKind::Ellipse { semi_minor: 0.1 },
        ),
        (
            "stadium, length 2, radius 0.5",
            FamilyKind::Stadium {
                length: 2.0,
                radius: 0.5,
            },
        ),
        ("disk, radius 1", FamilyKind::Disk { radius: 1.0 }),
    ];
    for (label, kind) in families {
        let spec = FamilySpec::new(kind);
        let polygon = spec.realize_polygon().expect("planar family");
        let m = measure(&polygon).expect("measurable");
        println!("{label} ({} vertices):", polygon.len());
        println!(
            "  A = {:.6}  P = {:.6}  R = {:.6}  w = {:.6}  d = {:.6}",
            m.area, m.perimeter, m.inradius, m.min_width, m.diameter
        );
    }

    // Exact values for comparison.
    println!();
    println!("closed forms:");
    println!("  sector 0.4:  A = {:.6}  P = {:.6}  w = {:.6}", 0.2, 2.4, 0.4f64.sin());
    println!("  ellipse 0.1: A = {:.6}  R = {:.6}  d = {:.6}", PI * 0.1, 0.1, 2.0);
    println!(
        "  stadium:     A = {:.6}  P = {:.6}  R = {:.6}",
        2.0 + PI * 0.25,
        4.0 + PI,
        0.5
    );
    println!("  disk:        A = {:.6}  P = {:.6}", PI, 2.0 * PI);

    // Boxes beyond the plane realize to closed forms instead of polygons.
    let box3 = FamilySpec::new(FamilyKind::ThinningBox {
        dimension: 3,
        thickness: 0.1,
    });
    match box3.realize().expect("valid") {
        Realization::ClosedForm(v) => println!(
            "\nthinning box n=3, a=0.1: volume {:.4}, surface {:.4}, torsion {:.4e} (closed forms)",
            v.volume, v.surface, v.torsion
        ),
        Realization::Polygon(_) => unreachable!("three-dimensional boxes have no polygon"),
    }
}
