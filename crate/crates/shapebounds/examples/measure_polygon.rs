//! Measure the basic geometric quantities of a convex polygon: area,
//! perimeter, inradius and incenter, minimal width, and diameter, plus the
//! classical relations between them.
//!
//! Run with: cargo run --example measure_polygon

use shapebounds::geometry::{measure, ConvexPolygon, Point};

fn main() {
    // An irregular convex hexagon.
    let polygon = ConvexPolygon::new(vec![
        Point::new(0.0, 0.0),
        Point::new(2.0, -0.3),
        Point::new(3.1, 0.8),
        Point::new(2.7, 2.0),
        Point::new(1.0, 2.4),
        Point::new(-0.4, 1.2),
    ])
    .expect("vertices are in counterclockwise order and strictly convex");

    let m = measure(&polygon).expect("measurable");
    println!("area       A    = {:.6}", m.area);
    println!("perimeter  P    = {:.6}", m.perimeter);
    println!("inradius   R    = {:.6}", m.inradius);
    println!(
        "incenter        = ({:.6}, {:.6})",
        m.incenter.x, m.incenter.y
    );
    println!("min width  w    = {:.6}", m.min_width);
    println!("diameter   d    = {:.6}", m.diameter);

    // Relations that hold for every planar convex body:
    //   w/3 <= R <= w/2          (inradius pinched by the width)
    //   P <= 2π d / sqrt(3)      (perimeter bounded by the diameter)
    //   1 <= P R / A <= 2        (perimeter-inradius asymmetry range)
    let beta = m.perimeter * m.inradius / m.area - 1.0;
    println!();
    println!("w/3 = {:.6} <= R <= w/2 = {:.6}", m.min_width / 3.0, m.min_width / 2.0);
    println!(
        "P = {:.6} <= 2*pi*d/sqrt(3) = {:.6}",
        m.perimeter,
        std::f64::consts::TAU * m.diameter / 3f64.sqrt()
    );
    println!("asymmetry beta = P*R/A - 1 = {beta:.6} (0 < beta <= 1)");
}
