//! Run the full inequality battery on a single shape: the classical chains
//! for the four scale-invariant functionals, their quantitative
//! strengthenings with explicit constants, the inner-parallel lemmas, and
//! the profile and sandwich checks.
//!
//! Run with: cargo run --release --example verify_inequalities

use shapebounds::harness::random_polygon;
use shapebounds::inequalities::{analyze, verify, DiskReference};
use shapebounds::pde::DEFAULT_TOLERANCE;

fn main() {
    // A reproducible random convex polygon: the hull of 30 seeded uniform
    // points in the unit square.
    let polygon = random_polygon(42, 30).expect("hull is valid");
    println!(
        "random polygon: {} hull vertices, area {:.6}",
        polygon.len(),
        polygon.area()
    );

    let data = analyze("random-42", polygon, DEFAULT_TOLERANCE).expect("analyzable");
    println!(
        "functionals: F1 = {:.5}  F2 = {:.5}  F3 = {:.5}  F4 = {:.5}",
        data.functionals.f1, data.functionals.f2, data.functionals.f3, data.functionals.f4
    );
    println!(
        "asymmetries: alpha = {:.5}  beta = {:.5}",
        data.functionals.alpha, data.functionals.beta
    );
    println!();

    // The disk reference supplies the sharp upper end of the eigenvalue
    // chain; it is computed once and reused across shapes.
    let disk = DiskReference::compute(DEFAULT_TOLERANCE).expect("disk reference");
    let report = verify(&data, &disk, 0.0).expect("verifiable");

    println!(
        "{:<8} {:>14} {:>14} {:>12} {:>10}  {}",
        "id", "lhs", "rhs", "margin", "tol", "pass"
    );
    for e in &report.entries {
        println!(
            "{:<8} {:>14.6} {:>14.6} {:>12.3e} {:>10.1e}  {}",
            e.id,
            e.lhs,
            e.rhs,
            e.margin,
            e.tolerance_used,
            if e.pass { "ok" } else { "FAIL" }
        );
    }
    println!();
    println!(
        "{} entries, all pass: {}",
        report.entries.len(),
        report.all_pass()
    );
    std::process::exit(i32::from(!report.all_pass()));
}
