//! Sweep a thinning family and watch the functional gaps close at their
//! predicted rates, then extract empirical constants: the worst observed
//! ratio between each gap and its asymmetry power.
//!
//! Run with: cargo run --release --example sweep_families

use shapebounds::harness::{sweep, thinning_ratio_specs, FamilySpec};
use shapebounds::inequalities::{empirical_constant, Remainder};
use shapebounds::pde::DEFAULT_TOLERANCE;

fn main() {
    let template = FamilySpec::parse("family:rectangle:1:0.1").expect("valid template");
    let params = [0.4, 0.2, 0.1, 0.05];
    let table = sweep(&template, &params, &thinning_ratio_specs(), DEFAULT_TOLERANCE)
        .expect("sweep succeeds");

    println!("{}", table.to_csv());

    // Empirical constants: the smallest gap/asymmetry^k ratio along the
    // sweep bounds the best constant the data can support.
    let points: Vec<(f64, f64, f64)> = table
        .rows
        .iter()
        .map(|r| (r.suite.alpha, r.suite.beta, r.gaps[0]))
        .collect();
    let c_beta3 = empirical_constant(&points, Remainder::BetaCubed).expect("nonempty");
    let c_alpha = empirical_constant(&points, Remainder::Alpha).expect("nonempty");
    println!("torsion gap F1 - 1/3 along the sweep supports:");
    println!("  >= {c_beta3:.6} * beta^3   (proved constant: 1/648 = {:.6})", 1.0 / 648.0);
    println!(
        "  >= {c_alpha:.6} * alpha    (proved constant: 9*sqrt(3)/512 = {:.6})",
        9.0 * 3f64.sqrt() / 512.0
    );

    let points2: Vec<(f64, f64, f64)> = table
        .rows
        .iter()
        .map(|r| (r.suite.alpha, r.suite.beta, r.gaps[1]))
        .collect();
    let c2_beta4 = empirical_constant(&points2, Remainder::BetaFourth).expect("nonempty");
    println!("eigenvalue gap π²/4 - F2 along the sweep supports:");
    println!(
        "  >= {c2_beta4:.6} * beta^4  (proved constant: π²/62208 = {:.6})",
        std::f64::consts::PI.powi(2) / 62208.0
    );
}
