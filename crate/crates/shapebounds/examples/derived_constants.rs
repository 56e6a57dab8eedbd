//! Print the explicit constants appearing in the quantitative inequalities
//! and the dimension-dependent chains they come from.
//!
//! Run with: cargo run --example derived_constants

use shapebounds::inequalities::{
    c1_constant, c2_constant, derive_2d_constants, q1_area_fraction, q2_perimeter_fraction,
    TOTAL_TURNING_2D,
};

fn main() {
    println!("dimension-dependent constants:");
    println!(
        "{:>3} {:>14} {:>14} {:>12} {:>12}",
        "n", "c1(n)", "c2(n)", "q1(n, 1)", "q2(n, 1)"
    );
    for n in 2u32..=5 {
        println!(
            "{n:>3} {:>14.6e} {:>14.6e} {:>12.6} {:>12.6}",
            c1_constant(n),
            c2_constant(n),
            q1_area_fraction(n, 1.0),
            q2_perimeter_fraction(n, 1.0)
        );
    }

    let c = derive_2d_constants();
    println!();
    println!("planar constants (n = 2):");
    println!("  c1 (torsion gap vs beta^3)     = {:.8e} = 1/648", c.c1);
    println!("  c2 (eigenvalue gap vs beta^4)  = {:.8e} = pi^2/62208", c.c2);
    println!(
        "  k_width (beta >= k alpha)      = {:.8} = sqrt(3)/12",
        c.k_width
    );
    println!(
        "  c3 (torsion gap vs alpha)      = {:.8} = 9 sqrt(3)/512",
        c.c3_alpha
    );
    println!(
        "  c4 (eigenvalue gap vs alpha)   = {:.8} = pi^2 (pi-2) sqrt(3)/288",
        c.c4_alpha
    );
    println!();
    println!(
        "total turning of a planar convex boundary: {TOTAL_TURNING_2D:.8} (= 2 pi; \
         this drives the perimeter decay of inner parallel bodies)"
    );
}
