//! Exact series value of the torsional rigidity of a rectangle, used to
//! calibrate the finite-element solver.

use std::f64::consts::PI;

/// Torsional rigidity `∫ u` of an `a × b` rectangle from the classical
/// single-series solution. With `s` the short and `l` the long side:
///
/// `T = s³l/12 − (16 s⁴/π⁵) Σ_{k odd} tanh(kπl/(2s)) / k⁵`
///
/// The series is truncated once the next term bound drops below 1e-14
/// relative. Reference points: the unit square gives 0.03514425…, and a long
/// slab satisfies `T/(s³ l) → 1/12`.
#[must_use]
pub fn closed_form_rectangle_torsion(a: f64, b: f64) -> f64 {
    assert!(
        a.is_finite() && b.is_finite() && a > 0.0 && b > 0.0,
        "rectangle sides must be positive finite numbers"
    );
    let s = a.min(b);
    let l = a.max(b);
    let half_ratio = PI * l / (2.0 * s);
    let mut sum = 0.0;
    let mut k = 1u64;
    loop {
        let kf = k as f64;
        sum += (kf * half_ratio).tanh() / kf.powi(5);
        // tanh ≤ 1, so the next term is at most (k+2)^-5.
        let next_bound = ((k + 2) as f64).powi(-5);
        if next_bound < 1e-14 * sum {
            break;
        }
        k += 2;
    }
    s.powi(3) * l / 12.0 - 16.0 * s.powi(4) / PI.powi(5) * sum
}
