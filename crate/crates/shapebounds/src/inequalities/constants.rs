//! Explicit constants appearing in the quantitative inequalities, and the
//! 2D chain that produces the width-asymmetry constants from three simple
//! geometric facts.

use std::f64::consts::{PI, TAU};

use serde::Serialize;

/// Total turning of a closed convex curve: the constant in the perimeter
/// decay estimate `P(t) ≤ P − 2πt`.
pub const TOTAL_TURNING_2D: f64 = TAU;

/// Constant in the cubic lower bound `F1 − 1/3 ≥ c1(n) β³`.
///
/// In the plane the sharp published value is `1/648 = 1/(2³·3⁴)`; in higher
/// dimensions the constant carries an extra `n³`.
#[must_use]
pub fn c1_constant(dimension: u32) -> f64 {
    assert!(dimension >= 2, "constants are defined for dimension ≥ 2");
    let base = 648.0; // 2³ · 3⁴
    if dimension == 2 {
        1.0 / base
    } else {
        let n = f64::from(dimension);
        1.0 / (base * n * n * n)
    }
}

/// Constant in the quartic eigenvalue gap bound `π²/4 − F2 ≥ c2(n) β⁴`:
/// `c2(n) = π² / (2⁵·3⁴·n³(2n−1))`.
#[must_use]
pub fn c2_constant(dimension: u32) -> f64 {
    assert!(dimension >= 2, "constants are defined for dimension ≥ 2");
    let n = f64::from(dimension);
    PI * PI / (2f64.powi(5) * 3f64.powi(4) * n * n * n * (2.0 * n - 1.0))
}

/// Guaranteed area fraction kept after eroding to depth `|Ω|/P`:
/// `μ(|Ω|/P) ≥ q1 |Ω|` with `q1 = β/(6n)`.
#[must_use]
pub fn q1_area_fraction(dimension: u32, beta: f64) -> f64 {
    beta / (6.0 * f64::from(dimension))
}

/// Guaranteed perimeter contraction after eroding to depth `|Ω|/P`:
/// `P(|Ω|/P) ≤ q2 P` with `q2 = (1 + β/n)⁻¹`.
#[must_use]
pub fn q2_perimeter_fraction(dimension: u32, beta: f64) -> f64 {
    1.0 / (1.0 + beta / f64::from(dimension))
}

/// The explicit constants used by the verification report in the plane.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct InequalityConstants {
    pub dimension: u32,
    /// Cubic thinness constant: `F1 − 1/3 ≥ c1 β³`.
    pub c1: f64,
    /// Quartic thinness constant: `π²/4 − F2 ≥ c2 β⁴`.
    pub c2: f64,
    /// Width-to-thinness comparison: `β ≥ k_width · α`.
    pub k_width: f64,
    /// Torsion gap in the width asymmetry: `F1 − 1/3 ≥ c3_alpha · α`.
    pub c3_alpha: f64,
    /// Eigenvalue gap in the width asymmetry: `π²/4 − F2 ≥ c4_alpha · α`.
    pub c4_alpha: f64,
}

impl InequalityConstants {
    /// `q1(β)`: see [`q1_area_fraction`].
    #[must_use]
    pub fn q1(&self, beta: f64) -> f64 {
        q1_area_fraction(self.dimension, beta)
    }

    /// `q2(β)`: see [`q2_perimeter_fraction`].
    #[must_use]
    pub fn q2(&self, beta: f64) -> f64 {
        q2_perimeter_fraction(self.dimension, beta)
    }
}

/// Chains the planar width-asymmetry constants from three elementary facts:
///
/// 1. every convex body satisfies `R ≥ w/3` (factor 1/3),
/// 2. the perimeter–diameter estimate `P ≤ 2π·diam/√3` (factor `√3/(2π)`),
/// 3. the total turning `c₂ = 2π` entering through the perimeter decay.
///
/// This yields `k_width = (c₂/(2n))·(1/3)·(√3/(2π)) = √3/12` and
/// `c3_alpha = (27c₂/(256n))·(1/3)·(√3/(2π)) = 9√3/512`. The eigenvalue-gap
/// constant is pinned to the aggregate value `π²(π−2)√3/288`.
#[must_use]
pub fn derive_2d_constants() -> InequalityConstants {
    let n = 2.0_f64;
    let sqrt3 = 3.0_f64.sqrt();
    let inradius_from_width = 1.0 / 3.0;
    let diam_from_perimeter = sqrt3 / TAU;
    let k_width = (TOTAL_TURNING_2D / (2.0 * n)) * inradius_from_width * diam_from_perimeter;
    let c3_alpha =
        (27.0 * TOTAL_TURNING_2D / (256.0 * n)) * inradius_from_width * diam_from_perimeter;
    let c4_alpha = PI * PI * (PI - 2.0) * sqrt3 / 288.0;
    InequalityConstants {
        dimension: 2,
        c1: c1_constant(2),
        c2: c2_constant(2),
        k_width,
        c3_alpha,
        c4_alpha,
    }
}
