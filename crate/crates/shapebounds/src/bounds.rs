//! Bounds on the torsional rigidity and the first Dirichlet eigenvalue
//! computed from the inner parallel profile alone.
//!
//! Three classical constructions are implemented:
//! * a web-function lower bound for the torsion, `T ≥ ∫ μ(t)²/P(t) dt`;
//! * Makai's moment upper bound, `T ≤ ∫ t² P(t) dt`;
//! * Pólya's trial-function upper bound for the eigenvalue,
//!   `λ ≤ π²/(2|Ω|³) · ∫ sin²(πμ(t)/(2|Ω|)) P(t)³ dt`.
//!
//! All three integrals run over the distance-to-boundary variable
//! `t ∈ [0, R]`, where `μ` and `P` are the area and perimeter of the eroded
//! body at depth `t`. Between profile samples `P` is linear and `μ` is the
//! matching quadratic, so the first two integrals have closed forms and the
//! third is evaluated with a fixed Gauss rule that is exact to machine
//! precision at the profile's resolution.

use std::f64::consts::PI;

use serde::Serialize;

use crate::geometry::{profile_integral, InnerParallelProfile, ProfileIntegrand};

/// The three profile bounds of one body, in one bundle.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct BoundValues {
    /// Web-function lower bound on the torsional rigidity.
    pub web_torsion: f64,
    /// Moment upper bound on the torsional rigidity.
    pub makai_torsion_upper: f64,
    /// Trial-function upper bound on the first Dirichlet eigenvalue.
    pub polya_lambda_upper: f64,
}

/// Lower bound on the torsional rigidity from the web trial function that is
/// constant on the level sets of the distance to the boundary:
/// `T ≥ ∫₀ᴿ μ(t)²/P(t) dt`. Equality asymptotics: exact value 1/32 for the
/// unit square is attained; the disk gives π/8, the true disk torsion.
#[must_use]
pub fn web_torsion_lower(profile: &InnerParallelProfile) -> f64 {
    profile_integral(profile, ProfileIntegrand::MuSqOverPer)
}

/// Makai's moment upper bound `T ≤ ∫₀ᴿ t² P(t) dt`. For a rectangle this
/// evaluates in closed form to `(a³/12)(1 − a/2)` (unit width, height `a`).
#[must_use]
pub fn makai_torsion_upper(profile: &InnerParallelProfile) -> f64 {
    profile_integral(profile, ProfileIntegrand::TSqPer)
}

/// 16-point Gauss–Legendre rule on [-1, 1]: positive nodes and weights of
/// the symmetric pairs.
const GL_NODES: [f64; 8] = [
    0.095_012_509_837_637_44,
    0.281_603_550_779_258_9,
    0.458_016_777_657_227_4,
    0.617_876_244_402_643_8,
    0.755_404_408_355_003_0,
    0.865_631_202_387_831_8,
    0.944_575_023_073_232_6,
    0.989_400_934_991_649_9,
];
const GL_WEIGHTS: [f64; 8] = [
    0.189_450_610_455_068_5,
    0.182_603_415_044_923_6,
    0.169_156_519_395_002_5,
    0.149_595_988_816_576_7,
    0.124_628_971_255_533_9,
    0.095_158_511_682_492_8,
    0.062_253_523_938_647_9,
    0.027_152_459_411_754_1,
];

/// Pólya's trial-function upper bound on the first Dirichlet eigenvalue:
///
/// `λ ≤ π²/(2|Ω|³) · ∫₀ᴿ sin²(π μ(t) / (2|Ω|)) P(t)³ dt`
///
/// Reference values: `π²/2 + 2` for the disk and `2π² + 8` for the square
/// (about 1.405 times the true eigenvalue in both cases).
#[must_use]
pub fn polya_lambda_upper(profile: &InnerParallelProfile) -> f64 {
    let area = profile.areas[0];
    debug_assert!(profile.ts[0] == 0.0 && area > 0.0);
    let mut total = 0.0;
    for i in 0..profile.ts.len() - 1 {
        let t1 = profile.ts[i];
        let h = profile.ts[i + 1] - t1;
        if h <= 0.0 {
            continue;
        }
        let mu1 = profile.areas[i];
        let p1 = profile.perimeters[i];
        let p2 = profile.perimeters[i + 1];
        let q = (p1 - p2) / h;
        let half = 0.5 * h;
        let mut pair_sum = 0.0;
        for k in 0..8 {
            for sign in [-1.0f64, 1.0] {
                let dt = half + sign * half * GL_NODES[k];
                let p = p1 - q * dt;
                let mu = mu1 - p1 * dt + 0.5 * q * dt * dt;
                let s = (PI * mu / (2.0 * area)).sin();
                pair_sum += GL_WEIGHTS[k] * s * s * p * p * p;
            }
        }
        total += half * pair_sum;
    }
    PI * PI / (2.0 * area.powi(3)) * total
}

/// All three profile bounds at once.
#[must_use]
pub fn bound_values(profile: &InnerParallelProfile) -> BoundValues {
    BoundValues {
        web_torsion: web_torsion_lower(profile),
        makai_torsion_upper: makai_torsion_upper(profile),
        polya_lambda_upper: polya_lambda_upper(profile),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::polygon::tests::regular_ngon;
    use crate::geometry::{inner_profile, ConvexPolygon, Point};

    fn unit_square_profile(samples: usize) -> InnerParallelProfile {
        let square = ConvexPolygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(0.0, 1.0),
        ])
        .unwrap();
        inner_profile(&square, samples).unwrap()
    }

    #[test]
    fn square_web_bound_is_one_thirty_second() {
        let profile = unit_square_profile(512);
        let web = web_torsion_lower(&profile);
        assert!((web - 1.0 / 32.0).abs() < 1e-12, "web {web}");
    }

    #[test]
    fn square_moment_bound_is_one_twenty_fourth() {
        let profile = unit_square_profile(512);
        let makai = makai_torsion_upper(&profile);
        assert!((makai - 1.0 / 24.0).abs() < 1e-12, "moment {makai}");
    }

    #[test]
    fn square_eigenvalue_bound_matches_closed_form() {
        let profile = unit_square_profile(512);
        let polya = polya_lambda_upper(&profile);
        let exact = 2.0 * PI * PI + 8.0;
        assert!((polya - exact).abs() < 1e-9, "polya {polya} vs {exact}");
    }

    #[test]
    fn near_disk_bounds_match_disk_values() {
        let gon = regular_ngon(256, 1.0);
        let profile = inner_profile(&gon, 512).unwrap();
        let values = bound_values(&profile);
        let rel = |x: f64, y: f64| (x - y).abs() / y;
        assert!(rel(values.web_torsion, PI / 8.0) < 1e-3);
        assert!(rel(values.makai_torsion_upper, PI / 6.0) < 1e-3);
        assert!(rel(values.polya_lambda_upper, PI * PI / 2.0 + 2.0) < 2e-3);
    }

    #[test]
    fn rectangle_moment_bound_closed_form() {
        for a in [0.5, 0.2, 0.05] {
            let rect = ConvexPolygon::new(vec![
                Point::new(0.0, 0.0),
                Point::new(1.0, 0.0),
                Point::new(1.0, a),
                Point::new(0.0, a),
            ])
            .unwrap();
            let profile = inner_profile(&rect, 512).unwrap();
            let makai = makai_torsion_upper(&profile);
            let exact = a * a * a / 12.0 * (1.0 - a / 2.0);
            assert!(
                (makai - exact).abs() < 1e-12,
                "a={a}: moment {makai} vs {exact}"
            );
        }
    }

    #[test]
    fn lower_bound_stays_below_upper_bound() {
        for k in [3, 4, 5, 7, 12] {
            let gon = regular_ngon(k, 1.0);
            let profile = inner_profile(&gon, 512).unwrap();
            let v = bound_values(&profile);
            assert!(
                v.web_torsion <= v.makai_torsion_upper,
                "k={k}: web {} above moment {}",
                v.web_torsion,
                v.makai_torsion_upper
            );
        }
    }

    #[test]
    fn bounds_are_positive_and_finite() {
        let profile = unit_square_profile(64);
        let v = bound_values(&profile);
        for x in [v.web_torsion, v.makai_torsion_upper, v.polya_lambda_upper] {
            assert!(x.is_finite() && x > 0.0);
        }
    }
}
