//! Integration tests of the verification pipeline: report structure, scale
//! invariance of the functionals, tangential shapes, and the closed-form
//! thinning boxes.

use shapebounds::geometry::{ConvexPolygon, Point};
use shapebounds::inequalities::{
    analyze, verify, verify_closed_form, ClosedFormValues, DiskReference,
};

fn polygon(points: &[(f64, f64)]) -> ConvexPolygon {
    ConvexPolygon::new(points.iter().map(|&(x, y)| Point::new(x, y)).collect()).unwrap()
}

fn square(scale: f64) -> ConvexPolygon {
    polygon(&[
        (0.0, 0.0),
        (scale, 0.0),
        (scale, scale),
        (0.0, scale),
    ])
}

#[test]
fn report_serializes_with_stable_field_names() {
    let data = analyze("unit-square", square(1.0), 1e-4).unwrap();
    let disk = DiskReference::compute(1e-4).unwrap();
    let report = verify(&data, &disk, 0.0).unwrap();
    let json = serde_json::to_string(&report).unwrap();
    for field in [
        "\"shape\":", "\"entries\":", "\"id\":", "\"lhs\":", "\"rhs\":", "\"margin\":",
        "\"pass\":", "\"tol\":",
    ] {
        assert!(json.contains(field), "missing {field} in {json}");
    }
    for id in [
        "CHAIN-T", "CHAIN-L", "CHAIN-M", "CHAIN-H", "Q1-LO", "Q1-HI", "Q2-LO", "Q2-HI",
        "Q3-LO", "Q3-HI", "Q4", "Q5", "Q6", "Q7", "L1", "L2", "G1", "G2", "G3", "PROF-1",
        "PROF-2", "PROF-3", "PROF-4", "SAND-T", "SAND-L",
    ] {
        assert!(report.entry(id).is_some(), "missing entry {id}");
    }
    assert_eq!(report.entries.len(), 25);
}

#[test]
fn functionals_are_scale_invariant() {
    let small = analyze("s", square(1.0), 1e-6).unwrap();
    let large = analyze("l", square(3.0), 1e-6).unwrap();
    let (f, g) = (&small.functionals, &large.functionals);
    for (a, b) in [
        (f.f1, g.f1),
        (f.f2, g.f2),
        (f.f3, g.f3),
        (f.f4, g.f4),
        (f.alpha, g.alpha),
        (f.beta, g.beta),
    ] {
        assert!(
            (a - b).abs() <= 1e-9 * a.abs(),
            "scale variance: {a} vs {b}"
        );
    }
}

#[test]
fn tangential_polygons_have_unit_beta() {
    // Shapes with an inscribed circle touching every edge: beta = 1 exactly.
    let shapes: Vec<(String, ConvexPolygon)> = vec![
        (
            "equilateral".into(),
            polygon(&[(0.0, 0.0), (1.0, 0.0), (0.5, 3f64.sqrt() / 2.0)]),
        ),
        (
            "right-triangle".into(),
            polygon(&[(0.0, 0.0), (4.0, 0.0), (0.0, 3.0)]),
        ),
        ("square".into(), square(2.0)),
    ];
    for (label, poly) in shapes {
        let data = analyze(&label, poly, 1e-3).unwrap();
        assert!(
            (data.functionals.beta - 1.0).abs() < 1e-9,
            "{label}: beta = {}",
            data.functionals.beta
        );
    }
}

#[test]
fn closed_form_boxes_pass_at_zero_tolerance() {
    for n in [3u32, 4, 5] {
        for a in [0.2, 0.1, 0.05] {
            let values = ClosedFormValues::thinning_box(n, a);
            let report = verify_closed_form(&values, 0.0);
            assert!(
                report.all_pass(),
                "box n={n} a={a}: {:?}",
                report
                    .failures()
                    .iter()
                    .map(|e| (&e.id, e.margin))
                    .collect::<Vec<_>>()
            );
            // The perimeter asymmetry of the box is (n-1)a exactly.
            let beta = values.functionals().beta;
            assert!((beta - f64::from(n - 1) * a).abs() < 1e-12);
        }
    }
}

#[test]
fn tampered_data_is_rejected() {
    let mut data = analyze("square", square(1.0), 1e-4).unwrap();
    data.measurements.area *= 1.01;
    let disk = DiskReference::compute(1e-4).unwrap();
    let err = verify(&data, &disk, 0.0).unwrap_err();
    assert_eq!(err.to_string(), "shape_mismatch");
}

#[test]
fn verify_catches_a_fabricated_torsion_value() {
    let mut data = analyze("square", square(1.0), 1e-4).unwrap();
    // Claim a torsion 5% above the truth: the derived functionals no longer
    // match the claimed value.
    data.values.torsion.value *= 1.05;
    let disk = DiskReference::compute(1e-4).unwrap();
    assert!(verify(&data, &disk, 0.0).is_err());
}
