//! Parametric shape families: thinning boxes, narrow sectors and ellipses,
//! disks, regular polygons, stadiums, and seeded random polygons. Curved
//! boundaries are discretized as inscribed polygons with vertices on the
//! exact boundary.

use std::f64::consts::{PI, TAU};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::HarnessError;
use crate::geometry::{ConvexPolygon, Point};
use crate::inequalities::ClosedFormValues;

/// Default vertex count for curved boundaries.
pub const DEFAULT_BOUNDARY_RESOLUTION: usize = 512;

/// The family and its parameters.
#[derive(Clone, Debug, PartialEq)]
pub enum FamilyKind {
    /// `[0,1]^{n-1} × [0,a]`: a polygon for n = 2, closed forms for n ≥ 3.
    ThinningBox { dimension: u32, thickness: f64 },
    /// Circular sector of radius 1 and opening `theta ∈ (0, π)`.
    Sector { theta: f64 },
    /// Ellipse with semi-axes 1 and `b ∈ (0, 1]`.
    Ellipse { semi_minor: f64 },
    /// Axis-aligned rectangle `[0,w] × [0,h]`.
    Rectangle { width: f64, height: f64 },
    /// Disk of the given radius (inscribed polygon).
    Disk { radius: f64 },
    /// Regular polygon with `sides` vertices and the given circumradius.
    RegularPolygon { sides: u32, radius: f64 },
    /// An explicit triangle (reoriented counterclockwise if needed).
    Triangle { vertices: [Point; 3] },
    /// Two semicircular caps of the given radius joined by straight sides
    /// of the given length.
    Stadium { length: f64, radius: f64 },
    /// Convex hull of `points` uniform samples in the unit square.
    RandomPolygon { seed: u64, points: u32 },
}

/// A family member: the kind plus the resolution used for curved arcs.
#[derive(Clone, Debug, PartialEq)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub boundary_resolution: usize,
}

/// What a family member realizes to.
#[derive(Clone, Debug)]
pub enum Realization {
    Polygon(ConvexPolygon),
    ClosedForm(ClosedFormValues),
}

impl FamilySpec {
    /// A family member at the default boundary resolution.
    #[must_use]
    pub fn new(kind: FamilyKind) -> Self {
        FamilySpec {
            kind,
            boundary_resolution: DEFAULT_BOUNDARY_RESOLUTION,
        }
    }

    /// Parses `kind:param[:param...]` (an optional `family:` prefix is
    /// accepted): `thinning_box:n:a`, `sector:theta`, `ellipse:b`,
    /// `rectangle:w:h`, `disk:r`, `regular_polygon:k:r`,
    /// `triangle:x1,y1:x2,y2:x3,y3`, `stadium:l:r`,
    /// `random_polygon:seed:points`.
    pub fn parse(input: &str) -> Result<Self, HarnessError> {
        let body = input.strip_prefix("family:").unwrap_or(input);
        let mut parts = body.split(':');
        let kind_name = parts.next().unwrap_or("");
        let rest: Vec<&str> = parts.collect();
        let bad = |msg: &str| HarnessError::InvalidFamily(format!("{kind_name}: {msg}"));
        let float = |s: &str| -> Result<f64, HarnessError> {
            s.parse::<f64>()
                .map_err(|_| bad(&format!("expected a number, got {s:?}")))
        };
        let expect_arity = |n: usize| -> Result<(), HarnessError> {
            if rest.len() == n {
                Ok(())
            } else {
                Err(bad(&format!("expected {n} parameters, got {}", rest.len())))
            }
        };
        let kind = match kind_name {
            "thinning_box" => {
                expect_arity(2)?;
                let dimension = rest[0]
                    .parse::<u32>()
                    .map_err(|_| bad("dimension must be an integer"))?;
                FamilyKind::ThinningBox {
                    dimension,
                    thickness: float(rest[1])?,
                }
            }
            "sector" => {
                expect_arity(1)?;
                FamilyKind::Sector {
                    theta: float(rest[0])?,
                }
            }
            "ellipse" => {
                expect_arity(1)?;
                FamilyKind::Ellipse {
                    semi_minor: float(rest[0])?,
                }
            }
            "rectangle" => {
                expect_arity(2)?;
                FamilyKind::Rectangle {
                    width: float(rest[0])?,
                    height: float(rest[1])?,
                }
            }
            "disk" => {
                expect_arity(1)?;
                FamilyKind::Disk {
                    radius: float(rest[0])?,
                }
            }
            "regular_polygon" => {
                expect_arity(2)?;
                let sides = rest[0]
                    .parse::<u32>()
                    .map_err(|_| bad("side count must be an integer"))?;
                FamilyKind::RegularPolygon {
                    sides,
                    radius: float(rest[1])?,
                }
            }
            "triangle" => {
                expect_arity(3)?;
                let mut vs = [Point::new(0.0, 0.0); 3];
                for (i, pair) in rest.iter().enumerate() {
                    let mut coords = pair.split(',');
                    let x = float(coords.next().unwrap_or(""))?;
                    let y = float(coords.next().unwrap_or(""))?;
                    if coords.next().is_some() {
                        return Err(bad("each vertex is x,y"));
                    }
                    vs[i] = Point::new(x, y);
                }
                FamilyKind::Triangle { vertices: vs }
            }
            "stadium" => {
                expect_arity(2)?;
                FamilyKind::Stadium {
                    length: float(rest[0])?,
                    radius: float(rest[1])?,
                }
            }
            "random_polygon" => {
                expect_arity(2)?;
                let seed = rest[0]
                    .parse::<u64>()
                    .map_err(|_| bad("seed must be a nonnegative integer"))?;
                let points = rest[1]
                    .parse::<u32>()
                    .map_err(|_| bad("point count must be an integer"))?;
                FamilyKind::RandomPolygon { seed, points }
            }
            other => {
                return Err(HarnessError::InvalidFamily(format!(
                    "unknown family kind {other:?}"
                )))
            }
        };
        Ok(FamilySpec::new(kind))
    }

    /// A short deterministic label for reports and file names.
    #[must_use]
    pub fn label(&self) -> String {
        match &self.kind {
            FamilyKind::ThinningBox {
                dimension,
                thickness,
            } => format!("thinning-box-{dimension}d-a{thickness}"),
            FamilyKind::Sector { theta } => format!("sector-{theta}"),
            FamilyKind::Ellipse { semi_minor } => format!("ellipse-{semi_minor}"),
            FamilyKind::Rectangle { width, height } => format!("rectangle-{width}x{height}"),
            FamilyKind::Disk { radius } => format!("disk-r{radius}"),
            FamilyKind::RegularPolygon { sides, radius } => {
                format!("regular-{sides}-r{radius}")
            }
            FamilyKind::Triangle { .. } => "triangle".to_string(),
            FamilyKind::Stadium { length, radius } => format!("stadium-{length}x{radius}"),
            FamilyKind::RandomPolygon { seed, points } => format!("random-{seed}-{points}"),
        }
    }

    /// Replaces the family's sweep parameter (`a`, `theta`, `b`, or the
    /// rectangle height) with a new value.
    pub fn with_parameter(&self, value: f64) -> Result<FamilySpec, HarnessError> {
        let kind = match self.kind {
            FamilyKind::ThinningBox { dimension, .. } => FamilyKind::ThinningBox {
                dimension,
                thickness: value,
            },
            FamilyKind::Sector { .. } => FamilyKind::Sector { theta: value },
            FamilyKind::Ellipse { .. } => FamilyKind::Ellipse { semi_minor: value },
            FamilyKind::Rectangle { width, .. } => FamilyKind::Rectangle {
                width,
                height: value,
            },
            _ => {
                return Err(HarnessError::InvalidFamily(format!(
                    "{} has no sweep parameter",
                    self.label()
                )))
            }
        };
        Ok(FamilySpec {
            kind,
            boundary_resolution: self.boundary_resolution,
        })
    }

    fn validate(&self) -> Result<(), HarnessError> {
        let bad = |msg: String| Err(HarnessError::InvalidFamily(msg));
        let positive = |name: &str, v: f64| -> Result<(), HarnessError> {
            if v.is_finite() && v > 0.0 {
                Ok(())
            } else {
                Err(HarnessError::InvalidFamily(format!(
                    "{name} must be a positive finite number, got {v}"
                )))
            }
        };
        if self.boundary_resolution < 8 {
            return bad("boundary resolution must be at least 8".to_string());
        }
        match &self.kind {
            FamilyKind::ThinningBox {
                dimension,
                thickness,
            } => {
                positive("thickness", *thickness)?;
                if *dimension < 2 {
                    return bad("thinning box dimension must be at least 2".to_string());
                }
                if *thickness > 1.0 {
                    return bad("thinning box thickness must lie in (0, 1]".to_string());
                }
            }
            FamilyKind::Sector { theta } => {
                positive("theta", *theta)?;
                if *theta >= PI {
                    return bad(format!("sector opening must lie in (0, π), got {theta}"));
                }
            }
            FamilyKind::Ellipse { semi_minor } => {
                positive("semi-minor axis", *semi_minor)?;
                if *semi_minor > 1.0 {
                    return bad("ellipse semi-minor axis must lie in (0, 1]".to_string());
                }
            }
            FamilyKind::Rectangle { width, height } => {
                positive("width", *width)?;
                positive("height", *height)?;
            }
            FamilyKind::Disk { radius } => positive("radius", *radius)?,
            FamilyKind::RegularPolygon { sides, radius } => {
                positive("radius", *radius)?;
                if *sides < 3 {
                    return bad("regular polygon needs at least 3 sides".to_string());
                }
            }
            FamilyKind::Triangle { vertices } => {
                for v in vertices {
                    if !(v.x.is_finite() && v.y.is_finite()) {
                        return bad("triangle vertices must be finite".to_string());
                    }
                }
            }
            FamilyKind::Stadium { length, radius } => {
                positive("length", *length)?;
                positive("radius", *radius)?;
            }
            FamilyKind::RandomPolygon { points, .. } => {
                if *points < 4 {
                    return bad("random polygon needs at least 4 sample points".to_string());
                }
            }
        }
        Ok(())
    }

    /// Builds the shape: a polygon for planar families, closed forms for
    /// thinning boxes in dimension three and higher.
    pub fn realize(&self) -> Result<Realization, HarnessError> {
        self.validate()?;
        let res = self.boundary_resolution;
        let polygon = match &self.kind {
            FamilyKind::ThinningBox {
                dimension,
                thickness,
            } => {
                if *dimension >= 3 {
                    return Ok(Realization::ClosedForm(ClosedFormValues::thinning_box(
                        *dimension, *thickness,
                    )));
                }
                rectangle_polygon(1.0, *thickness)?
            }
            FamilyKind::Sector { theta } => {
                let mut vertices = Vec::with_capacity(res + 2);
                vertices.push(Point::new(0.0, 0.0));
                for j in 0..=res {
                    let phi = *theta * j as f64 / res as f64;
                    vertices.push(Point::new(phi.cos(), phi.sin()));
                }
                ConvexPolygon::new(vertices).map_err(geometry_to_family)?
            }
            FamilyKind::Ellipse { semi_minor } => {
                let vertices = (0..res)
                    .map(|k| {
                        let phi = TAU * k as f64 / res as f64;
                        Point::new(phi.cos(), semi_minor * phi.sin())
                    })
                    .collect();
                ConvexPolygon::new(vertices).map_err(geometry_to_family)?
            }
            FamilyKind::Rectangle { width, height } => rectangle_polygon(*width, *height)?,
            FamilyKind::Disk { radius } => regular_polygon_inscribed(res, *radius)?,
            FamilyKind::RegularPolygon { sides, radius } => {
                regular_polygon_inscribed(*sides as usize, *radius)?
            }
            FamilyKind::Triangle { vertices } => {
                let [a, b, c] = *vertices;
                let signed = (b - a).cross(c - a);
                let ordered = if signed >= 0.0 { vec![a, b, c] } else { vec![a, c, b] };
                ConvexPolygon::new(ordered).map_err(geometry_to_family)?
            }
            FamilyKind::Stadium { length, radius } => {
                let h = (res / 2).max(4);
                let (l, r) = (*length, *radius);
                let mut vertices = Vec::with_capacity(2 * h + 2);
                // Right cap around (l, 0), sweeping -π/2 → π/2.
                for j in 0..=h {
                    let phi = -PI / 2.0 + PI * j as f64 / h as f64;
                    vertices.push(Point::new(l + r * phi.cos(), r * phi.sin()));
                }
                // Left cap around (0, 0), sweeping π/2 → 3π/2.
                for j in 0..=h {
                    let phi = PI / 2.0 + PI * j as f64 / h as f64;
                    vertices.push(Point::new(r * phi.cos(), r * phi.sin()));
                }
                ConvexPolygon::new(vertices).map_err(geometry_to_family)?
            }
            FamilyKind::RandomPolygon { seed, points } => random_polygon(*seed, *points as usize)?,
        };
        Ok(Realization::Polygon(polygon))
    }

    /// Realizes the member as a polygon, rejecting families that only have
    /// closed forms.
    pub fn realize_polygon(&self) -> Result<ConvexPolygon, HarnessError> {
        match self.realize()? {
            Realization::Polygon(p) => Ok(p),
            Realization::ClosedForm(_) => Err(HarnessError::ClosedFormOnly),
        }
    }
}

fn geometry_to_family(err: crate::geometry::GeometryError) -> HarnessError {
    HarnessError::InvalidFamily(err.to_string())
}

fn rectangle_polygon(w: f64, h: f64) -> Result<ConvexPolygon, HarnessError> {
    ConvexPolygon::new(vec![
        Point::new(0.0, 0.0),
        Point::new(w, 0.0),
        Point::new(w, h),
        Point::new(0.0, h),
    ])
    .map_err(geometry_to_family)
}

fn regular_polygon_inscribed(sides: usize, radius: f64) -> Result<ConvexPolygon, HarnessError> {
    let vertices = (0..sides)
        .map(|i| {
            let phi = TAU * i as f64 / sides as f64;
            Point::new(radius * phi.cos(), radius * phi.sin())
        })
        .collect();
    ConvexPolygon::new(vertices).map_err(geometry_to_family)
}

/// Convex hull of `n_points` uniform samples in the unit square, seeded and
/// fully deterministic. Degenerate draws retry with the next seed, up to
/// ten offsets.
pub fn random_polygon(seed: u64, n_points: usize) -> Result<ConvexPolygon, HarnessError> {
    assert!(n_points >= 4, "random polygon needs at least 4 sample points");
    for offset in 0..=10u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(offset));
        let mut pts: Vec<Point> = (0..n_points)
            .map(|_| Point::new(rng.gen::<f64>(), rng.gen::<f64>()))
            .collect();
        if let Some(hull) = convex_hull(&mut pts) {
            if let Ok(polygon) = ConvexPolygon::new(hull) {
                return Ok(polygon);
            }
        }
    }
    Err(HarnessError::DegenerateHull)
}

/// Andrew's monotone chain; returns counterclockwise hull vertices with
/// strictly convex corners, or None when all points are collinear.
fn convex_hull(points: &mut [Point]) -> Option<Vec<Point>> {
    points.sort_unstable_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
    let build = |iter: &mut dyn Iterator<Item = Point>| -> Vec<Point> {
        let mut chain: Vec<Point> = Vec::new();
        for p in iter {
            while chain.len() >= 2 {
                let a = chain[chain.len() - 2];
                let b = chain[chain.len() - 1];
                if (b - a).cross(p - a) <= 0.0 {
                    chain.pop();
                } else {
                    break;
                }
            }
            chain.push(p);
        }
        chain
    };
    let lower = build(&mut points.iter().copied());
    let upper = build(&mut points.iter().rev().copied());
    if lower.len() < 2 || upper.len() < 2 {
        return None;
    }
    // Join the chains, dropping each chain's last point (it starts the
    // other chain).
    let mut hull = lower;
    hull.pop();
    let mut upper = upper;
    upper.pop();
    hull.extend(upper);
    if hull.len() >= 3 {
        Some(hull)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::measure;

    #[test]
    fn sector_hits_closed_form_targets() {
        let spec = FamilySpec::new(FamilyKind::Sector { theta: 0.1 });
        let poly = spec.realize_polygon().unwrap();
        let m = measure(&poly).unwrap();
        assert!((m.area - 0.05).abs() < 1e-5, "area {}", m.area);
        assert!((m.perimeter - 2.1).abs() < 1e-4, "perimeter {}", m.perimeter);
        // The minimum width of a narrow sector polygon is sin θ exactly.
        assert!(
            (m.min_width - 0.1f64.sin()).abs() < 1e-9,
            "width {}",
            m.min_width
        );
        assert!((m.diameter - 1.0).abs() < 1e-12);
        assert_eq!(poly.len(), 514);
    }

    #[test]
    fn ellipse_hits_closed_form_targets() {
        let spec = FamilySpec::new(FamilyKind::Ellipse { semi_minor: 0.05 });
        let poly = spec.realize_polygon().unwrap();
        let m = measure(&poly).unwrap();
        assert!((m.inradius - 0.05).abs() < 1e-6, "inradius {}", m.inradius);
        assert!((m.diameter - 2.0).abs() < 1e-6, "diameter {}", m.diameter);
        assert!((m.min_width - 0.1).abs() < 1e-6, "width {}", m.min_width);
        assert!(
            (m.area - PI * 0.05).abs() / (PI * 0.05) < 1e-4,
            "area {}",
            m.area
        );
    }

    #[test]
    fn planar_thinning_box_is_a_rectangle() {
        let spec = FamilySpec::new(FamilyKind::ThinningBox {
            dimension: 2,
            thickness: 0.1,
        });
        let poly = spec.realize_polygon().unwrap();
        let m = measure(&poly).unwrap();
        assert!((m.area - 0.1).abs() < 1e-12);
        assert!((m.perimeter - 2.2).abs() < 1e-12);
        assert_eq!(poly.len(), 4);
    }

    #[test]
    fn spatial_thinning_box_is_closed_form_only() {
        let spec = FamilySpec::new(FamilyKind::ThinningBox {
            dimension: 3,
            thickness: 0.1,
        });
        match spec.realize().unwrap() {
            Realization::ClosedForm(v) => {
                assert_eq!(v.dimension, 3);
                assert_eq!(v.volume, 0.1);
            }
            Realization::Polygon(_) => panic!("expected closed forms"),
        }
        let err = spec.realize_polygon().unwrap_err();
        assert_eq!(err.to_string(), "closed_form_only");
    }

    #[test]
    fn stadium_perimeter_matches_closed_form() {
        let spec = FamilySpec::new(FamilyKind::Stadium {
            length: 2.0,
            radius: 0.5,
        });
        let poly = spec.realize_polygon().unwrap();
        let m = measure(&poly).unwrap();
        let exact_p = 2.0 * 2.0 + TAU * 0.5;
        assert!(
            (m.perimeter - exact_p).abs() / exact_p < 1e-4,
            "perimeter {}",
            m.perimeter
        );
        let exact_area = 2.0 * 1.0 + PI * 0.25;
        assert!((m.area - exact_area).abs() / exact_area < 1e-4);
        assert!((m.inradius - 0.5).abs() < 1e-6);
    }

    #[test]
    fn random_polygons_are_deterministic_and_valid() {
        let a = random_polygon(1, 30).unwrap();
        let b = random_polygon(1, 30).unwrap();
        assert_eq!(a.vertices().len(), b.vertices().len());
        for (u, v) in a.vertices().iter().zip(b.vertices()) {
            assert_eq!(u.x, v.x);
            assert_eq!(u.y, v.y);
        }
        assert!(a.len() <= 30 && a.len() >= 3);
        let m = measure(&a).unwrap();
        assert!(m.area > 0.0 && m.inradius > 0.0 && m.min_width <= m.diameter);
        // Different seeds give different shapes.
        let c = random_polygon(2, 30).unwrap();
        assert!(c.vertices() != a.vertices());
    }

    #[test]
    fn triangle_orientation_is_fixed() {
        let spec = FamilySpec::new(FamilyKind::Triangle {
            vertices: [
                Point::new(0.0, 0.0),
                Point::new(0.0, 1.0),
                Point::new(1.0, 0.0),
            ],
        });
        let poly = spec.realize_polygon().unwrap();
        assert!((poly.area() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn parsing_round_trips() {
        let spec = FamilySpec::parse("family:rectangle:1:0.1").unwrap();
        assert_eq!(
            spec.kind,
            FamilyKind::Rectangle {
                width: 1.0,
                height: 0.1
            }
        );
        let spec = FamilySpec::parse("sector:0.2").unwrap();
        assert_eq!(spec.kind, FamilyKind::Sector { theta: 0.2 });
        let spec = FamilySpec::parse("family:random_polygon:7:30").unwrap();
        assert_eq!(spec.kind, FamilyKind::RandomPolygon { seed: 7, points: 30 });
        let spec = FamilySpec::parse("triangle:0,0:1,0:0,1").unwrap();
        assert!(matches!(spec.kind, FamilyKind::Triangle { .. }));

        assert!(FamilySpec::parse("family:frisbee:1").is_err());
        assert!(FamilySpec::parse("sector:not-a-number").is_err());
        assert!(FamilySpec::parse("rectangle:1").is_err());
    }

    #[test]
    fn invalid_parameters_are_rejected() {
        for bad in [
            FamilyKind::Sector { theta: -0.1 },
            FamilyKind::Sector { theta: PI },
            FamilyKind::Ellipse { semi_minor: 1.5 },
            FamilyKind::Rectangle {
                width: 0.0,
                height: 1.0,
            },
            FamilyKind::RegularPolygon {
                sides: 2,
                radius: 1.0,
            },
            FamilyKind::ThinningBox {
                dimension: 1,
                thickness: 0.1,
            },
        ] {
            assert!(FamilySpec::new(bad).realize().is_err());
        }
    }

    #[test]
    fn parameter_replacement_targets_the_family_knob() {
        let rect = FamilySpec::parse("rectangle:1:0.4").unwrap();
        let thinner = rect.with_parameter(0.05).unwrap();
        assert_eq!(
            thinner.kind,
            FamilyKind::Rectangle {
                width: 1.0,
                height: 0.05
            }
        );
        let sector = FamilySpec::parse("sector:0.4").unwrap();
        assert_eq!(
            sector.with_parameter(0.1).unwrap().kind,
            FamilyKind::Sector { theta: 0.1 }
        );
        let disk = FamilySpec::parse("disk:1").unwrap();
        assert!(disk.with_parameter(2.0).is_err());
    }

    #[test]
    fn doubling_resolution_improves_curved_families() {
        let coarse = FamilySpec {
            kind: FamilyKind::Disk { radius: 1.0 },
            boundary_resolution: 64,
        };
        let fine = FamilySpec {
            kind: FamilyKind::Disk { radius: 1.0 },
            boundary_resolution: 128,
        };
        let area_coarse = coarse.realize_polygon().unwrap().area();
        let area_fine = fine.realize_polygon().unwrap().area();
        assert!(area_coarse < area_fine && area_fine < PI);
    }
}
