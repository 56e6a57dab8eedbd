//! Planar points, vectors, and unit directions.
//!
//! `Point` doubles as a 2D vector; the handful of operators defined here are
//! the ones the rest of the crate actually uses (affine combinations, dot and
//! cross products, norms). `Direction` is a validated unit vector used for
//! support-function queries.

use serde::{Deserialize, Serialize};
use std::ops::{Add, Mul, Neg, Sub};

use super::GeometryError;

/// Maximum deviation of `x*x + y*y` from 1 tolerated by [`Direction`].
pub const DIRECTION_UNIT_TOLERANCE: f64 = 1e-12;

/// A point (or vector) in the Euclidean plane.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    #[must_use]
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    /// Euclidean inner product.
    #[must_use]
    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// The z-component of the 3D cross product, `self.x * other.y - self.y * other.x`.
    ///
    /// Positive when `other` points counterclockwise of `self`.
    #[must_use]
    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    /// Euclidean norm.
    #[must_use]
    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    /// Distance to another point.
    #[must_use]
    pub fn distance(self, other: Point) -> f64 {
        (self - other).norm()
    }

    /// Counterclockwise rotation by a quarter turn.
    #[must_use]
    pub fn perp(self) -> Point {
        Point::new(-self.y, self.x)
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, rhs: Point) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, rhs: Point) -> Point {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, rhs: f64) -> Point {
        Point::new(self.x * rhs, self.y * rhs)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

/// A unit vector in the plane, valid within [`DIRECTION_UNIT_TOLERANCE`].
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Direction {
    x: f64,
    y: f64,
}

impl Direction {
    /// Normalizes `(x, y)` to a unit direction.
    ///
    /// # Errors
    /// Returns [`GeometryError::InvalidDirection`] when the vector is too
    /// short to normalize reliably.
    pub fn new(x: f64, y: f64) -> Result<Self, GeometryError> {
        let n = x.hypot(y);
        if !n.is_finite() || n < 1e-30 {
            return Err(GeometryError::InvalidDirection);
        }
        Ok(Self { x: x / n, y: y / n })
    }

    /// The direction at angle `phi` (radians) from the positive x-axis.
    #[must_use]
    pub fn from_angle(phi: f64) -> Self {
        Self {
            x: phi.cos(),
            y: phi.sin(),
        }
    }

    #[must_use]
    pub fn x(self) -> f64 {
        self.x
    }

    #[must_use]
    pub fn y(self) -> f64 {
        self.y
    }

    /// The direction as a vector.
    #[must_use]
    pub fn vector(self) -> Point {
        Point::new(self.x, self.y)
    }

    /// Whether the squared norm is within [`DIRECTION_UNIT_TOLERANCE`] of 1.
    #[must_use]
    pub fn is_unit(self) -> bool {
        (self.x * self.x + self.y * self.y - 1.0).abs() <= DIRECTION_UNIT_TOLERANCE
    }
}

impl Neg for Direction {
    type Output = Direction;
    fn neg(self) -> Direction {
        Direction {
            x: -self.x,
            y: -self.y,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_algebra() {
        let a = Point::new(1.0, 2.0);
        let b = Point::new(3.0, -1.0);
        assert_eq!(a + b, Point::new(4.0, 1.0));
        assert_eq!(a - b, Point::new(-2.0, 3.0));
        assert_eq!(a * 2.0, Point::new(2.0, 4.0));
        assert_eq!(a.dot(b), 1.0);
        assert_eq!(a.cross(b), -7.0);
        assert_eq!(Point::new(3.0, 4.0).norm(), 5.0);
        assert_eq!(Point::new(1.0, 0.0).perp(), Point::new(0.0, 1.0));
    }

    #[test]
    fn direction_normalizes() {
        let d = Direction::new(3.0, 4.0).unwrap();
        assert!((d.x() - 0.6).abs() < 1e-15);
        assert!((d.y() - 0.8).abs() < 1e-15);
        assert!(d.is_unit());
        assert!((-d).is_unit());
        assert_eq!((-d).x(), -d.x());
    }

    #[test]
    fn direction_rejects_zero_vector() {
        assert!(Direction::new(0.0, 0.0).is_err());
        assert!(Direction::new(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn direction_from_angle_is_unit() {
        for k in 0..64 {
            let d = Direction::from_angle(k as f64 * 0.1);
            assert!(d.is_unit());
        }
    }
}
