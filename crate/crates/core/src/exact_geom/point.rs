use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::scalar::{ExactScalar, Sign};

/// A point (or displacement) in R³ with exact rational coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "[ExactScalar; 3]", into = "[ExactScalar; 3]")]
pub struct ExactPoint {
    pub x: ExactScalar,
    pub y: ExactScalar,
    pub z: ExactScalar,
}

impl From<[ExactScalar; 3]> for ExactPoint {
    fn from([x, y, z]: [ExactScalar; 3]) -> Self {
        ExactPoint { x, y, z }
    }
}

impl From<ExactPoint> for [ExactScalar; 3] {
    fn from(p: ExactPoint) -> Self {
        [p.x, p.y, p.z]
    }
}

impl ExactPoint {
    pub fn new(x: ExactScalar, y: ExactScalar, z: ExactScalar) -> Self {
        ExactPoint { x, y, z }
    }

    pub fn origin() -> Self {
        Self::from_ints(0, 0, 0)
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Self {
        ExactPoint::new(x.into(), y.into(), z.into())
    }

    /// Coordinates `(x, y, z) / den`.
    pub fn from_ratios(x: i64, y: i64, z: i64, den: i64) -> Self {
        let s = |v| ExactScalar::ratio(v, den).expect("nonzero denominator");
        ExactPoint::new(s(x), s(y), s(z))
    }

    pub fn coord(&self, axis: usize) -> &ExactScalar {
        match axis {
            0 => &self.x,
            1 => &self.y,
            2 => &self.z,
            _ => panic!("axis {axis} out of range"),
        }
    }

    pub fn minus(&self, o: &ExactPoint) -> ExactPoint {
        ExactPoint::new(&self.x - &o.x, &self.y - &o.y, &self.z - &o.z)
    }

    pub fn plus(&self, o: &ExactPoint) -> ExactPoint {
        ExactPoint::new(&self.x + &o.x, &self.y + &o.y, &self.z + &o.z)
    }

    pub fn scaled(&self, k: &ExactScalar) -> ExactPoint {
        ExactPoint::new(&self.x * k, &self.y * k, &self.z * k)
    }

    pub fn negated(&self) -> ExactPoint {
        ExactPoint::new(-&self.x, -&self.y, -&self.z)
    }

    pub fn dot(&self, o: &ExactPoint) -> ExactScalar {
        &self.x * &o.x + &self.y * &o.y + &self.z * &o.z
    }

    pub fn cross(&self, o: &ExactPoint) -> ExactPoint {
        ExactPoint::new(
            &self.y * &o.z - &self.z * &o.y,
            &self.z * &o.x - &self.x * &o.z,
            &self.x * &o.y - &self.y * &o.x,
        )
    }

    pub fn norm_squared(&self) -> ExactScalar {
        self.dot(self)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    /// `a + t (b - a)`.
    pub fn lerp(a: &ExactPoint, b: &ExactPoint, t: &ExactScalar) -> ExactPoint {
        a.plus(&b.minus(a).scaled(t))
    }

    pub fn midpoint(a: &ExactPoint, b: &ExactPoint) -> ExactPoint {
        let half = ExactScalar::ratio(1, 2).unwrap();
        a.plus(b).scaled(&half)
    }

    pub fn to_f64(&self) -> [f64; 3] {
        [self.x.to_f64(), self.y.to_f64(), self.z.to_f64()]
    }
}

impl fmt::Debug for ExactPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

impl fmt::Display for ExactPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Homogeneous integer form `(X, Y, Z) / W` with `W > 0`. Plane-side tests
/// against a [`Triangle`](super::Triangle) run on these without any gcd work.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomPoint {
    pub coords: [BigInt; 3],
    pub w: BigInt,
}

impl From<&ExactPoint> for HomPoint {
    fn from(p: &ExactPoint) -> Self {
        let w = p.x.denom().lcm(p.y.denom()).lcm(p.z.denom());
        let lift = |s: &ExactScalar| s.numer() * (&w / s.denom());
        HomPoint {
            coords: [lift(&p.x), lift(&p.y), lift(&p.z)],
            w,
        }
    }
}

/// Integer plane `normal · p = offset` scaled from an exact rational plane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPlane {
    pub normal: [BigInt; 3],
    pub offset: BigInt,
}

impl IntPlane {
    /// Plane through `base` with rational `normal`, scaled to integers by a
    /// positive factor (so sides are preserved).
    pub fn from_rational(normal: &ExactPoint, base: &ExactPoint) -> Self {
        let offset = normal.dot(base);
        let scale = [&normal.x, &normal.y, &normal.z, &offset]
            .iter()
            .fold(BigInt::one(), |acc, s| acc.lcm(s.denom()));
        let lift = |s: &ExactScalar| s.numer() * (&scale / s.denom());
        IntPlane {
            normal: [lift(&normal.x), lift(&normal.y), lift(&normal.z)],
            offset: lift(&offset),
        }
    }

    pub fn side(&self, p: &HomPoint) -> Sign {
        let [a, b, c] = &self.normal;
        let v = a * &p.coords[0] + b * &p.coords[1] + c * &p.coords[2] - &self.offset * &p.w;
        Sign::of_int(&v)
    }
}
