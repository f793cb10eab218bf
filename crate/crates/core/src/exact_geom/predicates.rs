use super::point::ExactPoint;
use super::scalar::{ExactScalar, Sign};

/// Sign of `det[b - a, c - a, d - a]`; zero exactly when the four points are
/// coplanar. Positive for the right-handed unit tetrahedron.
pub fn orient3d(a: &ExactPoint, b: &ExactPoint, c: &ExactPoint, d: &ExactPoint) -> Sign {
    let u = b.minus(a);
    let v = c.minus(a);
    let w = d.minus(a);
    u.cross(&v).dot(&w).sign()
}

/// Coordinate projection R³ → R² that drops one axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Projection {
    drop: usize,
}

impl Projection {
    /// Projection that is injective on any plane with the given (nonzero)
    /// normal: drops the axis of the largest-magnitude normal component.
    pub fn for_normal(normal: &ExactPoint) -> Projection {
        let mut best = 0;
        for axis in 1..3 {
            if normal.coord(axis).abs() > normal.coord(best).abs() {
                best = axis;
            }
        }
        debug_assert!(!normal.coord(best).is_zero(), "zero normal");
        Projection { drop: best }
    }

    pub fn dropped_axis(&self) -> usize {
        self.drop
    }

    fn axes(&self) -> (usize, usize) {
        match self.drop {
            0 => (1, 2),
            1 => (2, 0),
            _ => (0, 1),
        }
    }

    /// Twice the signed area of the projected triangle `abc`.
    pub fn orient2d_value(&self, a: &ExactPoint, b: &ExactPoint, c: &ExactPoint) -> ExactScalar {
        let (u, v) = self.axes();
        let bu = b.coord(u) - a.coord(u);
        let bv = b.coord(v) - a.coord(v);
        let cu = c.coord(u) - a.coord(u);
        let cv = c.coord(v) - a.coord(v);
        bu * cv - bv * cu
    }

    pub fn orient2d(&self, a: &ExactPoint, b: &ExactPoint, c: &ExactPoint) -> Sign {
        self.orient2d_value(a, b, c).sign()
    }
}

/// True when the three points lie on a common line (including coincidences).
pub fn collinear(a: &ExactPoint, b: &ExactPoint, c: &ExactPoint) -> bool {
    b.minus(a).cross(&c.minus(a)).is_zero()
}
