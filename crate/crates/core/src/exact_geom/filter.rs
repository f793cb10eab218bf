//! Floating-point fast paths with conservative error bounds. A filtered
//! predicate returns `None` whenever the float result could be wrong, and
//! callers then fall back to exact arithmetic.

use super::point::ExactPoint;
use super::scalar::Sign;

/// Relative error budget. The true worst case for inputs that are
/// themselves rounded to f64 is a few dozen ulps; this is far larger.
const REL_BOUND: f64 = 1e-12;

/// Float approximation of an exact point.
pub type Approx = [f64; 3];

pub fn approx(p: &ExactPoint) -> Approx {
    p.to_f64()
}

/// Sign of `orient3d(a, b, c, d)` if the float evaluation is certain.
pub fn orient3d_filtered(a: &Approx, b: &Approx, c: &Approx, d: &Approx) -> Option<Sign> {
    let mut u = [0.0; 3];
    let mut v = [0.0; 3];
    let mut w = [0.0; 3];
    let mut mu = [0.0; 3];
    let mut mv = [0.0; 3];
    let mut mw = [0.0; 3];
    for k in 0..3 {
        u[k] = b[k] - a[k];
        v[k] = c[k] - a[k];
        w[k] = d[k] - a[k];
        mu[k] = b[k].abs() + a[k].abs();
        mv[k] = c[k].abs() + a[k].abs();
        mw[k] = d[k].abs() + a[k].abs();
    }
    let det = u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0]) + u[2] * (v[0] * w[1] - v[1] * w[0]);
    let perm = mu[0] * (mv[1] * mw[2] + mv[2] * mw[1])
        + mu[1] * (mv[0] * mw[2] + mv[2] * mw[0])
        + mu[2] * (mv[0] * mw[1] + mv[1] * mw[0]);
    if !det.is_finite() || !perm.is_finite() || perm < 1e-200 {
        return None;
    }
    if det > REL_BOUND * perm {
        Some(Sign::Positive)
    } else if det < -REL_BOUND * perm {
        Some(Sign::Negative)
    } else {
        None
    }
}

/// Certain outcome of a segment against an open triangle, or `None` when
/// the float evaluation cannot decide.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuickSegTri {
    /// The closed segment misses the closed triangle.
    Disjoint,
    /// The segment crosses the open triangle transversally, with both
    /// endpoints strictly off its plane.
    Crosses,
}

pub fn segment_triangle_quick(s0: &Approx, s1: &Approx, tri: &[Approx; 3]) -> Option<QuickSegTri> {
    let [p, q, r] = tri;
    let sa = orient3d_filtered(p, q, r, s0);
    let sb = orient3d_filtered(p, q, r, s1);
    match (sa, sb) {
        (Some(a), Some(b)) if a == b && a != Sign::Zero => return Some(QuickSegTri::Disjoint),
        (Some(a), Some(b)) if a == b.flip() && a != Sign::Zero => {}
        _ => return None,
    }
    let e1 = orient3d_filtered(s0, s1, p, q);
    let e2 = orient3d_filtered(s0, s1, q, r);
    let e3 = orient3d_filtered(s0, s1, r, p);
    let known: Vec<Sign> = [e1, e2, e3].into_iter().flatten().collect();
    if known.contains(&Sign::Positive) && known.contains(&Sign::Negative) {
        return Some(QuickSegTri::Disjoint);
    }
    if known.len() == 3 && known[0] == known[1] && known[1] == known[2] {
        return Some(QuickSegTri::Crosses);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_geom::orient3d;

    #[test]
    fn filtered_agrees_when_certain() {
        let pts = [
            ExactPoint::from_ratios(1, 2, 3, 7),
            ExactPoint::from_ratios(-5, 1, 2, 3),
            ExactPoint::from_ratios(4, -4, 1, 5),
            ExactPoint::from_ratios(2, 2, 2, 9),
        ];
        let a: Vec<Approx> = pts.iter().map(approx).collect();
        let exact = orient3d(&pts[0], &pts[1], &pts[2], &pts[3]);
        assert_eq!(orient3d_filtered(&a[0], &a[1], &a[2], &a[3]), Some(exact));
        // coplanar input is never decided by floats
        let flat = ExactPoint::from_ratios(1, 1, 0, 3);
        let f = [approx(&ExactPoint::origin()), [1.0, 0.0, 0.0], [0.0, 1.0, 0.0], approx(&flat)];
        assert_eq!(orient3d_filtered(&f[0], &f[1], &f[2], &f[3]), None);
    }
}
