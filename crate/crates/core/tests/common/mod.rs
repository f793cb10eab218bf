//! Independent reference computations for the integration tests. Nothing
//! here calls the library's predicates; everything is recomputed from
//! coordinates with plain rational linear algebra.
#![allow(dead_code)]

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use paneled_core::exact_geom::{ExactPoint, ExactScalar};

pub type Q = BigRational;

pub fn coords(p: &ExactPoint) -> [Q; 3] {
    [p.x.as_rational().clone(), p.y.as_rational().clone(), p.z.as_rational().clone()]
}

fn det3(m: &[[Q; 3]; 3]) -> Q {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1]) - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

/// Determinant of the 4x4 matrix with rows (p, 1), by cofactor expansion
/// along the last column. Equals minus the orientation determinant.
pub fn det4_lifted(pts: [&ExactPoint; 4]) -> Q {
    let rows: Vec<[Q; 3]> = pts.iter().map(|p| coords(p)).collect();
    let mut total = Q::zero();
    for skip in 0..4 {
        let minor: Vec<[Q; 3]> = (0..4).filter(|&r| r != skip).map(|r| rows[r].clone()).collect();
        let m = [minor[0].clone(), minor[1].clone(), minor[2].clone()];
        // cofactor sign for entry (skip, 3)
        let term = det3(&m);
        if (skip + 3) % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Sign (-1, 0, 1) of the orientation of four points, via `det4_lifted`.
pub fn orientation_oracle(a: &ExactPoint, b: &ExactPoint, c: &ExactPoint, d: &ExactPoint) -> i32 {
    let v = -det4_lifted([a, b, c, d]);
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

/// Where a segment meets a triangle's plane, in barycentric terms.
#[derive(Debug, Clone, PartialEq)]
pub enum PlaneHit {
    /// Segment parallel to (or inside) the plane.
    Parallel,
    /// Crossing at segment parameter `t` with barycentrics `lambda`.
    At { t: Q, lambda: [Q; 3] },
}

/// Solve `s0 + t (s1 - s0) = p + u (q - p) + w (r - p)` by Cramer's rule.
pub fn segment_plane_hit(s0: &ExactPoint, s1: &ExactPoint, tri: [&ExactPoint; 3]) -> PlaneHit {
    let (a, b) = (coords(s0), coords(s1));
    let [p, q, r] = tri.map(coords);
    let col = |k: usize| -> [Q; 3] {
        match k {
            0 => [&b[0] - &a[0], &b[1] - &a[1], &b[2] - &a[2]],
            1 => [&p[0] - &q[0], &p[1] - &q[1], &p[2] - &q[2]],
            _ => [&p[0] - &r[0], &p[1] - &r[1], &p[2] - &r[2]],
        }
    };
    let rhs = [&p[0] - &a[0], &p[1] - &a[1], &p[2] - &a[2]];
    let cols = [col(0), col(1), col(2)];
    let matrix = |c: &[[Q; 3]; 3]| -> [[Q; 3]; 3] {
        [
            [c[0][0].clone(), c[1][0].clone(), c[2][0].clone()],
            [c[0][1].clone(), c[1][1].clone(), c[2][1].clone()],
            [c[0][2].clone(), c[1][2].clone(), c[2][2].clone()],
        ]
    };
    let d = det3(&matrix(&cols));
    if d.is_zero() {
        return PlaneHit::Parallel;
    }
    let solve = |k: usize| {
        let mut c = cols.clone();
        c[k] = rhs.clone();
        det3(&matrix(&c)) / &d
    };
    let (t, u, w) = (solve(0), solve(1), solve(2));
    let l0 = Q::one() - &u - &w;
    PlaneHit::At { t, lambda: [l0, u, w] }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FanVerdict {
    Interior,
    NotInterior,
    /// Some triangle is coplanar with the segment; the oracle does not decide.
    Undecided,
}

/// Does the closed segment meet the interior of the fan `apex` over `rim`
/// (open triangles plus open inner spokes)? Scans every triangle.
pub fn fan_interior_oracle(apex: &ExactPoint, rim: &[ExactPoint], s0: &ExactPoint, s1: &ExactPoint) -> FanVerdict {
    let last = rim.len() - 1;
    let mut undecided = false;
    for i in 0..last {
        match segment_plane_hit(s0, s1, [apex, &rim[i], &rim[i + 1]]) {
            PlaneHit::Parallel => {
                if orientation_oracle(apex, &rim[i], &rim[i + 1], s0) == 0 {
                    undecided = true;
                }
            }
            PlaneHit::At { t, lambda } => {
                if t.is_negative() || t > Q::one() || lambda.iter().any(|l| l.is_negative()) {
                    continue;
                }
                let pos = |k: usize| lambda[k].is_positive();
                let face = pos(0) && pos(1) && pos(2);
                // lambda[2] == 0: spoke to rim[i]; lambda[1] == 0: spoke to rim[i + 1]
                let spoke_i = pos(0) && pos(1) && lambda[2].is_zero() && i > 0;
                let spoke_next = pos(0) && pos(2) && lambda[1].is_zero() && i + 1 < last;
                if face || spoke_i || spoke_next {
                    return FanVerdict::Interior;
                }
            }
        }
    }
    if undecided {
        FanVerdict::Undecided
    } else {
        FanVerdict::NotInterior
    }
}

/// Is `x` in the interior of the fan? Coplanar barycentric scan.
pub fn fan_point_interior_oracle(apex: &ExactPoint, rim: &[ExactPoint], x: &ExactPoint) -> bool {
    let last = rim.len() - 1;
    for i in 0..last {
        if orientation_oracle(apex, &rim[i], &rim[i + 1], x) != 0 {
            continue;
        }
        // barycentrics via a segment from x to an off-plane point
        let off = {
            let [a, b, c] = [apex, &rim[i], &rim[i + 1]].map(coords);
            let u: Vec<Q> = (0..3).map(|k| &b[k] - &a[k]).collect();
            let v: Vec<Q> = (0..3).map(|k| &c[k] - &a[k]).collect();
            let n = [
                &u[1] * &v[2] - &u[2] * &v[1],
                &u[2] * &v[0] - &u[0] * &v[2],
                &u[0] * &v[1] - &u[1] * &v[0],
            ];
            let xc = coords(x);
            let q = |k: usize| ExactScalar::from_rational(&xc[k] + &n[k]);
            ExactPoint::new(q(0), q(1), q(2))
        };
        if let PlaneHit::At { lambda, .. } = segment_plane_hit(x, &off, [apex, &rim[i], &rim[i + 1]]) {
            if lambda.iter().any(|l| l.is_negative()) {
                continue;
            }
            let pos = |k: usize| lambda[k].is_positive();
            if (pos(0) && pos(1) && pos(2))
                || (pos(0) && pos(1) && lambda[2].is_zero() && i > 0)
                || (pos(0) && pos(2) && lambda[1].is_zero() && i + 1 < last)
            {
                return true;
            }
        }
    }
    false
}
