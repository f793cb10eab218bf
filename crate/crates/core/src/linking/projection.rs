use super::polygon::{ensure_disjoint, ClosedPolygon};
use super::LinkError;
use crate::exact_geom::{orient3d, segment_segment_classify, ExactPoint, Segment, Sign};

/// How the projections of two segments along a direction relate.
enum ShadowCross {
    None,
    /// Proper crossing; `second_over` tells whether the second segment lies
    /// further along the direction.
    Proper { second_over: bool },
}

fn shadow_cross(s: &Segment, t: &Segment, dir: &ExactPoint) -> Result<ShadowCross, LinkError> {
    let (p0, p1, q0, q1) = (s.a(), s.b(), t.a(), t.b());
    let s1 = orient3d(p0, p1, q0, &q0.plus(dir));
    let s2 = orient3d(p0, p1, q1, &q1.plus(dir));
    if s1 == s2 && s1 != Sign::Zero {
        return Ok(ShadowCross::None);
    }
    let s3 = orient3d(q0, q1, p0, &p0.plus(dir));
    let s4 = orient3d(q0, q1, p1, &p1.plus(dir));
    if s3 == s4 && s3 != Sign::Zero {
        return Ok(ShadowCross::None);
    }
    if s1.is_zero() || s2.is_zero() || s3.is_zero() || s4.is_zero() {
        // touching or collinear shadows; fine only if they are disjoint
        let flat = |x: &ExactPoint| x.minus(&dir.scaled(&(x.dot(dir) / dir.norm_squared())));
        let ps = Segment::new(flat(p0), flat(p1)).map_err(|_| LinkError::NonGenericDirection)?;
        let pt = Segment::new(flat(q0), flat(q1)).map_err(|_| LinkError::NonGenericDirection)?;
        return if segment_segment_classify(&ps, &pt).is_disjoint() {
            Ok(ShadowCross::None)
        } else {
            Err(LinkError::NonGenericDirection)
        };
    }
    // Solve p0 + u e + lambda dir = q0 + w f; the sign of lambda says which
    // segment is on top.
    let e = s.direction();
    let f = t.direction();
    let r = q0.minus(p0);
    let det = |x: &ExactPoint, y: &ExactPoint, z: &ExactPoint| x.dot(&y.cross(z));
    let nf = f.negated();
    let d = det(&e, &nf, dir);
    let l = det(&e, &nf, &r);
    let lambda_sign = l.sign() * d.sign();
    match lambda_sign {
        Sign::Zero => Err(LinkError::CurvesIntersect {
            point: ExactPoint::lerp(p0, p1, &det(&r, &nf, dir).checked_div(&d).unwrap()),
        }),
        sgn => Ok(ShadowCross::Proper {
            second_over: sgn == Sign::Positive,
        }),
    }
}

/// Whether `dir` is a usable projection direction for the pair: no edge is
/// parallel to it and no projected vertex lands on another projected edge.
pub fn is_generic_direction(a: &ClosedPolygon, b: &ClosedPolygon, dir: &ExactPoint) -> bool {
    linking_number_projection(a, b, dir).is_ok()
}

/// Linking number from a projection along `dir`: the sum of crossing signs
/// over the crossings where `a` passes over `b`. A crossing's sign is
/// `orient3d(over0, over1, under0, under1)`.
pub fn linking_number_projection(a: &ClosedPolygon, b: &ClosedPolygon, dir: &ExactPoint) -> Result<i64, LinkError> {
    if dir.is_zero() {
        return Err(LinkError::NonGenericDirection);
    }
    for seg in a.segments().iter().chain(b.segments()) {
        if seg.direction().cross(dir).is_zero() {
            return Err(LinkError::NonGenericDirection);
        }
    }
    ensure_disjoint(a, b)?;
    let mut total = 0i64;
    for s in a.segments() {
        for t in b.segments() {
            if let ShadowCross::Proper { second_over: false } = shadow_cross(s, t, dir)? {
                total += orient3d(s.a(), s.b(), t.a(), t.b()).as_i32() as i64;
            }
        }
    }
    Ok(total)
}

/// Directions (1, q, q^2) for successive primes q.
pub fn candidate_directions() -> impl Iterator<Item = ExactPoint> {
    (2i64..)
        .filter(|&q| (2..q).take_while(|d| d * d <= q).all(|d| q % d != 0))
        .map(|q| ExactPoint::from_ints(1, q, q * q))
}

/// First direction from `candidate_directions` that is generic for the pair,
/// tried up to `limit` candidates.
pub fn find_generic_direction(a: &ClosedPolygon, b: &ClosedPolygon, limit: usize) -> Result<(ExactPoint, i64), LinkError> {
    for dir in candidate_directions().take(limit) {
        match linking_number_projection(a, b, &dir) {
            Ok(v) => return Ok((dir, v)),
            Err(LinkError::NonGenericDirection) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(LinkError::NoGenericChoice)
}
