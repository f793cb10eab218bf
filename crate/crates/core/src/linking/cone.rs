use super::polygon::{ensure_disjoint, ClosedPolygon};
use super::LinkError;
use crate::exact_geom::{orient3d, segment_triangle_classify, ExactPoint, ExactScalar, SegTriClass, Triangle};

/// Orientation factor aligning the cone count with the projection method's
/// crossing-sign convention.
const CONE_SIGN: i64 = 1;

/// Linking number as the signed number of times `b` pierces the cone from
/// `apex` over `a`. Each piercing of triangle (apex, a_i, a_i+1) by the
/// segment b_j b_j+1 contributes `orient3d(apex, a_i, a_i+1, b_j+1)`.
pub fn linking_number_cone(a: &ClosedPolygon, apex: &ExactPoint, b: &ClosedPolygon) -> Result<i64, LinkError> {
    if a.segments().iter().chain(b.segments()).any(|s| s.locate_point(apex).is_on()) {
        return Err(LinkError::NonGenericApex);
    }
    ensure_disjoint(a, b)?;
    let n = a.len();
    let mut triangles = Vec::with_capacity(n);
    for i in 0..n {
        let t = Triangle::new(apex.clone(), a.points()[i].clone(), a.points()[(i + 1) % n].clone())
            .map_err(|_| LinkError::NonGenericApex)?;
        triangles.push(t);
    }
    let mut total = 0i64;
    for t in &triangles {
        for s in b.segments() {
            match segment_triangle_classify(s, t) {
                SegTriClass::Disjoint => {}
                SegTriClass::InteriorCross { point } => {
                    if s.is_endpoint(&point) {
                        return Err(LinkError::NonGenericApex);
                    }
                    let [o, p, q] = t.vertices();
                    total += orient3d(o, p, q, s.b()).as_i32() as i64;
                }
                // disjointness of the curves rules out rim contacts, so any
                // boundary contact is on a spoke or at the apex
                SegTriClass::BoundaryTouch { .. } | SegTriClass::CoplanarOverlap { .. } => {
                    return Err(LinkError::NonGenericApex)
                }
            }
        }
    }
    Ok(CONE_SIGN * total)
}

/// Apex candidates: the centroid of `a` pushed along (1, q, q^2) for
/// successive primes q, scaled to the size of the pair.
pub fn candidate_apexes(a: &ClosedPolygon, b: &ClosedPolygon) -> impl Iterator<Item = ExactPoint> {
    let centroid = a.centroid();
    let mut extent = ExactScalar::one();
    for p in a.points().iter().chain(b.points()) {
        for k in 0..3 {
            let d = (p.coord(k) - centroid.coord(k)).abs();
            if d > extent {
                extent = d;
            }
        }
    }
    super::projection::candidate_directions().map(move |dir| {
        let q2 = dir.coord(2).clone();
        centroid.plus(&dir.scaled(&(&extent / &q2)))
    })
}

/// First apex from `candidate_apexes` that is generic, tried up to `limit`
/// candidates.
pub fn find_generic_apex(a: &ClosedPolygon, b: &ClosedPolygon, limit: usize) -> Result<(ExactPoint, i64), LinkError> {
    for apex in candidate_apexes(a, b).take(limit) {
        match linking_number_cone(a, &apex, b) {
            Ok(v) => return Ok((apex, v)),
            Err(LinkError::NonGenericApex) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(LinkError::NoGenericChoice)
}
