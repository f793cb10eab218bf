use serde::{Deserialize, Serialize};

use super::point::ExactPoint;
use super::predicates::orient3d;
use super::scalar::ExactScalar;
use super::GeomError;

/// Closed straight segment with distinct endpoints.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Segment {
    a: ExactPoint,
    b: ExactPoint,
}

/// Where a point sits relative to a segment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OnSegment {
    Off,
    Start,
    End,
    Interior,
}

impl OnSegment {
    pub fn is_on(self) -> bool {
        self != OnSegment::Off
    }
}

/// Exact classification of the intersection of two segments.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SegSegClass {
    Disjoint,
    /// Single common point that is an endpoint of at least one segment.
    EndpointTouch { point: ExactPoint },
    /// Single common point interior to both segments.
    InteriorCross { point: ExactPoint },
    /// Collinear overlap of positive length.
    CollinearOverlap { from: ExactPoint, to: ExactPoint },
}

impl SegSegClass {
    pub fn is_disjoint(&self) -> bool {
        matches!(self, SegSegClass::Disjoint)
    }
}

impl Segment {
    pub fn new(a: ExactPoint, b: ExactPoint) -> Result<Segment, GeomError> {
        if a == b {
            return Err(GeomError::DegenerateSegment(a));
        }
        Ok(Segment { a, b })
    }

    pub fn a(&self) -> &ExactPoint {
        &self.a
    }

    pub fn b(&self) -> &ExactPoint {
        &self.b
    }

    pub fn direction(&self) -> ExactPoint {
        self.b.minus(&self.a)
    }

    pub fn reversed(&self) -> Segment {
        Segment {
            a: self.b.clone(),
            b: self.a.clone(),
        }
    }

    pub fn point_at(&self, t: &ExactScalar) -> ExactPoint {
        ExactPoint::lerp(&self.a, &self.b, t)
    }

    pub fn midpoint(&self) -> ExactPoint {
        ExactPoint::midpoint(&self.a, &self.b)
    }

    pub fn is_endpoint(&self, p: &ExactPoint) -> bool {
        &self.a == p || &self.b == p
    }

    pub fn locate_point(&self, p: &ExactPoint) -> OnSegment {
        if p == &self.a {
            return OnSegment::Start;
        }
        if p == &self.b {
            return OnSegment::End;
        }
        let u = self.direction();
        let w = p.minus(&self.a);
        if !u.cross(&w).is_zero() {
            return OnSegment::Off;
        }
        let t = w.dot(&u);
        if t.sign() == super::Sign::Positive && t < u.norm_squared() {
            OnSegment::Interior
        } else {
            OnSegment::Off
        }
    }
}

/// Classify `s ∩ t` exactly.
pub fn segment_segment_classify(s: &Segment, t: &Segment) -> SegSegClass {
    let (a, b, c, d) = (&s.a, &s.b, &t.a, &t.b);
    if !orient3d(a, b, c, d).is_zero() {
        return SegSegClass::Disjoint;
    }
    let u = s.direction();
    let w = t.direction();
    let r = c.minus(a);
    let n = u.cross(&w);
    let zero = ExactScalar::zero();
    let one = ExactScalar::one();

    if n.is_zero() {
        if !u.cross(&r).is_zero() {
            return SegSegClass::Disjoint;
        }
        let len2 = u.norm_squared();
        let tc = &r.dot(&u) / &len2;
        let td = &d.minus(a).dot(&u) / &len2;
        let (lo, hi) = if tc <= td { (tc, td) } else { (td, tc) };
        let lo = lo.max(zero);
        let hi = hi.min(one);
        return match lo.cmp(&hi) {
            std::cmp::Ordering::Greater => SegSegClass::Disjoint,
            std::cmp::Ordering::Equal => SegSegClass::EndpointTouch {
                point: s.point_at(&lo),
            },
            std::cmp::Ordering::Less => SegSegClass::CollinearOverlap {
                from: s.point_at(&lo),
                to: s.point_at(&hi),
            },
        };
    }

    let nn = n.norm_squared();
    let sp = &r.cross(&w).dot(&n) / &nn;
    let tp = &r.cross(&u).dot(&n) / &nn;
    let inside = |v: &ExactScalar| *v >= zero && *v <= one;
    if !inside(&sp) || !inside(&tp) {
        return SegSegClass::Disjoint;
    }
    let point = s.point_at(&sp);
    let at_end = |v: &ExactScalar| v.is_zero() || *v == one;
    if at_end(&sp) || at_end(&tp) {
        SegSegClass::EndpointTouch { point }
    } else {
        SegSegClass::InteriorCross { point }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seg(a: [i64; 3], b: [i64; 3]) -> Segment {
        Segment::new(
            ExactPoint::from_ints(a[0], a[1], a[2]),
            ExactPoint::from_ints(b[0], b[1], b[2]),
        )
        .unwrap()
    }

    #[test]
    fn separated_collinear() {
        let c = segment_segment_classify(&seg([0, 0, 0], [1, 0, 0]), &seg([2, 0, 0], [3, 0, 0]));
        assert_eq!(c, SegSegClass::Disjoint);
    }

    #[test]
    fn square_diagonals_cross_at_center() {
        let c = segment_segment_classify(&seg([0, 0, 0], [1, 1, 0]), &seg([1, 0, 0], [0, 1, 0]));
        assert_eq!(
            c,
            SegSegClass::InteriorCross {
                point: ExactPoint::from_ratios(1, 1, 0, 2)
            }
        );
    }

    #[test]
    fn shared_endpoint() {
        let c = segment_segment_classify(&seg([0, 0, 0], [1, 0, 0]), &seg([1, 0, 0], [1, 1, 0]));
        assert_eq!(
            c,
            SegSegClass::EndpointTouch {
                point: ExactPoint::from_ints(1, 0, 0)
            }
        );
    }

    #[test]
    fn collinear_overlap_and_touch() {
        let c = segment_segment_classify(&seg([0, 0, 0], [2, 0, 0]), &seg([1, 0, 0], [3, 0, 0]));
        assert_eq!(
            c,
            SegSegClass::CollinearOverlap {
                from: ExactPoint::from_ints(1, 0, 0),
                to: ExactPoint::from_ints(2, 0, 0)
            }
        );
        let c = segment_segment_classify(&seg([0, 0, 0], [1, 0, 0]), &seg([2, 0, 0], [1, 0, 0]));
        assert!(matches!(c, SegSegClass::EndpointTouch { .. }));
    }

    #[test]
    fn skew_and_t_junction() {
        let c = segment_segment_classify(&seg([0, 0, 0], [1, 0, 0]), &seg([0, 1, 1], [1, -1, 1]));
        assert_eq!(c, SegSegClass::Disjoint);
        let c = segment_segment_classify(&seg([0, 0, 0], [2, 0, 0]), &seg([1, 0, 0], [1, 5, 0]));
        assert_eq!(
            c,
            SegSegClass::EndpointTouch {
                point: ExactPoint::from_ints(1, 0, 0)
            }
        );
    }

    #[test]
    fn degenerate_rejected() {
        let p = ExactPoint::from_ints(1, 2, 3);
        assert!(Segment::new(p.clone(), p).is_err());
    }

    #[test]
    fn locate_point_cases() {
        let s = seg([0, 0, 0], [2, 2, 2]);
        assert_eq!(s.locate_point(&ExactPoint::from_ints(1, 1, 1)), OnSegment::Interior);
        assert_eq!(s.locate_point(&ExactPoint::from_ints(3, 3, 3)), OnSegment::Off);
        assert_eq!(s.locate_point(&ExactPoint::from_ints(2, 2, 2)), OnSegment::End);
        assert_eq!(s.locate_point(&ExactPoint::from_ints(1, 0, 1)), OnSegment::Off);
    }
}
