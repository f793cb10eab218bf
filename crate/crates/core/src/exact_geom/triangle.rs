use serde::{Deserialize, Serialize};

use super::filter::{approx, Approx};
use super::point::{ExactPoint, HomPoint, IntPlane};
use super::predicates::Projection;
use super::scalar::{ExactScalar, Sign};
use super::segment::Segment;
use super::GeomError;

/// Non-degenerate triangle with its supporting plane cached.
#[derive(Debug, Clone)]
pub struct Triangle {
    verts: [ExactPoint; 3],
    normal: ExactPoint,
    plane: IntPlane,
    projection: Projection,
    approx: [Approx; 3],
}

impl PartialEq for Triangle {
    fn eq(&self, other: &Self) -> bool {
        self.verts == other.verts
    }
}

impl Eq for Triangle {}

/// Location of a point of the triangle's plane relative to the triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "index", rename_all = "kebab-case")]
pub enum TriLocation {
    Outside,
    /// Vertex `i` (0 = p, 1 = q, 2 = r).
    Vertex(usize),
    /// Open edge `i` (0 = pq, 1 = qr, 2 = rp).
    Edge(usize),
    Interior,
}

impl TriLocation {
    pub fn is_boundary(self) -> bool {
        matches!(self, TriLocation::Vertex(_) | TriLocation::Edge(_))
    }
}

/// A contact set that lies in a closed boundary.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Contact {
    Point { point: ExactPoint },
    Subsegment { from: ExactPoint, to: ExactPoint },
}

impl Contact {
    /// A representative point: the point itself, or the subsegment midpoint.
    pub fn witness(&self) -> ExactPoint {
        match self {
            Contact::Point { point } => point.clone(),
            Contact::Subsegment { from, to } => ExactPoint::midpoint(from, to),
        }
    }
}

/// Exact classification of a segment against a closed triangle. "Interior"
/// always means the relative interior (open triangle).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SegTriClass {
    Disjoint,
    /// The segment meets the triangle, but only in its boundary.
    BoundaryTouch { contact: Contact },
    /// The segment meets the open triangle transversally at one point.
    InteriorCross { point: ExactPoint },
    /// The segment lies in the triangle's plane and its overlap with the
    /// triangle enters the open triangle.
    CoplanarOverlap { from: ExactPoint, to: ExactPoint },
}

impl Triangle {
    pub fn new(p: ExactPoint, q: ExactPoint, r: ExactPoint) -> Result<Triangle, GeomError> {
        let normal = q.minus(&p).cross(&r.minus(&p));
        if normal.is_zero() {
            return Err(GeomError::DegenerateTriangle([p, q, r]));
        }
        let plane = IntPlane::from_rational(&normal, &p);
        let projection = Projection::for_normal(&normal);
        let approx = [approx(&p), approx(&q), approx(&r)];
        Ok(Triangle {
            verts: [p, q, r],
            normal,
            plane,
            projection,
            approx,
        })
    }

    pub fn vertices(&self) -> &[ExactPoint; 3] {
        &self.verts
    }

    /// Float approximations of the vertices, for filtered predicates.
    pub fn approx(&self) -> &[Approx; 3] {
        &self.approx
    }

    pub fn vertex(&self, i: usize) -> &ExactPoint {
        &self.verts[i]
    }

    /// Un-normalized normal `(q - p) × (r - p)`.
    pub fn normal(&self) -> &ExactPoint {
        &self.normal
    }

    /// Edge `i` as a segment (0 = pq, 1 = qr, 2 = rp).
    pub fn edge(&self, i: usize) -> Segment {
        Segment::new(self.verts[i].clone(), self.verts[(i + 1) % 3].clone())
            .expect("triangle edges are non-degenerate")
    }

    /// Twice the area, squared: `|normal|²`. Positive for every valid triangle.
    pub fn doubled_area_squared(&self) -> ExactScalar {
        self.normal.norm_squared()
    }

    /// `normal · (s - p)`; its sign equals `orient3d(p, q, r, s)`.
    pub fn plane_value(&self, s: &ExactPoint) -> ExactScalar {
        self.normal.dot(&s.minus(&self.verts[0]))
    }

    pub fn side(&self, s: &ExactPoint) -> Sign {
        self.plane_value(s).sign()
    }

    /// Same as [`Triangle::side`] on a pre-converted point; no rational
    /// normalisation involved.
    pub fn side_hom(&self, s: &HomPoint) -> Sign {
        self.plane.side(s)
    }

    /// Locate a point assumed to lie in the triangle's plane.
    pub fn locate_coplanar(&self, x: &ExactPoint) -> TriLocation {
        let [p, q, r] = &self.verts;
        let pr = &self.projection;
        let o = pr.orient2d(p, q, r);
        let e = [
            pr.orient2d(p, q, x) * o,
            pr.orient2d(q, r, x) * o,
            pr.orient2d(r, p, x) * o,
        ];
        if e.contains(&Sign::Negative) {
            return TriLocation::Outside;
        }
        match (e[0].is_zero(), e[1].is_zero(), e[2].is_zero()) {
            (false, false, false) => TriLocation::Interior,
            (true, false, false) => TriLocation::Edge(0),
            (false, true, false) => TriLocation::Edge(1),
            (false, false, true) => TriLocation::Edge(2),
            (true, false, true) => TriLocation::Vertex(0),
            (true, true, false) => TriLocation::Vertex(1),
            (false, true, true) => TriLocation::Vertex(2),
            (true, true, true) => unreachable!("non-degenerate triangle"),
        }
    }

    /// Locate an arbitrary point (off-plane points are `Outside`).
    pub fn locate(&self, x: &ExactPoint) -> TriLocation {
        if !self.side(x).is_zero() {
            return TriLocation::Outside;
        }
        self.locate_coplanar(x)
    }

    fn clip_coplanar(&self, s: &Segment) -> SegTriClass {
        let pr = &self.projection;
        let o = ExactScalar::from_int(pr.orient2d(&self.verts[0], &self.verts[1], &self.verts[2]).as_i32() as i64);
        let mut lo = ExactScalar::zero();
        let mut hi = ExactScalar::one();
        for i in 0..3 {
            let e0 = &self.verts[i];
            let e1 = &self.verts[(i + 1) % 3];
            let fa = &o * pr.orient2d_value(e0, e1, s.a());
            let fb = &o * pr.orient2d_value(e0, e1, s.b());
            let (sa, sb) = (fa.sign(), fb.sign());
            if sa == Sign::Negative && sb == Sign::Negative {
                return SegTriClass::Disjoint;
            }
            if sa != Sign::Negative && sb != Sign::Negative {
                continue;
            }
            let tc = &fa / &(&fa - &fb);
            if sa == Sign::Negative {
                lo = lo.max(tc);
            } else {
                hi = hi.min(tc);
            }
            if lo > hi {
                return SegTriClass::Disjoint;
            }
        }
        let from = s.point_at(&lo);
        if lo == hi {
            return SegTriClass::BoundaryTouch {
                contact: Contact::Point { point: from },
            };
        }
        let to = s.point_at(&hi);
        let mid = ExactPoint::midpoint(&from, &to);
        if self.locate_coplanar(&mid) == TriLocation::Interior {
            SegTriClass::CoplanarOverlap { from, to }
        } else {
            SegTriClass::BoundaryTouch {
                contact: Contact::Subsegment { from, to },
            }
        }
    }
}

/// Classify a segment against a closed triangle in exact arithmetic.
pub fn segment_triangle_classify(s: &Segment, t: &Triangle) -> SegTriClass {
    let da = t.plane_value(s.a());
    let db = t.plane_value(s.b());
    let (sa, sb) = (da.sign(), db.sign());
    if sa == sb {
        if sa.is_zero() {
            return t.clip_coplanar(s);
        }
        return SegTriClass::Disjoint;
    }
    let x = if sa.is_zero() {
        s.a().clone()
    } else if sb.is_zero() {
        s.b().clone()
    } else {
        s.point_at(&(&da / &(&da - &db)))
    };
    match t.locate_coplanar(&x) {
        TriLocation::Outside => SegTriClass::Disjoint,
        TriLocation::Interior => SegTriClass::InteriorCross { point: x },
        _ => SegTriClass::BoundaryTouch {
            contact: Contact::Point { point: x },
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64, z: i64) -> ExactPoint {
        ExactPoint::from_ints(x, y, z)
    }

    fn tri() -> Triangle {
        Triangle::new(p(-1, -1, 0), p(2, -1, 0), p(-1, 2, 0)).unwrap()
    }

    #[test]
    fn transversal_through_interior() {
        let s = Segment::new(p(0, 0, -1), p(0, 0, 1)).unwrap();
        assert_eq!(
            segment_triangle_classify(&s, &tri()),
            SegTriClass::InteriorCross { point: p(0, 0, 0) }
        );
    }

    #[test]
    fn far_outside() {
        let s = Segment::new(p(5, 5, -1), p(5, 5, 1)).unwrap();
        assert_eq!(segment_triangle_classify(&s, &tri()), SegTriClass::Disjoint);
    }

    #[test]
    fn through_vertex() {
        let s = Segment::new(p(-1, -1, -1), p(-1, -1, 1)).unwrap();
        assert_eq!(
            segment_triangle_classify(&s, &tri()),
            SegTriClass::BoundaryTouch {
                contact: Contact::Point { point: p(-1, -1, 0) }
            }
        );
    }

    #[test]
    fn coplanar_cases() {
        let t = tri();
        let through = Segment::new(p(-3, 0, 0), p(3, 0, 0)).unwrap();
        assert_eq!(
            segment_triangle_classify(&through, &t),
            SegTriClass::CoplanarOverlap {
                from: p(-1, 0, 0),
                to: p(1, 0, 0)
            }
        );
        let along_edge = Segment::new(p(-3, -1, 0), p(0, -1, 0)).unwrap();
        assert_eq!(
            segment_triangle_classify(&along_edge, &t),
            SegTriClass::BoundaryTouch {
                contact: Contact::Subsegment {
                    from: p(-1, -1, 0),
                    to: p(0, -1, 0)
                }
            }
        );
        let grazing = Segment::new(p(-3, 0, 0), p(-1, 2, 0)).unwrap();
        assert_eq!(
            segment_triangle_classify(&grazing, &t),
            SegTriClass::BoundaryTouch {
                contact: Contact::Point { point: p(-1, 2, 0) }
            }
        );
        let away = Segment::new(p(3, 3, 0), p(4, 3, 0)).unwrap();
        assert_eq!(segment_triangle_classify(&away, &t), SegTriClass::Disjoint);
    }

    #[test]
    fn endpoint_on_edge() {
        let s = Segment::new(p(0, -1, 0), p(0, -1, 4)).unwrap();
        assert_eq!(
            segment_triangle_classify(&s, &tri()),
            SegTriClass::BoundaryTouch {
                contact: Contact::Point { point: p(0, -1, 0) }
            }
        );
    }

    #[test]
    fn degenerate_rejected() {
        assert!(Triangle::new(p(0, 0, 0), p(1, 1, 1), p(2, 2, 2)).is_err());
    }

    #[test]
    fn locate_features() {
        let t = tri();
        assert_eq!(t.locate(&p(0, 0, 0)), TriLocation::Interior);
        assert_eq!(t.locate(&p(0, -1, 0)), TriLocation::Edge(0));
        assert_eq!(t.locate(&p(2, -1, 0)), TriLocation::Vertex(1));
        assert_eq!(t.locate(&p(0, 0, 1)), TriLocation::Outside);
    }
}
