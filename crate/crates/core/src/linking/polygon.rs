use serde::{Deserialize, Serialize};

use super::LinkError;
use crate::exact_geom::{segment_segment_classify, ExactPoint, SegSegClass, Segment};

/// Simple closed polygon; the closing edge from the last point back to the
/// first is implicit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosedPolygon {
    points: Vec<ExactPoint>,
    #[serde(skip)]
    segments: Vec<Segment>,
}

impl ClosedPolygon {
    pub fn new(points: Vec<ExactPoint>) -> Result<ClosedPolygon, LinkError> {
        let n = points.len();
        if n < 3 {
            return Err(LinkError::TooFewPoints(n));
        }
        let mut segments = Vec::with_capacity(n);
        for i in 0..n {
            let seg = Segment::new(points[i].clone(), points[(i + 1) % n].clone())
                .map_err(|_| LinkError::RepeatedPoint(i))?;
            segments.push(seg);
        }
        for i in 0..n {
            for j in i + 1..n {
                let class = segment_segment_classify(&segments[i], &segments[j]);
                let ok = if j == i + 1 || (i == 0 && j == n - 1) {
                    let shared = if j == i + 1 { &points[j] } else { &points[0] };
                    match &class {
                        SegSegClass::EndpointTouch { point } => point == shared,
                        _ => false,
                    }
                } else {
                    class.is_disjoint()
                };
                if !ok {
                    return Err(LinkError::NotSimple { first: i, second: j });
                }
            }
        }
        Ok(ClosedPolygon { points, segments })
    }

    pub fn points(&self) -> &[ExactPoint] {
        &self.points
    }

    /// Edge `i` runs from point `i` to point `i + 1` (cyclically).
    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn reversed(&self) -> ClosedPolygon {
        let mut points = self.points.clone();
        points.reverse();
        ClosedPolygon::new(points).expect("reversal keeps a polygon simple")
    }

    pub fn centroid(&self) -> ExactPoint {
        let mut sum = ExactPoint::origin();
        for p in &self.points {
            sum = sum.plus(p);
        }
        sum.scaled(&crate::exact_geom::ExactScalar::from_int(self.points.len() as i64).recip().unwrap())
    }
}

impl<'de> Deserialize<'de> for ClosedPolygon {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            points: Vec<ExactPoint>,
        }
        let raw = Raw::deserialize(d)?;
        ClosedPolygon::new(raw.points).map_err(serde::de::Error::custom)
    }
}

/// Fail with `CurvesIntersect` if the two polygons share a point.
pub(crate) fn ensure_disjoint(a: &ClosedPolygon, b: &ClosedPolygon) -> Result<(), LinkError> {
    for s in a.segments() {
        for t in b.segments() {
            match segment_segment_classify(s, t) {
                SegSegClass::Disjoint => {}
                SegSegClass::EndpointTouch { point } | SegSegClass::InteriorCross { point } => {
                    return Err(LinkError::CurvesIntersect { point })
                }
                SegSegClass::CollinearOverlap { from, .. } => {
                    return Err(LinkError::CurvesIntersect { point: from })
                }
            }
        }
    }
    Ok(())
}
