use serde::{Deserialize, Serialize};

use super::DiskError;
use crate::exact_geom::{
    segment_triangle_classify, Contact, ExactPoint, HomPoint, SegTriClass, Sign, TriLocation,
    Triangle,
};

/// PL disk obtained by coning `apex` over the polyline `rim`: the triangles
/// `(apex, rim[i], rim[i+1])`.
///
/// The boundary is the rim together with the first and last spokes; the
/// interior is the union of the open triangles and the open inner spokes.
#[derive(Debug, Clone)]
pub struct FanDisk {
    apex: ExactPoint,
    rim: Vec<ExactPoint>,
    triangles: Vec<Triangle>,
}

impl PartialEq for FanDisk {
    fn eq(&self, other: &Self) -> bool {
        self.apex == other.apex && self.rim == other.rim
    }
}

impl Eq for FanDisk {}

/// A cell of the fan's stratification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "index", rename_all = "kebab-case")]
pub enum DiskFeature {
    Apex,
    RimVertex(usize),
    /// Open rim segment `rim[i] rim[i+1]`.
    RimEdge(usize),
    /// Open spoke `apex rim[i]`.
    Spoke(usize),
    /// Open triangle `i`.
    Face(usize),
}

impl FanDisk {
    /// Cone `apex` over `rim`, validating non-degeneracy and embeddedness.
    pub fn cone(apex: ExactPoint, rim: Vec<ExactPoint>) -> Result<FanDisk, DiskError> {
        if rim.len() < 2 {
            return Err(DiskError::RimTooShort(rim.len()));
        }
        for (i, p) in rim.iter().enumerate() {
            if p == &apex {
                return Err(DiskError::RimHitsApex(i));
            }
        }
        let mut sorted: Vec<(&ExactPoint, usize)> = rim.iter().zip(0..).collect();
        sorted.sort();
        for w in sorted.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(DiskError::RepeatedRimPoint(w[0].1.min(w[1].1), w[0].1.max(w[1].1)));
            }
        }
        let mut triangles = Vec::with_capacity(rim.len() - 1);
        for i in 0..rim.len() - 1 {
            let t = Triangle::new(apex.clone(), rim[i].clone(), rim[i + 1].clone())
                .map_err(|_| DiskError::DegenerateTriangle(i))?;
            triangles.push(t);
        }
        let disk = FanDisk {
            apex,
            rim,
            triangles,
        };
        disk.check_embedded()?;
        Ok(disk)
    }

    pub fn apex(&self) -> &ExactPoint {
        &self.apex
    }

    pub fn rim(&self) -> &[ExactPoint] {
        &self.rim
    }

    pub fn triangles(&self) -> &[Triangle] {
        &self.triangles
    }

    pub fn triangle_count(&self) -> usize {
        self.triangles.len()
    }

    fn last_rim(&self) -> usize {
        self.rim.len() - 1
    }

    /// Boundary as a closed polygon: apex, rim[0], ..., rim[last].
    pub fn boundary_polygon(&self) -> Vec<ExactPoint> {
        std::iter::once(self.apex.clone())
            .chain(self.rim.iter().cloned())
            .collect()
    }

    pub fn is_interior(&self, f: DiskFeature) -> bool {
        match f {
            DiskFeature::Face(_) => true,
            DiskFeature::Spoke(i) => i > 0 && i < self.last_rim(),
            _ => false,
        }
    }

    /// Translate a location inside triangle `i` into a disk feature.
    pub fn feature_in_triangle(&self, i: usize, loc: TriLocation) -> Option<DiskFeature> {
        Some(match loc {
            TriLocation::Outside => return None,
            TriLocation::Interior => DiskFeature::Face(i),
            TriLocation::Vertex(0) => DiskFeature::Apex,
            TriLocation::Vertex(1) => DiskFeature::RimVertex(i),
            TriLocation::Vertex(_) => DiskFeature::RimVertex(i + 1),
            TriLocation::Edge(0) => DiskFeature::Spoke(i),
            TriLocation::Edge(1) => DiskFeature::RimEdge(i),
            TriLocation::Edge(_) => DiskFeature::Spoke(i + 1),
        })
    }

    /// The feature containing `p`, or `None` if `p` is off the disk.
    pub fn locate(&self, p: &ExactPoint) -> Option<DiskFeature> {
        if p == &self.apex {
            return Some(DiskFeature::Apex);
        }
        let hp = HomPoint::from(p);
        for (i, t) in self.triangles.iter().enumerate() {
            if !t.side_hom(&hp).is_zero() {
                continue;
            }
            if let Some(f) = self.feature_in_triangle(i, t.locate_coplanar(p)) {
                return Some(f);
            }
        }
        None
    }

    pub fn in_interior(&self, p: &ExactPoint) -> bool {
        self.locate(p).is_some_and(|f| self.is_interior(f))
    }

    fn check_embedded(&self) -> Result<(), DiskError> {
        let n = self.triangles.len();
        let rim_hom: Vec<HomPoint> = self.rim.iter().map(HomPoint::from).collect();
        for i in 0..n {
            for j in i + 1..n {
                let allowed = if j == i + 1 {
                    Allowed::Spoke(&self.apex, &self.rim[j])
                } else {
                    let ti = &self.triangles[i];
                    let tj = &self.triangles[j];
                    // A triangle whose two rim corners lie strictly on one side of
                    // the other's plane meets that plane only at the apex.
                    if strictly_one_side(ti, &rim_hom[j], &rim_hom[j + 1])
                        || strictly_one_side(tj, &rim_hom[i], &rim_hom[i + 1])
                    {
                        continue;
                    }
                    Allowed::Point(&self.apex)
                };
                if let Some(witness) =
                    contact_outside(&self.triangles[i], &self.triangles[j], &allowed)
                {
                    return Err(DiskError::SelfIntersecting {
                        first: i,
                        second: j,
                        witness,
                    });
                }
            }
        }
        Ok(())
    }
}

fn strictly_one_side(t: &Triangle, a: &HomPoint, b: &HomPoint) -> bool {
    let sa = t.side_hom(a);
    !sa.is_zero() && sa == t.side_hom(b)
}

enum Allowed<'a> {
    Point(&'a ExactPoint),
    Spoke(&'a ExactPoint, &'a ExactPoint),
}

impl Allowed<'_> {
    fn admits(&self, p: &ExactPoint) -> bool {
        match self {
            Allowed::Point(q) => p == *q,
            Allowed::Spoke(a, b) => crate::exact_geom::Segment::new((*a).clone(), (*b).clone())
                .map(|s| s.locate_point(p).is_on())
                .unwrap_or(false),
        }
    }
}

/// Extreme points of the pairwise intersection, as contact points of every
/// edge of one triangle with the other.
pub(crate) fn triangle_pair_contacts(t1: &Triangle, t2: &Triangle) -> Vec<ExactPoint> {
    let mut out = Vec::new();
    for (edges_of, other) in [(t1, t2), (t2, t1)] {
        for k in 0..3 {
            match segment_triangle_classify(&edges_of.edge(k), other) {
                SegTriClass::Disjoint => {}
                SegTriClass::InteriorCross { point }
                | SegTriClass::BoundaryTouch {
                    contact: Contact::Point { point },
                } => out.push(point),
                SegTriClass::BoundaryTouch {
                    contact: Contact::Subsegment { from, to },
                }
                | SegTriClass::CoplanarOverlap { from, to } => {
                    out.push(from);
                    out.push(to);
                }
            }
        }
    }
    out
}

fn contact_outside(t1: &Triangle, t2: &Triangle, allowed: &Allowed) -> Option<ExactPoint> {
    triangle_pair_contacts(t1, t2)
        .into_iter()
        .find(|p| !allowed.admits(p))
}

/// Quick exclusion: true when `t2` cannot meet `t1` beyond at most one of
/// `t2`'s own vertices lying on `t1`'s plane. Returns the candidate vertex.
pub(crate) fn plane_screen(t1: &Triangle, t2_hom: &[HomPoint; 3]) -> PlaneScreen {
    let signs: Vec<Sign> = t2_hom.iter().map(|h| t1.side_hom(h)).collect();
    let pos = signs.iter().filter(|s| **s == Sign::Positive).count();
    let neg = signs.iter().filter(|s| **s == Sign::Negative).count();
    let zeros: Vec<usize> = (0..3).filter(|&k| signs[k].is_zero()).collect();
    if pos == 3 || neg == 3 {
        PlaneScreen::Separated
    } else if zeros.len() == 1 && (pos == 2 || neg == 2) {
        PlaneScreen::OnlyVertex(zeros[0])
    } else {
        PlaneScreen::Straddles
    }
}

pub(crate) enum PlaneScreen {
    Separated,
    OnlyVertex(usize),
    Straddles,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_geom::{segment_segment_classify, SegSegClass, Segment};

    fn p(x: i64, y: i64, z: i64) -> ExactPoint {
        ExactPoint::from_ints(x, y, z)
    }

    #[test]
    fn triangle_count_matches_rim() {
        let d = FanDisk::cone(p(0, 0, 0), vec![p(1, 0, 0), p(0, 1, 0), p(0, 0, 1)]).unwrap();
        assert_eq!(d.triangle_count(), 2);
    }

    #[test]
    fn chord_through_apex_is_degenerate() {
        let err = FanDisk::cone(p(0, 0, 0), vec![p(1, 0, 0), p(-1, 0, 0)]).unwrap_err();
        assert_eq!(err, DiskError::DegenerateTriangle(0));
    }

    /// Six rim points on the sphere of radius 3; chords 0-1 and 2-3 form a
    /// bow-tie in the plane x = 1 crossing at (1, 0, 0), so the fan is a
    /// figure-eight.
    #[test]
    fn figure_eight_rim_is_rejected() {
        let rim = vec![
            p(1, -2, 2),
            p(1, 2, -2),
            p(1, 2, 2),
            p(1, -2, -2),
            p(-1, -2, -2),
            p(-2, -1, 2),
        ];
        let s = Segment::new(rim[0].clone(), rim[1].clone()).unwrap();
        let t = Segment::new(rim[2].clone(), rim[3].clone()).unwrap();
        assert_eq!(
            segment_segment_classify(&s, &t),
            SegSegClass::InteriorCross { point: p(1, 0, 0) }
        );
        let err = FanDisk::cone(p(0, 0, 0), rim).unwrap_err();
        assert!(matches!(err, DiskError::SelfIntersecting { .. }), "{err:?}");
    }

    #[test]
    fn folding_adjacent_triangles_are_rejected() {
        // third rim point folds back over the first triangle
        let err = FanDisk::cone(p(0, 0, 0), vec![p(2, 0, 0), p(0, 2, 0), p(1, 0, 0)]).unwrap_err();
        assert!(matches!(err, DiskError::SelfIntersecting { first: 0, second: 1, .. }));
    }

    #[test]
    fn locate_features() {
        let d = FanDisk::cone(p(0, 0, 0), vec![p(2, 0, 0), p(0, 2, 0), p(-2, 0, 1)]).unwrap();
        assert_eq!(d.locate(&p(0, 0, 0)), Some(DiskFeature::Apex));
        assert_eq!(d.locate(&p(1, 0, 0)), Some(DiskFeature::Spoke(0)));
        assert_eq!(d.locate(&p(0, 1, 0)), Some(DiskFeature::Spoke(1)));
        assert_eq!(d.locate(&p(1, 1, 0)), Some(DiskFeature::RimEdge(0)));
        assert_eq!(d.locate(&p(0, 2, 0)), Some(DiskFeature::RimVertex(1)));
        assert!(d.in_interior(&p(0, 1, 0)));
        assert!(!d.in_interior(&p(1, 0, 0)));
        assert_eq!(
            d.locate(&ExactPoint::from_ratios(1, 1, 0, 2)),
            Some(DiskFeature::Face(0))
        );
        assert_eq!(d.locate(&p(5, 5, 5)), None);
    }
}
