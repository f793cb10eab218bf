use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::fan::{plane_screen, triangle_pair_contacts, DiskFeature, FanDisk, PlaneScreen};
use crate::exact_geom::filter::{approx, segment_triangle_quick, QuickSegTri};
use crate::exact_geom::{
    segment_triangle_classify, Contact, ExactPoint, HomPoint, SegTriClass, Segment, Sign,
};

/// A boundary feature of a disk together with the part of it a segment meets.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FeatureContact {
    pub feature: DiskFeature,
    pub contact: Contact,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum DiskSegClass {
    Disjoint,
    /// The segment meets the disk, but only in its boundary.
    BoundaryOnly { contacts: Vec<FeatureContact> },
    /// The segment meets the disk's interior; `feature` is the interior cell
    /// (open face or open inner spoke) containing `point`.
    MeetsInterior {
        point: ExactPoint,
        feature: DiskFeature,
    },
}

impl DiskSegClass {
    pub fn meets_interior(&self) -> bool {
        matches!(self, DiskSegClass::MeetsInterior { .. })
    }
}

/// Classify a segment against a fan disk, aggregating per-triangle results so
/// that a crossing through an inner spoke counts as interior and touches on
/// a shared spoke are reported once.
pub fn disk_segment_classify(d: &FanDisk, s: &Segment) -> DiskSegClass {
    let ha = HomPoint::from(s.a());
    let hb = HomPoint::from(s.b());
    let (fa, fb) = (approx(s.a()), approx(s.b()));
    let mut contacts = BTreeSet::new();
    for (i, t) in d.triangles().iter().enumerate() {
        match segment_triangle_quick(&fa, &fb, t.approx()) {
            Some(QuickSegTri::Disjoint) => continue,
            Some(QuickSegTri::Crosses) => {
                if let SegTriClass::InteriorCross { point } = segment_triangle_classify(s, t) {
                    return DiskSegClass::MeetsInterior {
                        point,
                        feature: DiskFeature::Face(i),
                    };
                }
                unreachable!("filtered crossing not confirmed exactly");
            }
            None => {}
        }
        let sa = t.side_hom(&ha);
        if sa != Sign::Zero && sa == t.side_hom(&hb) {
            continue;
        }
        match segment_triangle_classify(s, t) {
            SegTriClass::Disjoint => {}
            SegTriClass::InteriorCross { point } => {
                return DiskSegClass::MeetsInterior {
                    point,
                    feature: DiskFeature::Face(i),
                }
            }
            SegTriClass::CoplanarOverlap { from, to } => {
                return DiskSegClass::MeetsInterior {
                    point: ExactPoint::midpoint(&from, &to),
                    feature: DiskFeature::Face(i),
                }
            }
            SegTriClass::BoundaryTouch { contact } => {
                let probe = contact.witness();
                let feature = d
                    .feature_in_triangle(i, t.locate_coplanar(&probe))
                    .expect("contact lies on the triangle");
                if d.is_interior(feature) {
                    return DiskSegClass::MeetsInterior {
                        point: probe,
                        feature,
                    };
                }
                contacts.insert(FeatureContact { feature, contact });
            }
        }
    }
    if contacts.is_empty() {
        DiskSegClass::Disjoint
    } else {
        DiskSegClass::BoundaryOnly {
            contacts: contacts.into_iter().collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum DiskDiskClass {
    Disjoint,
    SinglePoint {
        point: ExactPoint,
        on_boundary_of_both: bool,
    },
    /// The intersection has more than one point; the two least contact
    /// points are reported.
    LargerIntersection {
        witness: ExactPoint,
        other: ExactPoint,
    },
}

/// Exact classification of `d1 ∩ d2` by exhaustive triangle-pair tests.
pub fn disk_disk_classify(d1: &FanDisk, d2: &FanDisk) -> DiskDiskClass {
    let hom = |d: &FanDisk| -> Vec<[HomPoint; 3]> {
        d.triangles()
            .iter()
            .map(|t| {
                let v = t.vertices();
                [HomPoint::from(&v[0]), HomPoint::from(&v[1]), HomPoint::from(&v[2])]
            })
            .collect()
    };
    let h1 = hom(d1);
    let h2 = hom(d2);
    let mut points = BTreeSet::new();
    for (i, t1) in d1.triangles().iter().enumerate() {
        for (j, t2) in d2.triangles().iter().enumerate() {
            match (plane_screen(t1, &h2[j]), plane_screen(t2, &h1[i])) {
                (PlaneScreen::Separated, _) | (_, PlaneScreen::Separated) => continue,
                (PlaneScreen::OnlyVertex(k), _) => {
                    let v = t2.vertex(k);
                    if t1.locate_coplanar(v) != crate::exact_geom::TriLocation::Outside {
                        points.insert(v.clone());
                    }
                    continue;
                }
                (_, PlaneScreen::OnlyVertex(k)) => {
                    let v = t1.vertex(k);
                    if t2.locate_coplanar(v) != crate::exact_geom::TriLocation::Outside {
                        points.insert(v.clone());
                    }
                    continue;
                }
                _ => {}
            }
            points.extend(triangle_pair_contacts(t1, t2));
        }
    }
    let mut it = points.into_iter();
    match (it.next(), it.next()) {
        (None, _) => DiskDiskClass::Disjoint,
        (Some(point), None) => {
            let on_boundary_of_both = !d1.in_interior(&point) && !d2.in_interior(&point);
            DiskDiskClass::SinglePoint {
                point,
                on_boundary_of_both,
            }
        }
        (Some(witness), Some(other)) => DiskDiskClass::LargerIntersection { witness, other },
    }
}
