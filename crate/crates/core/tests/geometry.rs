mod common;

use common::{fan_interior_oracle, orientation_oracle, FanVerdict};
use paneled_core::disks::{disk_segment_classify, DiskSegClass, FanDisk};
use paneled_core::exact_geom::filter::{approx, orient3d_filtered};
use paneled_core::exact_geom::{
    orient3d, segment_segment_classify, segment_triangle_classify, ExactPoint, SegSegClass, SegTriClass, Segment,
    Triangle,
};
use proptest::prelude::*;

fn point(span: i64) -> impl Strategy<Value = ExactPoint> {
    (-span..=span, -span..=span, -span..=span).prop_map(|(x, y, z)| ExactPoint::from_ints(x, y, z))
}

fn fine_point() -> impl Strategy<Value = ExactPoint> {
    (-40i64..=40, -40i64..=40, -40i64..=40, 1i64..=7).prop_map(|(x, y, z, d)| ExactPoint::from_ratios(x, y, z, d))
}

/// Coarse discriminant of a segment/triangle result that is stable under
/// relabelling the inputs.
fn kind(c: &SegTriClass) -> (u8, Option<ExactPoint>) {
    match c {
        SegTriClass::Disjoint => (0, None),
        SegTriClass::BoundaryTouch { .. } => (1, None),
        SegTriClass::InteriorCross { point } => (2, Some(point.clone())),
        SegTriClass::CoplanarOverlap { .. } => (3, None),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn orient3d_matches_determinant_oracle(a in fine_point(), b in fine_point(), c in fine_point(), d in fine_point()) {
        prop_assert_eq!(orient3d(&a, &b, &c, &d).as_i32(), orientation_oracle(&a, &b, &c, &d));
    }

    #[test]
    fn orient3d_is_antisymmetric(a in point(3), b in point(3), c in point(3), d in point(3)) {
        let s = orient3d(&a, &b, &c, &d);
        prop_assert_eq!(orient3d(&b, &a, &c, &d), s.flip());
        prop_assert_eq!(orient3d(&a, &c, &b, &d), s.flip());
        prop_assert_eq!(orient3d(&a, &b, &d, &c), s.flip());
        prop_assert_eq!(orient3d(&b, &c, &a, &d), s);
    }

    #[test]
    fn filtered_orientation_never_disagrees(a in fine_point(), b in fine_point(), c in fine_point(), d in point(2)) {
        let exact = orient3d(&a, &b, &c, &d);
        if let Some(s) = orient3d_filtered(&approx(&a), &approx(&b), &approx(&c), &approx(&d)) {
            prop_assert_eq!(s, exact);
        }
    }

    #[test]
    fn segment_pairs_are_symmetric(a in point(3), b in point(3), c in point(3), d in point(3)) {
        prop_assume!(a != b && c != d);
        let s = Segment::new(a, b).unwrap();
        let t = Segment::new(c, d).unwrap();
        let st = segment_segment_classify(&s, &t);
        prop_assert_eq!(st.is_disjoint(), segment_segment_classify(&t, &s).is_disjoint());
        prop_assert_eq!(st.is_disjoint(), segment_segment_classify(&s.reversed(), &t).is_disjoint());
        if let SegSegClass::InteriorCross { point } = &st {
            let back = segment_segment_classify(&t.reversed(), &s);
            prop_assert_eq!(back, SegSegClass::InteriorCross { point: point.clone() });
        }
    }

    #[test]
    fn segment_triangle_is_invariant_under_relabelling(
        s0 in point(3), s1 in point(3), p in point(3), q in point(3), r in point(3), shift in point(50),
    ) {
        prop_assume!(s0 != s1);
        let Ok(t) = Triangle::new(p.clone(), q.clone(), r.clone()) else { return Ok(()) };
        let seg = Segment::new(s0.clone(), s1.clone()).unwrap();
        let base = kind(&segment_triangle_classify(&seg, &t));
        let permuted = Triangle::new(r.clone(), p.clone(), q.clone()).unwrap();
        let mirrored = Triangle::new(q.clone(), p.clone(), r.clone()).unwrap();
        prop_assert_eq!(&kind(&segment_triangle_classify(&seg.reversed(), &t)), &base);
        prop_assert_eq!(&kind(&segment_triangle_classify(&seg, &permuted)), &base);
        prop_assert_eq!(&kind(&segment_triangle_classify(&seg, &mirrored)), &base);

        let moved = Triangle::new(p.plus(&shift), q.plus(&shift), r.plus(&shift)).unwrap();
        let moved_seg = Segment::new(s0.plus(&shift), s1.plus(&shift)).unwrap();
        let (k, pt) = kind(&segment_triangle_classify(&moved_seg, &moved));
        prop_assert_eq!(k, base.0);
        prop_assert_eq!(pt, base.1.map(|x| x.plus(&shift)));
    }

    #[test]
    fn fan_classification_matches_oracle(
        apex in point(4),
        rim in prop::collection::vec(point(4), 2..6),
        s0 in fine_point(),
        s1 in fine_point(),
    ) {
        prop_assume!(s0 != s1);
        let Ok(d) = FanDisk::cone(apex.clone(), rim.clone()) else { return Ok(()) };
        let seg = Segment::new(s0.clone(), s1.clone()).unwrap();
        let got = disk_segment_classify(&d, &seg);
        match fan_interior_oracle(&apex, &rim, &s0, &s1) {
            FanVerdict::Interior => prop_assert!(got.meets_interior(), "{got:?}"),
            FanVerdict::NotInterior => prop_assert!(!got.meets_interior(), "{got:?}"),
            FanVerdict::Undecided => {}
        }
        if let DiskSegClass::MeetsInterior { point, .. } = &got {
            prop_assert!(d.in_interior(point));
            prop_assert!(seg.locate_point(point).is_on());
        }
    }
}

#[test]
fn segment_grazing_fan_rim_is_boundary_only() {
    let p = ExactPoint::from_ints;
    let d = FanDisk::cone(p(0, 0, 0), vec![p(4, 0, 0), p(4, 4, 0), p(0, 4, 0)]).unwrap();
    let along_rim = Segment::new(p(4, 1, -1), p(4, 1, 1)).unwrap();
    assert!(matches!(disk_segment_classify(&d, &along_rim), DiskSegClass::BoundaryOnly { .. }));
    let inner_spoke = Segment::new(p(2, 2, -1), p(2, 2, 1)).unwrap();
    assert!(disk_segment_classify(&d, &inner_spoke).meets_interior());
    let lying_in_plane = Segment::new(p(1, 1, 0), p(3, 2, 0)).unwrap();
    assert!(disk_segment_classify(&d, &lying_in_plane).meets_interior());
}
