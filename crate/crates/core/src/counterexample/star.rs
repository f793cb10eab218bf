use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::config::{GridSpec, SceneConfig};
use super::grid::{placement_grid, Placement};
use super::scene::Scene;
use crate::disks::{disk_segment_classify, DiskFeature, DiskSegClass, FanDisk, FeatureContact};
use crate::exact_geom::{Contact, ExactPoint, ExactScalar, Segment};

/// The three anchors joined to a placement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Anchor {
    A1,
    B1,
    C,
}

pub const ANCHORS: [Anchor; 3] = [Anchor::A1, Anchor::B1, Anchor::C];

/// How the segment from a placement to an anchor meets a disk.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SegmentVerdict {
    /// Meets the disk's interior.
    Blocked { point: ExactPoint, feature: DiskFeature },
    /// Misses the disk, or touches it only at the anchor itself.
    Clear,
    /// Touches the disk's boundary somewhere other than the anchor.
    Grazing { contacts: Vec<FeatureContact> },
}

/// Classify segment `x`-`anchor` against `disk`, treating a contact solely
/// at the anchor as clear: the anchors lie on the rim, so every such
/// segment ends on the boundary.
pub fn segment_verdict(disk: &FanDisk, x: &ExactPoint, anchor: &ExactPoint) -> SegmentVerdict {
    let seg = Segment::new(x.clone(), anchor.clone()).expect("placement differs from the anchor");
    match disk_segment_classify(disk, &seg) {
        DiskSegClass::Disjoint => SegmentVerdict::Clear,
        DiskSegClass::MeetsInterior { point, feature } => SegmentVerdict::Blocked { point, feature },
        DiskSegClass::BoundaryOnly { contacts } => {
            let at_anchor = contacts
                .iter()
                .all(|fc| matches!(&fc.contact, Contact::Point { point } if point == anchor));
            if at_anchor {
                SegmentVerdict::Clear
            } else {
                SegmentVerdict::Grazing { contacts }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "kebab-case")]
pub enum SkipReason {
    CoincidesWithApex,
    BoundaryTouch { anchor: Anchor },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnchorStatus {
    pub anchor: Anchor,
    pub verdict: SegmentVerdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlacementRecord {
    pub shell: usize,
    pub dir: usize,
    pub x: ExactPoint,
    /// Empty when the placement coincides with the apex.
    pub segments: Vec<AnchorStatus>,
    pub blocked_count: u8,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub skipped: Option<SkipReason>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarSummary {
    pub epsilon: ExactScalar,
    pub n: usize,
    pub tol: ExactScalar,
    pub grid: GridSpec,
    pub placements: usize,
    pub evaluated: usize,
    pub skipped: usize,
    /// Number of evaluated placements with 0, 1, 2 and 3 blocked segments.
    pub histogram: [usize; 4],
    /// Minimum blocked count over evaluated placements.
    pub min_blocked: Option<u8>,
    /// Every evaluated placement attaining the minimum.
    pub witnesses: Vec<PlacementRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarReport {
    pub summary: StarSummary,
    pub placements: Vec<PlacementRecord>,
}

/// Classify the three segments from `x` to a1, b1 and c against gamma_prime.
pub fn classify_placement(scene: &Scene, shell: usize, dir: usize, x: &ExactPoint) -> PlacementRecord {
    if x == &scene.v {
        return PlacementRecord {
            shell,
            dir,
            x: x.clone(),
            segments: Vec::new(),
            blocked_count: 0,
            skipped: Some(SkipReason::CoincidesWithApex),
        };
    }
    let mut segments = Vec::with_capacity(3);
    let mut blocked_count = 0;
    let mut skipped = None;
    for anchor in ANCHORS {
        let target = match anchor {
            Anchor::A1 => scene.a1(),
            Anchor::B1 => scene.b1(),
            Anchor::C => &scene.c,
        };
        let verdict = segment_verdict(&scene.gamma_prime, x, target);
        match verdict {
            SegmentVerdict::Blocked { .. } => blocked_count += 1,
            SegmentVerdict::Grazing { .. } if skipped.is_none() => {
                skipped = Some(SkipReason::BoundaryTouch { anchor })
            }
            _ => {}
        }
        segments.push(AnchorStatus { anchor, verdict });
    }
    PlacementRecord {
        shell,
        dir,
        x: x.clone(),
        segments,
        blocked_count,
        skipped,
    }
}

/// Run the placement grid of `grid` (the config's own grid if `None`).
pub fn verify_star(scene: &Scene, cfg: &SceneConfig, grid: Option<&GridSpec>) -> StarReport {
    let grid = grid.unwrap_or(&cfg.grid);
    let grid_points = placement_grid(cfg, grid);
    verify_star_at(scene, cfg, grid, &grid_points)
}

/// Like `verify_star` but over explicit placements.
pub fn verify_star_at(scene: &Scene, cfg: &SceneConfig, grid: &GridSpec, placements: &[Placement]) -> StarReport {
    let records: Vec<PlacementRecord> = placements
        .par_iter()
        .map(|p| classify_placement(scene, p.shell, p.dir, &p.x))
        .collect();
    let mut histogram = [0usize; 4];
    let mut skipped = 0;
    for r in &records {
        if r.skipped.is_some() {
            skipped += 1;
        } else {
            histogram[r.blocked_count as usize] += 1;
        }
    }
    let min_blocked = histogram.iter().position(|&c| c > 0).map(|m| m as u8);
    let witnesses = match min_blocked {
        Some(m) => records
            .iter()
            .filter(|r| r.skipped.is_none() && r.blocked_count == m)
            .cloned()
            .collect(),
        None => Vec::new(),
    };
    StarReport {
        summary: StarSummary {
            epsilon: cfg.epsilon.clone(),
            n: cfg.n,
            tol: cfg.tol.clone(),
            grid: grid.clone(),
            placements: records.len(),
            evaluated: records.len() - skipped,
            skipped,
            histogram,
            min_blocked,
            witnesses,
        },
        placements: records,
    }
}
