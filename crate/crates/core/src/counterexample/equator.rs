use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::config::{GridSpec, SceneConfig};
use super::grid::{placement_grid, upper_hemisphere_samples};
use super::scene::Scene;
use super::star::SegmentVerdict;
use crate::disks::{disk_segment_classify, DiskSegClass};
use crate::exact_geom::{ExactPoint, Segment};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterPair {
    pub x: ExactPoint,
    pub p: ExactPoint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquatorReport {
    pub grid: GridSpec,
    pub placements: usize,
    /// Placements whose segment to c meets delta at most in c.
    pub premise_count: usize,
    /// Placements where the segment to c grazes delta elsewhere.
    pub premise_degenerate: usize,
    pub samples: usize,
    pub pairs_checked: usize,
    /// Pairs where the segment only touches delta's boundary.
    pub degenerate_pairs: usize,
    pub counter_pairs: Vec<CounterPair>,
    /// True when no placement satisfied the premise.
    pub vacuous: bool,
}

impl EquatorReport {
    pub fn holds(&self) -> bool {
        self.counter_pairs.is_empty()
    }
}

enum PairOutcome {
    Interior,
    Degenerate,
    Counter,
}

/// For every grid placement x whose segment to c avoids delta (apart from c
/// itself) and every sample p on the sphere above the horizontal plane
/// through the center, check that px meets the interior of delta.
pub fn check_equator_claim(scene: &Scene, cfg: &SceneConfig, grid: Option<&GridSpec>, sample_count: usize) -> EquatorReport {
    let grid = grid.unwrap_or(&cfg.grid).clone();
    let placements = placement_grid(cfg, &grid);
    let samples = upper_hemisphere_samples(cfg, sample_count);
    let premise: Vec<Option<bool>> = placements
        .par_iter()
        .map(|pl| {
            if pl.x == scene.v {
                return None;
            }
            match super::star::segment_verdict(&scene.delta, &pl.x, &scene.c) {
                SegmentVerdict::Clear => Some(true),
                SegmentVerdict::Blocked { .. } => Some(false),
                SegmentVerdict::Grazing { .. } => None,
            }
        })
        .collect();
    let premise_degenerate = premise.iter().filter(|p| p.is_none()).count();
    let xs: Vec<&ExactPoint> = placements
        .iter()
        .zip(&premise)
        .filter(|(_, ok)| **ok == Some(true))
        .map(|(pl, _)| &pl.x)
        .collect();
    let jobs: Vec<(&ExactPoint, &ExactPoint)> = xs.iter().flat_map(|x| samples.iter().map(move |p| (*x, p))).collect();
    let outcomes: Vec<PairOutcome> = jobs
        .par_iter()
        .map(|(x, p)| {
            let seg = Segment::new((*x).clone(), (*p).clone()).expect("sample differs from placement");
            match disk_segment_classify(&scene.delta, &seg) {
                DiskSegClass::MeetsInterior { .. } => PairOutcome::Interior,
                DiskSegClass::BoundaryOnly { .. } => PairOutcome::Degenerate,
                DiskSegClass::Disjoint => PairOutcome::Counter,
            }
        })
        .collect();
    let mut counter_pairs = Vec::new();
    let mut degenerate_pairs = 0;
    for ((x, p), o) in jobs.iter().zip(&outcomes) {
        match o {
            PairOutcome::Interior => {}
            PairOutcome::Degenerate => degenerate_pairs += 1,
            PairOutcome::Counter => counter_pairs.push(CounterPair {
                x: (*x).clone(),
                p: (*p).clone(),
            }),
        }
    }
    EquatorReport {
        grid,
        placements: placements.len(),
        premise_count: xs.len(),
        premise_degenerate,
        samples: samples.len(),
        pairs_checked: jobs.len() - degenerate_pairs,
        degenerate_pairs,
        counter_pairs,
        vacuous: xs.is_empty(),
    }
}
