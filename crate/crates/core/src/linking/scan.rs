use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::cone::find_generic_apex;
use super::polygon::ClosedPolygon;
use super::projection::find_generic_direction;
use super::LinkError;
use crate::spatial_graph::{enumerate_cycles, validate_embedding, LinearEmbedding, Validity, VertexId};

/// Attempts made when searching for a generic direction or apex.
const SEARCH_LIMIT: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkedPair {
    pub cycle_a: Vec<VertexId>,
    pub cycle_b: Vec<VertexId>,
    pub linking_number: i64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkReport {
    pub pairs: Vec<LinkedPair>,
}

impl LinkReport {
    pub fn linked(&self) -> impl Iterator<Item = &LinkedPair> {
        self.pairs.iter().filter(|p| p.linking_number != 0)
    }
}

/// Linking number by both methods; disagreement is an error.
pub fn cross_checked_linking_number(a: &ClosedPolygon, b: &ClosedPolygon) -> Result<i64, LinkError> {
    let (_, by_projection) = find_generic_direction(a, b, SEARCH_LIMIT)?;
    let (_, by_cone) = find_generic_apex(a, b, SEARCH_LIMIT)?;
    if by_projection != by_cone {
        return Err(LinkError::AlgorithmMismatch {
            projection: by_projection,
            cone: by_cone,
        });
    }
    Ok(by_projection)
}

/// Linking numbers of all vertex-disjoint pairs of simple cycles with at
/// most `max_cycle_len` vertices, in canonical cycle order.
pub fn pairwise_link_scan(e: &LinearEmbedding, max_cycle_len: usize) -> Result<LinkReport, LinkError> {
    if let Validity::Invalid { witness } = validate_embedding(e) {
        return Err(LinkError::InvalidEmbedding(Box::new(witness)));
    }
    let cycles = enumerate_cycles(e.graph(), max_cycle_len).cycles;
    let polygons: Vec<ClosedPolygon> = cycles
        .iter()
        .map(|c| ClosedPolygon::new(e.cycle_points(c).expect("cycle of the embedded graph")))
        .collect::<Result<_, _>>()?;
    let mut jobs = Vec::new();
    for i in 0..cycles.len() {
        for j in i + 1..cycles.len() {
            if cycles[i].iter().all(|v| !cycles[j].contains(v)) {
                jobs.push((i, j));
            }
        }
    }
    let pairs = jobs
        .par_iter()
        .map(|&(i, j)| {
            let lk = cross_checked_linking_number(&polygons[i], &polygons[j]).map_err(|err| match err {
                LinkError::AlgorithmMismatch { projection, cone } => LinkError::PairMismatch {
                    cycle_a: cycles[i].clone(),
                    cycle_b: cycles[j].clone(),
                    projection,
                    cone,
                },
                other => other,
            })?;
            Ok(LinkedPair {
                cycle_a: cycles[i].clone(),
                cycle_b: cycles[j].clone(),
                linking_number: lk,
            })
        })
        .collect::<Result<Vec<_>, LinkError>>()?;
    Ok(LinkReport { pairs })
}
