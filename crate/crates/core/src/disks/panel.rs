use serde::{Deserialize, Serialize};

use super::classify::{disk_segment_classify, DiskSegClass};
use super::fan::{DiskFeature, FanDisk};
use super::PanelError;
use crate::exact_geom::{ExactPoint, OnSegment, Segment};
use crate::spatial_graph::{Edge, LinearEmbedding, VertexId};

/// A piece of an embedded graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", content = "id", rename_all = "kebab-case")]
pub enum GraphFeature {
    Vertex(VertexId),
    Edge(Edge),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum PanelCheck {
    Paneled,
    Violated {
        feature: GraphFeature,
        point: ExactPoint,
        disk_feature: DiskFeature,
    },
}

/// Check that `d` is a panel for `boundary_cycle` in `e`: its boundary is the
/// cycle's polygon and no vertex or edge of the embedding meets its interior.
/// Vertices are scanned before edges, each in canonical order; the first
/// offender is the witness.
pub fn panel_check(
    d: &FanDisk,
    e: &LinearEmbedding,
    boundary_cycle: &[VertexId],
) -> Result<PanelCheck, PanelError> {
    let g = e.graph();
    let n = boundary_cycle.len();
    if n < 3 {
        return Err(PanelError::NotACycle);
    }
    let mut seen = std::collections::BTreeSet::new();
    for (k, v) in boundary_cycle.iter().enumerate() {
        if !seen.insert(*v) || !g.has_edge(*v, boundary_cycle[(k + 1) % n]) {
            return Err(PanelError::NotACycle);
        }
    }
    let polygon = e.cycle_points(boundary_cycle).ok_or(PanelError::NotACycle)?;
    if !same_closed_polygon(&polygon, &d.boundary_polygon()) {
        return Err(PanelError::BoundaryMismatch);
    }

    for (v, pos) in e.positions() {
        if let Some(f) = d.locate(pos) {
            if d.is_interior(f) {
                return Ok(PanelCheck::Violated {
                    feature: GraphFeature::Vertex(*v),
                    point: pos.clone(),
                    disk_feature: f,
                });
            }
        }
    }
    for edge in g.edges() {
        let seg = e.edge_segment(edge).ok_or(PanelError::DegenerateEdge(edge))?;
        if let DiskSegClass::MeetsInterior { point, feature } = disk_segment_classify(d, &seg) {
            return Ok(PanelCheck::Violated {
                feature: GraphFeature::Edge(edge),
                point,
                disk_feature: feature,
            });
        }
    }
    Ok(PanelCheck::Paneled)
}

/// Drop repeated points and vertices that sit in the interior of the segment
/// joining their neighbours.
fn simplify_closed(points: &[ExactPoint]) -> Vec<ExactPoint> {
    let mut pts: Vec<ExactPoint> = points.to_vec();
    pts.dedup();
    while pts.len() > 1 && pts.first() == pts.last() {
        pts.pop();
    }
    loop {
        let n = pts.len();
        if n < 3 {
            return pts;
        }
        let straight = (0..n).find(|&i| {
            let prev = &pts[(i + n - 1) % n];
            let next = &pts[(i + 1) % n];
            Segment::new(prev.clone(), next.clone())
                .map(|s| s.locate_point(&pts[i]) == OnSegment::Interior)
                .unwrap_or(false)
        });
        match straight {
            Some(i) => {
                pts.remove(i);
            }
            None => return pts,
        }
    }
}

fn canonical_rotation(pts: &[ExactPoint]) -> Vec<ExactPoint> {
    let n = pts.len();
    let start = (0..n).min_by(|&a, &b| pts[a].cmp(&pts[b])).unwrap_or(0);
    let fwd: Vec<ExactPoint> = (0..n).map(|k| pts[(start + k) % n].clone()).collect();
    let bwd: Vec<ExactPoint> = (0..n).map(|k| pts[(start + n - k) % n].clone()).collect();
    fwd.min(bwd)
}

/// Equality of two closed polygons as point sets (up to rotation, reflection
/// and collinear subdivision).
pub fn same_closed_polygon(a: &[ExactPoint], b: &[ExactPoint]) -> bool {
    canonical_rotation(&simplify_closed(a)) == canonical_rotation(&simplify_closed(b))
}
