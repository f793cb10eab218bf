use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::graph::{Edge, SpatialGraph, VertexId};
use super::{EmbeddingError, PsiError};
use crate::disks::FanDisk;
use crate::exact_geom::{segment_segment_classify, ExactPoint, ExactScalar, SegSegClass, Segment};

/// A graph together with a straight-line placement of its vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearEmbedding {
    graph: SpatialGraph,
    positions: BTreeMap<VertexId, ExactPoint>,
}

/// A concrete reason an embedding is not an embedding.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    CoincidentVertices {
        first: VertexId,
        second: VertexId,
        point: ExactPoint,
    },
    VertexOnEdge {
        vertex: VertexId,
        edge: Edge,
        point: ExactPoint,
    },
    EdgesMeet {
        first: Edge,
        second: Edge,
        meet: SegSegClass,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Validity {
    Valid,
    Invalid { witness: Witness },
}

impl Validity {
    pub fn is_valid(&self) -> bool {
        matches!(self, Validity::Valid)
    }
}

impl LinearEmbedding {
    pub fn new(
        graph: SpatialGraph,
        positions: BTreeMap<VertexId, ExactPoint>,
    ) -> Result<Self, EmbeddingError> {
        for v in graph.vertices() {
            if !positions.contains_key(&v) {
                return Err(EmbeddingError::MissingPosition(v));
            }
        }
        if let Some(extra) = positions.keys().find(|v| !graph.contains(**v)) {
            return Err(EmbeddingError::UnknownVertex(*extra));
        }
        Ok(LinearEmbedding { graph, positions })
    }

    pub fn graph(&self) -> &SpatialGraph {
        &self.graph
    }

    pub fn positions(&self) -> &BTreeMap<VertexId, ExactPoint> {
        &self.positions
    }

    pub fn position(&self, v: VertexId) -> Option<&ExactPoint> {
        self.positions.get(&v)
    }

    /// The straight segment of an edge. `None` if the edge is degenerate
    /// (coincident endpoints) or unknown.
    pub fn edge_segment(&self, e: Edge) -> Option<Segment> {
        let a = self.positions.get(&e.lo)?;
        let b = self.positions.get(&e.hi)?;
        Segment::new(a.clone(), b.clone()).ok()
    }

    /// Polygon points of a vertex cycle.
    pub fn cycle_points(&self, cycle: &[VertexId]) -> Option<Vec<ExactPoint>> {
        cycle.iter().map(|v| self.positions.get(v).cloned()).collect()
    }
}

/// Check that the placement is an embedding: distinct vertex positions, no
/// vertex inside a non-incident edge, non-adjacent edges disjoint, adjacent
/// edges meeting only at their shared vertex. Returns the first violation in
/// canonical order.
pub fn validate_embedding(e: &LinearEmbedding) -> Validity {
    let verts: Vec<(VertexId, &ExactPoint)> = e.positions.iter().map(|(v, p)| (*v, p)).collect();
    for (i, (u, pu)) in verts.iter().enumerate() {
        for (w, pw) in &verts[i + 1..] {
            if pu == pw {
                return Validity::Invalid {
                    witness: Witness::CoincidentVertices {
                        first: *u,
                        second: *w,
                        point: (*pu).clone(),
                    },
                };
            }
        }
    }

    let edges = e.graph.edges();
    let segments: Vec<Segment> = edges
        .iter()
        .map(|edge| e.edge_segment(*edge).expect("distinct positions checked above"))
        .collect();

    for (v, pv) in &verts {
        for (edge, seg) in edges.iter().zip(&segments) {
            if edge.contains(*v) {
                continue;
            }
            if seg.locate_point(pv).is_on() {
                return Validity::Invalid {
                    witness: Witness::VertexOnEdge {
                        vertex: *v,
                        edge: *edge,
                        point: (*pv).clone(),
                    },
                };
            }
        }
    }

    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let meet = segment_segment_classify(&segments[i], &segments[j]);
            let ok = match edges[i].shared_vertex(&edges[j]) {
                Some(shared) => matches!(
                    &meet,
                    SegSegClass::EndpointTouch { point } if point == &e.positions[&shared]
                ),
                None => meet.is_disjoint(),
            };
            if !ok {
                return Validity::Invalid {
                    witness: Witness::EdgesMeet {
                        first: edges[i],
                        second: edges[j],
                        meet,
                    },
                };
            }
        }
    }
    Validity::Valid
}

/// Identifiers and neighbour split for re-expanding a contracted vertex.
#[derive(Debug, Clone)]
pub struct PsiSplit {
    /// The contracted vertex.
    pub v: VertexId,
    pub x: VertexId,
    pub y: VertexId,
    pub x_neighbors: BTreeSet<VertexId>,
    pub y_neighbors: BTreeSet<VertexId>,
}

/// Split `v` back into an edge `xy`: `x` at `v + t n` and `y` at `v - t n`,
/// where `n` is the (un-normalised) normal of the first fan triangle of
/// `disk` at its apex, so `x` and `y` sit on opposite sides of the disk near
/// `v`. Each former edge `vw` becomes `xw`, `yw` or both, following the split.
pub fn expand_to_psi(
    contracted: &LinearEmbedding,
    disk: &FanDisk,
    t: &ExactScalar,
    split: &PsiSplit,
) -> Result<LinearEmbedding, PsiError> {
    let g = contracted.graph();
    let PsiSplit {
        v,
        x,
        y,
        x_neighbors,
        y_neighbors,
    } = split;
    let (v, x, y) = (*v, *x, *y);
    let pv = contracted
        .position(v)
        .ok_or(PsiError::UnknownVertex(v))?;
    if disk.apex() != pv {
        return Err(PsiError::ApexMismatch);
    }
    if t.sign() != crate::exact_geom::Sign::Positive {
        return Err(PsiError::NonPositiveOffset);
    }
    if x == y {
        return Err(PsiError::IdCollision(x));
    }
    for id in [x, y] {
        if g.contains(id) && id != v {
            return Err(PsiError::IdCollision(id));
        }
    }
    let nv = g.neighbor_set(v);
    let covered: BTreeSet<VertexId> = x_neighbors.union(y_neighbors).copied().collect();
    if let Some(missing) = nv.difference(&covered).next() {
        return Err(PsiError::NeighborMissing(*missing));
    }
    if let Some(extra) = covered.difference(&nv).next() {
        return Err(PsiError::NotANeighbor(*extra));
    }

    let n = disk.triangles()[0].normal().clone();
    let offset = n.scaled(t);
    let px = pv.plus(&offset);
    let py = pv.minus(&offset);

    let mut graph = g.clone();
    graph.remove_vertex(v);
    graph.add_vertex(x)?;
    graph.add_vertex(y)?;
    graph.add_edge(x, y)?;
    for w in x_neighbors {
        graph.add_edge(x, *w)?;
    }
    for w in y_neighbors {
        graph.add_edge(y, *w)?;
    }
    let mut positions = contracted.positions().clone();
    positions.remove(&v);
    positions.insert(x, px);
    positions.insert(y, py);
    let psi = LinearEmbedding::new(graph, positions).expect("positions cover graph");
    match validate_embedding(&psi) {
        Validity::Valid => Ok(psi),
        Validity::Invalid { witness } => Err(PsiError::Invalid(Box::new(witness))),
    }
}
