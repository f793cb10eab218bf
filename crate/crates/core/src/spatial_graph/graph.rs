use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::GraphError;

/// Vertex identifier. Ordering is used for canonical forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Unordered edge stored with `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "[VertexId; 2]", into = "[VertexId; 2]")]
pub struct Edge {
    pub lo: VertexId,
    pub hi: VertexId,
}

impl Edge {
    pub fn new(a: VertexId, b: VertexId) -> Edge {
        if a <= b {
            Edge { lo: a, hi: b }
        } else {
            Edge { lo: b, hi: a }
        }
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.lo == v || self.hi == v
    }

    pub fn shared_vertex(&self, o: &Edge) -> Option<VertexId> {
        if o.contains(self.lo) {
            Some(self.lo)
        } else if o.contains(self.hi) {
            Some(self.hi)
        } else {
            None
        }
    }
}

impl From<[VertexId; 2]> for Edge {
    fn from([a, b]: [VertexId; 2]) -> Self {
        Edge::new(a, b)
    }
}

impl From<Edge> for [VertexId; 2] {
    fn from(e: Edge) -> Self {
        [e.lo, e.hi]
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.lo, self.hi)
    }
}

/// Simple undirected graph: no loops, no parallel edges.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SpatialGraph {
    adjacency: BTreeMap<VertexId, BTreeSet<VertexId>>,
}

impl SpatialGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_edges(
        vertices: impl IntoIterator<Item = VertexId>,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self, GraphError> {
        let mut g = SpatialGraph::new();
        for v in vertices {
            g.add_vertex(v)?;
        }
        for (a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, v: VertexId) -> Result<(), GraphError> {
        if self.adjacency.contains_key(&v) {
            return Err(GraphError::DuplicateVertex(v));
        }
        self.adjacency.insert(v, BTreeSet::new());
        Ok(())
    }

    pub fn add_edge(&mut self, a: VertexId, b: VertexId) -> Result<(), GraphError> {
        if self.has_edge(a, b) {
            return Err(GraphError::ParallelEdge(a, b));
        }
        self.insert_edge(a, b)
    }

    /// Like [`SpatialGraph::add_edge`] but an existing edge is accepted as-is.
    pub fn insert_edge(&mut self, a: VertexId, b: VertexId) -> Result<(), GraphError> {
        if a == b {
            return Err(GraphError::Loop(a));
        }
        for v in [a, b] {
            if !self.adjacency.contains_key(&v) {
                return Err(GraphError::UnknownVertex(v));
            }
        }
        self.adjacency.get_mut(&a).unwrap().insert(b);
        self.adjacency.get_mut(&b).unwrap().insert(a);
        Ok(())
    }

    pub fn remove_vertex(&mut self, v: VertexId) -> Option<BTreeSet<VertexId>> {
        let nbrs = self.adjacency.remove(&v)?;
        for w in &nbrs {
            if let Some(set) = self.adjacency.get_mut(w) {
                set.remove(&v);
            }
        }
        Some(nbrs)
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.adjacency.contains_key(&v)
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        self.adjacency.get(&a).is_some_and(|s| s.contains(&b))
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.adjacency.keys().copied()
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adjacency.get(&v).into_iter().flatten().copied()
    }

    pub fn neighbor_set(&self, v: VertexId) -> BTreeSet<VertexId> {
        self.neighbors(v).collect()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency.get(&v).map_or(0, |s| s.len())
    }

    /// Edges in canonical (sorted) order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for (&a, nbrs) in &self.adjacency {
            for &b in nbrs.range(a..) {
                if b != a {
                    out.push(Edge::new(a, b));
                }
            }
        }
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.values().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Smallest identifier strictly above every identifier in use.
    pub fn fresh_id(&self) -> VertexId {
        VertexId(self.adjacency.keys().next_back().map_or(0, |v| v.0 + 1))
    }
}

/// `G/xy`: delete `x` and `y`, add `v` adjacent to `(N(x) ∪ N(y)) \ {x, y}`.
/// Parallel edges that would arise are merged.
pub fn contract_edge(
    g: &SpatialGraph,
    x: VertexId,
    y: VertexId,
    v: VertexId,
) -> Result<SpatialGraph, GraphError> {
    if !g.has_edge(x, y) {
        return Err(GraphError::NotAnEdge(x, y));
    }
    if g.contains(v) && v != x && v != y {
        return Err(GraphError::IdCollision(v));
    }
    let mut out = g.clone();
    let nx = out.remove_vertex(x).unwrap_or_default();
    let ny = out.remove_vertex(y).unwrap_or_default();
    out.add_vertex(v)?;
    for w in nx.union(&ny) {
        if *w != x && *w != y {
            out.insert_edge(v, *w)?;
        }
    }
    Ok(out)
}
