//! JSON wire format for embeddings:
//! `{"vertices": [{"id": 0, "pos": [[n,d],[n,d],[n,d]]}], "edges": [[0,1]]}`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::embedding::LinearEmbedding;
use super::graph::{Edge, SpatialGraph, VertexId};
use super::EmbeddingError;
use crate::exact_geom::ExactPoint;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VertexEntry {
    pub id: VertexId,
    pub pos: ExactPoint,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EmbeddingFile {
    pub vertices: Vec<VertexEntry>,
    pub edges: Vec<Edge>,
}

impl From<&LinearEmbedding> for EmbeddingFile {
    fn from(e: &LinearEmbedding) -> Self {
        EmbeddingFile {
            vertices: e
                .positions()
                .iter()
                .map(|(id, pos)| VertexEntry {
                    id: *id,
                    pos: pos.clone(),
                })
                .collect(),
            edges: e.graph().edges(),
        }
    }
}

impl TryFrom<EmbeddingFile> for LinearEmbedding {
    type Error = EmbeddingError;

    fn try_from(f: EmbeddingFile) -> Result<Self, Self::Error> {
        let mut g = SpatialGraph::new();
        let mut positions = BTreeMap::new();
        for VertexEntry { id, pos } in f.vertices {
            g.add_vertex(id)?;
            positions.insert(id, pos);
        }
        for e in f.edges {
            g.add_edge(e.lo, e.hi)?;
        }
        LinearEmbedding::new(g, positions)
    }
}

impl Serialize for LinearEmbedding {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        EmbeddingFile::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LinearEmbedding {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let file = EmbeddingFile::deserialize(deserializer)?;
        LinearEmbedding::try_from(file).map_err(serde::de::Error::custom)
    }
}
