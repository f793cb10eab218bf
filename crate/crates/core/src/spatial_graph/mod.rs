//! Simple graphs with straight-line embeddings in R³, edge contraction
//! `G/xy`, the vertex split that reverses it, and cycle enumeration.

mod cycles;
mod embedding;
mod graph;
pub mod io;

pub use cycles::{canonical_cycle, enumerate_cycles, CycleList};
pub use embedding::{expand_to_psi, validate_embedding, LinearEmbedding, PsiSplit, Validity, Witness};
pub use graph::{contract_edge, Edge, SpatialGraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(VertexId),
    #[error("vertex {0} declared twice")]
    DuplicateVertex(VertexId),
    #[error("loop at vertex {0}")]
    Loop(VertexId),
    #[error("parallel edge {0}-{1}")]
    ParallelEdge(VertexId, VertexId),
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(VertexId, VertexId),
    #[error("identifier {0} is already in use")]
    IdCollision(VertexId),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EmbeddingError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("vertex {0} has no position")]
    MissingPosition(VertexId),
    #[error("position given for unknown vertex {0}")]
    UnknownVertex(VertexId),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PsiError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("vertex {0} is not in the contracted embedding")]
    UnknownVertex(VertexId),
    #[error("disk apex does not coincide with the contracted vertex")]
    ApexMismatch,
    #[error("offset must be positive")]
    NonPositiveOffset,
    #[error("identifier {0} is already in use")]
    IdCollision(VertexId),
    #[error("neighbour {0} of the contracted vertex is assigned to neither x nor y")]
    NeighborMissing(VertexId),
    #[error("{0} is not a neighbour of the contracted vertex")]
    NotANeighbor(VertexId),
    #[error("expanded placement is not an embedding at this offset: {0:?}")]
    Invalid(Box<Witness>),
}
