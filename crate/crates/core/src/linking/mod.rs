//! Linking numbers of disjoint closed polygons, computed from a generic
//! projection and, independently, by counting piercings of a cone.

mod cone;
mod polygon;
mod projection;
mod scan;

pub use cone::{candidate_apexes, find_generic_apex, linking_number_cone};
pub use polygon::ClosedPolygon;
pub use projection::{candidate_directions, find_generic_direction, is_generic_direction, linking_number_projection};
pub use scan::{cross_checked_linking_number, pairwise_link_scan, LinkReport, LinkedPair};

use crate::exact_geom::ExactPoint;
use crate::spatial_graph::{VertexId, Witness};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinkError {
    #[error("a closed polygon needs at least 3 points, got {0}")]
    TooFewPoints(usize),
    #[error("polygon edge {0} has coincident endpoints")]
    RepeatedPoint(usize),
    #[error("polygon edges {first} and {second} meet")]
    NotSimple { first: usize, second: usize },
    #[error("projection direction is not generic for this pair")]
    NonGenericDirection,
    #[error("cone apex is not generic for this pair")]
    NonGenericApex,
    #[error("no generic direction or apex found among the candidates")]
    NoGenericChoice,
    #[error("the curves intersect at {point}")]
    CurvesIntersect { point: ExactPoint },
    #[error("projection gives {projection} but cone count gives {cone}")]
    AlgorithmMismatch { projection: i64, cone: i64 },
    #[error("cycles {cycle_a:?} and {cycle_b:?}: projection gives {projection} but cone count gives {cone}")]
    PairMismatch {
        cycle_a: Vec<VertexId>,
        cycle_b: Vec<VertexId>,
        projection: i64,
        cone: i64,
    },
    #[error("embedding is not valid: {0:?}")]
    InvalidEmbedding(Box<Witness>),
}
