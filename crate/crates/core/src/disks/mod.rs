//! PL disks built as cones (triangle fans) over polylines, plus the
//! classification of segments, other disks and whole embeddings against them.

mod classify;
mod fan;
pub mod obj;
mod panel;
mod patch;

pub use classify::{disk_disk_classify, disk_segment_classify, DiskDiskClass, DiskSegClass, FeatureContact};
pub use fan::{DiskFeature, FanDisk};
pub use panel::{panel_check, same_closed_polygon, GraphFeature, PanelCheck};
pub use patch::TriPatch;

use crate::exact_geom::ExactPoint;
use crate::spatial_graph::Edge;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiskError {
    #[error("rim needs at least 2 points, got {0}")]
    RimTooShort(usize),
    #[error("rim point {0} coincides with the apex")]
    RimHitsApex(usize),
    #[error("rim points {0} and {1} coincide")]
    RepeatedRimPoint(usize, usize),
    #[error("fan triangle {0} is degenerate (rim chord through the apex)")]
    DegenerateTriangle(usize),
    #[error("fan triangles {first} and {second} intersect beyond their shared features at {witness}")]
    SelfIntersecting {
        first: usize,
        second: usize,
        witness: ExactPoint,
    },
    #[error("patch polylines do not share their endpoints")]
    PatchEndpointMismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PanelError {
    #[error("boundary sequence is not a cycle of the graph")]
    NotACycle,
    #[error("disk boundary differs from the cycle polygon")]
    BoundaryMismatch,
    #[error("edge {0} has coincident endpoints")]
    DegenerateEdge(Edge),
}
