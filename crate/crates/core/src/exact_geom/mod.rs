//! Exact rational geometric kernel: points, segments, triangles and the
//! orientation / intersection predicates everything else is built on.
//!
//! No predicate here takes a tolerance. All results are exact; the float
//! filters only short-cut cases their error bound certifies.

mod point;
mod predicates;
mod scalar;
mod segment;
pub mod filter;
mod triangle;
pub use point::{ExactPoint, HomPoint, IntPlane};
pub use predicates::{collinear, orient3d, Projection};
pub use scalar::{ExactScalar, ParseScalarError, Sign};
pub use segment::{segment_segment_classify, OnSegment, SegSegClass, Segment};
pub use triangle::{segment_triangle_classify, Contact, SegTriClass, TriLocation, Triangle};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeomError {
    #[error("degenerate segment: both endpoints at {0}")]
    DegenerateSegment(ExactPoint),
    #[error("degenerate triangle {0:?}: vertices are collinear")]
    DegenerateTriangle([ExactPoint; 3]),
}
