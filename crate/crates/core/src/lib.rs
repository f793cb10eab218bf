//! Exact-arithmetic toolkit for piecewise-linear spatial graph embeddings.
//!
//! The crate is layered bottom-up:
//!
//! - [`exact_geom`]: rational points, segments, triangles and predicates.
//! - [`spatial_graph`]: simple graphs with straight-line embeddings, edge
//!   contraction and the vertex-split construction that reverses it.
//! - [`disks`]: cone (fan) disks over polylines and their classification
//!   against segments, other disks and graph embeddings.
//! - [`linking`]: linking numbers of disjoint closed polygons by two
//!   independent algorithms.
//! - [`counterexample`]: the spherical scene around a contracted vertex and
//!   the placement search for the re-expanded vertex.

pub mod counterexample;
pub mod disks;
pub mod exact_geom;
pub mod linking;
pub mod spatial_graph;
