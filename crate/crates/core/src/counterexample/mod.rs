//! The counterexample scene: a fan panel over a cycle running along a
//! spherical curve, the cone over that curve, and the searches over
//! placements near the center.

pub mod config;
mod equator;
pub mod grid;
pub mod presets;
mod scene;
pub mod sphere;
mod star;

pub use config::{check_simple_polyline, Anchors, ConfigError, GridSpec, SceneConfig};
pub use equator::{check_equator_claim, CounterPair, EquatorReport};
pub use presets::{control_short_arc_config, default_scene_config};
pub use scene::{build_scene, Scene, SceneError};
pub use star::{
    classify_placement, segment_verdict, verify_star, verify_star_at, Anchor, AnchorStatus, PlacementRecord,
    SegmentVerdict, SkipReason, StarReport, StarSummary, ANCHORS,
};
