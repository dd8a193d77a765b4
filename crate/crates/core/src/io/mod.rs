//! Reading, writing and drawing diagrams.

pub mod svg;
pub mod tri;

pub use tri::{parse_tri, write_tri, TriDocument};
