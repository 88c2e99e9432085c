//! Analysis of straight-line embeddings of simple graphs in 3-space.
//!
//! The library certifies that the fundamental group of an embedding's
//! complement is free by finding a descending direction and reducing the
//! Wirtinger presentation of the projected diagram, and gathers
//! non-freeness evidence (Fox 3-coloring) when certification fails.
//!
//! All geometric decisions are made with exact rational arithmetic; see
//! [`scalar`] for the scalar kernel. Floating point appears only in SVG
//! output coordinates.

pub mod scalar;
pub mod vec;
pub mod predicates;
pub mod hull;
pub mod graph;
pub mod embedding;
pub mod project;
pub mod direction;
pub mod diagram;

pub use scalar::{fmt_rat, parse_rat, rat, rat_int, Rat};
pub use vec::{IVec3, Point2, Point3, Vector2, Vector3};
pub use graph::SimpleGraph;
