//! Workbench for spectral extremal problems on planar graphs that forbid
//! `K₂ + H` for a linear forest `H`.

pub mod canon;
pub mod error;
pub mod family;
pub mod forest;
pub mod graph;
pub mod graph6;
pub mod patterns;
pub mod planarity;
pub mod search;
pub mod spectral;
pub mod structure;
pub mod turan;

pub use error::{Error, Result};
pub use family::Family;
pub use forest::LinearForest;
pub use graph::{disjoint_union, disjoint_union_all, join, Graph, MAX_VERTICES};
