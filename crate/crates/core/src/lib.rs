//! Exact construction and classification of four-dimensional parallelotopes.

pub mod atlas;
pub mod canon;
pub mod constructions;
pub mod error;
pub mod exact_linalg;
pub mod exec;
pub mod graphs_matroids;
pub mod polytope_core;
pub mod root_d4;

pub use error::{Error, Result};
