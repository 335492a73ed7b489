//! Graphs, their vector representations, unimodularity, and named matroid classes.

mod graph;
mod label;
mod matroid;
mod unimodular;

pub use graph::{graph_isomorphic, Graph};
pub use label::{conway_label, enumerate_rank4_subgraphs_k5, label_of_matroid, label_of_vectors, ConwayLabel};
pub use matroid::Matroid;
pub use unimodular::{
    cographic_k33_vectors, graphic_vectors, is_unimodular, is_unimodular_vectors, spans_unimodular,
    spans_unimodular_vectors, Source, UniSystem,
};
