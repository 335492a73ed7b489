//! Builders for the D_n cells, the 24-cell, zonotopes and 24-cell sums, with
//! decomposition and validation of the segment rules.

mod builders;
mod decompose;
mod sums;
mod validate;

pub use builders::{cell24, dn_edge_directions, root_vectors, voronoi_dn, voronoi_dn_polytope, zonotope};
pub use decompose::{decompose, decompose_with, DecompositionResult};
pub use sums::{sum_cell24, Base, SumSpec};
pub use validate::{pvz_validate, sdn_validate, BeltPattern, PvzReport, RootCheck, SdnReport};
