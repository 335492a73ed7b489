//! Exact rational linear algebra.

mod elimination;
mod rational;
mod vector;

pub(crate) use elimination::{Added, IncrementalSystem};
pub use elimination::{
    affine_rank, determinant, maximal_minor_values, nullspace, orthogonal_complement, rank, rank_of, rref,
    solve_linear,
};
pub use rational::{lcm_denominators, Rational};
pub use vector::{RationalMatrix, RationalVector};
pub use crate::polytope_core::{lp_extremum, Sense};
