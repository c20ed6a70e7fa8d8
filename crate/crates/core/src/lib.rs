//! Exact solvers for the zero forcing number `Z(G)`, the positive semidefinite
//! variant `Z_0(G)` and the q-analogue `Z_q(G)` of a graph on at most 64
//! vertices, with closed forms and constructive nullity certificates for
//! connected threshold graphs and several structured families.

pub mod contraction;
pub mod error;
pub mod families;
pub mod game;
pub mod graph;
pub mod spectral;
pub mod threshold;

pub use error::{Error, Result};
pub use graph::{ColouredState, Graph, VertexSet};
