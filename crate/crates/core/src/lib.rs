pub mod catalog;
mod chain;
pub mod error;
pub mod graph;
pub mod group;
pub mod lattice;
pub mod numeric;
pub mod perm;
pub mod structure;

pub use error::{Error, Result};
pub use graph::Graph;
pub use group::{ActionImage, Group, Limits, PointLabel};
pub use perm::Permutation;
