//! Permutation-group machinery for verifying the computations behind the
//! classification of 7-valent symmetric Cayley graphs: stabilizer chains,
//! backtrack searches, a catalog of concrete groups, Cayley and coset
//! graphs, and the row-by-row factorization/feasibility verifier.

pub mod atlas;
pub mod chain;
pub mod error;
pub mod exec;
pub mod graph;
pub mod group;
pub mod perm;
pub mod search;
pub mod verify;

pub use error::{Error, Result};
pub use group::PermGroup;
pub use perm::{Permutation, Point};
