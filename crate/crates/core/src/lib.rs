//! Exact cohomology of solvmanifolds from finite-dimensional invariant complexes.

pub mod arith;
pub mod error;
pub mod lattice;
pub mod lie;
pub mod oracle;
pub mod weights;

pub use error::{Error, Result};
