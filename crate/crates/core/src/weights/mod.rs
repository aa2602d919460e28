//! Weights of the semisimple parts and the complexes graded by them.

mod assignment;
mod invariant;
pub mod jordan;
mod weight;

pub use assignment::{infer_weights, WeightAssignment};
pub use invariant::{build_invariant_complex, InvariantComplex, InvariantLabel};
pub use jordan::{jordan_chevalley_additive, JordanDecomposition};
pub use weight::Weight;
