//! Lie algebra data, representations and Chevalley–Eilenberg complexes.

mod algebra;
pub mod catalog;
mod ce;
mod complex;
pub mod exterior;
mod nilshadow;
mod rep;

pub use algebra::{Bracket, GroundMode, LieAlgebraData, ValidationReport, Violation, MAX_DIM};
pub use ce::{ce_complex, ce_differential, form_label, CeOperator, SparseColumn};
pub use complex::{alternating_sum, betti_from_ranks, cohomology, CohomologyResult, FiniteComplex};
pub use nilshadow::nilshadow;
pub use rep::RepresentationData;

/// Validates the algebra and, when given, a representation of it.
pub fn validate_algebra(g: &LieAlgebraData, rep: Option<&RepresentationData>) -> ValidationReport {
    let mut report = g.validate();
    if let Some(r) = rep {
        report.merge(r.validate(g));
    }
    report
}
