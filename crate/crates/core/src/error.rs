use thiserror::Error;

use crate::arith::poly::RootSearchTooLarge;
use crate::lie::ValidationReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree {degree} out of range 0..={max}")]
    DegreeOutOfRange { degree: usize, max: usize },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("d∘d ≠ 0 between degrees {degree} and {}", degree + 2)]
    NotAComplex { degree: usize },

    #[error("characteristic polynomial does not split over Q(i); extend scalars (irreducible factor {factor})")]
    ExtendScalars { factor: String },

    #[error("{0}")]
    RootSearch(#[from] RootSearchTooLarge),

    #[error("generalized eigenspaces of {operator} are not aligned with the basis; supply an adapted basis and explicit weights")]
    NonAlignedEigenspaces { operator: String },

    #[error("weight grading violated: d({source_label}) has coefficient on {target_label} with a different weight tag")]
    WeightGrading { source_label: String, target_label: String },

    #[error("result is not nilpotent (lower central series dimensions {series:?})")]
    NotNilpotent { series: Vec<usize> },

    #[error("invalid input:\n{0}")]
    Invalid(ValidationReport),

    #[error("{0}")]
    Mode(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
