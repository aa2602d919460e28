//! Exact scalars and linear algebra over ℚ(i).

mod gaussian;
mod matrix;
mod period;
pub mod poly;

use std::fmt;

pub use gaussian::GaussianRational;
pub use matrix::{span_rank, ExactMatrix, PivotRule, RowEchelon, Vector};
pub use period::{Parity, PeriodBasisSymbol, PeriodSymbols, PeriodValue};

/// Failure to read a scalar literal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseScalarError {
    input: String,
    reason: String,
}

impl ParseScalarError {
    pub(crate) fn new(input: &str, reason: &str) -> Self {
        ParseScalarError { input: input.to_string(), reason: reason.to_string() }
    }

    pub(crate) fn within(mut self, outer: &str) -> Self {
        self.input = outer.to_string();
        self
    }

    pub fn reason(&self) -> &str {
        &self.reason
    }
}

impl fmt::Display for ParseScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cannot parse `{}`: {}", self.input, self.reason)
    }
}

impl std::error::Error for ParseScalarError {}

/// `v ∈ 2πiℤ`.
pub fn period_in_2pi_i_z(v: &PeriodValue) -> bool {
    v.in_2pi_i_z()
}

/// `Im v ∈ πℤ`.
pub fn period_im_in_pi_z(v: &PeriodValue) -> bool {
    v.im_in_pi_z()
}
