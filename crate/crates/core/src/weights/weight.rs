use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use crate::arith::poly::cmp_gaussian;
use crate::arith::{GaussianRational, PeriodValue};
use crate::lie::LieAlgebraData;

/// Additive character `λ` on the complement coordinates (`α = e^λ`). It
/// vanishes on the nilradical, so only complement coordinates are stored, in
/// increasing index order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Weight(Vec<GaussianRational>);

impl Weight {
    pub fn new(coords: Vec<GaussianRational>) -> Self {
        Weight(coords)
    }

    pub fn zero(len: usize) -> Self {
        Weight(vec![GaussianRational::zero(); len])
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        Weight(coords.iter().map(|&c| GaussianRational::from_integer(c)).collect())
    }

    pub fn coords(&self) -> &[GaussianRational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// `μ(X_j)` for every basis index `j` (zero on the nilradical).
    pub fn on_basis(&self, g: &LieAlgebraData) -> Vec<GaussianRational> {
        let mut out = vec![GaussianRational::zero(); g.dim()];
        for (q, &j) in g.complement().iter().enumerate() {
            if let Some(c) = self.0.get(q) {
                out[j] = c.clone();
            }
        }
        out
    }

    /// `μ(δ) = Σ_j μ_j·δ_j` for a lattice generator given in complement
    /// coordinates.
    pub fn eval_periods(&self, generator: &[PeriodValue]) -> PeriodValue {
        self.0
            .iter()
            .zip(generator)
            .fold(PeriodValue::zero(), |acc, (c, d)| &acc + &d.scale(c))
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.len(), rhs.len(), "weight length mismatch");
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.len(), rhs.len(), "weight length mismatch");
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl Ord for Weight {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.0.iter().zip(&other.0) {
            match cmp_gaussian(a, b) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        self.0.len().cmp(&other.0.len())
    }
}

impl PartialOrd for Weight {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Weight{self}")
    }
}
