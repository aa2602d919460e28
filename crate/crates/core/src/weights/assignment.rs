use num_traits::Zero;

use crate::arith::poly::{characteristic_polynomial, factor_linear};
use crate::arith::{ExactMatrix, GaussianRational};
use crate::error::{Error, Result};
use crate::lie::{LieAlgebraData, RepresentationData, ValidationReport, Violation};

use super::weight::Weight;

/// Weights of the semisimple parts: `(ad X_j)_s = diag(λ_1(X_j), …, λ_n(X_j))`
/// and `(dρ X_j)_s = diag(λ'_1(X_j), …, λ'_m(X_j))` for complement indices `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightAssignment {
    pub algebra: Vec<Weight>,
    pub rep: Vec<Weight>,
}

impl WeightAssignment {
    pub fn new(algebra: Vec<Weight>, rep: Vec<Weight>) -> Self {
        WeightAssignment { algebra, rep }
    }

    /// All weights zero, the nilpotent case.
    pub fn zero(g: &LieAlgebraData, m: usize) -> Self {
        let c = g.complement().len();
        WeightAssignment { algebra: vec![Weight::zero(c); g.dim()], rep: vec![Weight::zero(c); m] }
    }

    pub fn is_zero(&self) -> bool {
        self.algebra.iter().chain(&self.rep).all(Weight::is_zero)
    }

    /// `μ_{I,k} = Σ_{i∈I} λ_i − λ'_k`.
    pub fn tag(&self, form: &[usize], k: usize) -> Weight {
        let mut acc = -&self.rep[k];
        for &i in form {
            acc = &acc + &self.algebra[i];
        }
        acc
    }

    /// Checks shapes and compatibility with the algebra and representation.
    pub fn validate(&self, g: &LieAlgebraData, rep: &RepresentationData) -> ValidationReport {
        let n = g.dim();
        let m = rep.dim();
        let c = g.complement().len();
        let mut v = Vec::new();
        if self.algebra.len() != n {
            v.push(Violation::WeightShape {
                what: format!("{} algebra weights for dimension {n}", self.algebra.len()),
            });
        }
        if self.rep.len() != m {
            v.push(Violation::WeightShape {
                what: format!("{} representation weights for dimension {m}", self.rep.len()),
            });
        }
        if let Some(bad) = self.algebra.iter().chain(&self.rep).find(|w| w.len() != c) {
            v.push(Violation::WeightShape {
                what: format!("covector {bad} has {} coordinates, complement has {c}", bad.len()),
            });
        }
        if !v.is_empty() {
            return ValidationReport { violations: v };
        }

        for (q, &j) in g.complement().iter().enumerate() {
            let diag: Vec<GaussianRational> =
                self.algebra.iter().map(|w| w.coords()[q].clone()).collect();
            check_residue(&g.ad(j), &diag, "ad", j, &mut v);
            if rep.matrices().len() == n {
                let diag: Vec<GaussianRational> =
                    self.rep.iter().map(|w| w.coords()[q].clone()).collect();
                check_residue(rep.matrix(j), &diag, "rho", j, &mut v);
            }
        }
        // The diagonal parts must act as derivations: weights add under brackets.
        for i in 0..n {
            for j in i + 1..n {
                for (k, coef) in g.bracket_basis(i, j).iter().enumerate() {
                    if !coef.is_zero() && &self.algebra[i] + &self.algebra[j] != self.algebra[k] {
                        v.push(Violation::WeightAdditivity { i, j, k });
                    }
                }
            }
        }
        if rep.matrices().len() == n {
            for i in 0..n {
                for (row, col, _) in rep.matrix(i).nonzeros() {
                    if &self.rep[row] - &self.rep[col] != self.algebra[i] {
                        v.push(Violation::RepWeightCompatibility { algebra_index: i, row, col });
                    }
                }
            }
        }
        ValidationReport { violations: v }
    }
}

fn check_residue(
    op: &ExactMatrix,
    diag: &[GaussianRational],
    name: &str,
    j: usize,
    out: &mut Vec<Violation>,
) {
    let d = ExactMatrix::diagonal(diag);
    let residue = op - &d;
    if !residue.is_nilpotent() {
        out.push(Violation::WeightResidueNotNilpotent {
            operator: name.to_string(),
            complement_index: j,
        });
    } else if !d.commutator(op).is_zero() {
        out.push(Violation::WeightResidueNotCommuting {
            operator: name.to_string(),
            complement_index: j,
        });
    }
}

/// Reads the weights off the diagonals of `ad(X_j)` and `dρ(X_j)` for the
/// complement indices and verifies them.
pub fn infer_weights(g: &LieAlgebraData, rep: &RepresentationData) -> Result<WeightAssignment> {
    let n = g.dim();
    let m = rep.dim();
    if rep.matrices().len() != n {
        return Err(Error::Dimension(format!(
            "{} representation matrices for dimension {n}",
            rep.matrices().len()
        )));
    }
    let mut algebra = vec![Vec::with_capacity(g.complement().len()); n];
    let mut rep_w = vec![Vec::with_capacity(g.complement().len()); m];
    for &j in g.complement() {
        let ad = g.ad(j);
        diagnose_alignment(&ad, &format!("ad({})", g.basis_names()[j]))?;
        for (i, d) in ad.diagonal_entries().into_iter().enumerate() {
            algebra[i].push(d);
        }
        let r = rep.matrix(j);
        diagnose_alignment(r, &format!("rho({})", g.basis_names()[j]))?;
        for (k, d) in r.diagonal_entries().into_iter().enumerate() {
            rep_w[k].push(d);
        }
    }
    let w = WeightAssignment::new(
        algebra.into_iter().map(Weight::new).collect(),
        rep_w.into_iter().map(Weight::new).collect(),
    );
    w.validate(g, rep).into_result()?;
    Ok(w)
}

/// The diagonal of `op` is usable as weights only when `op − diag` is
/// nilpotent and commutes with the diagonal.
fn diagnose_alignment(op: &ExactMatrix, name: &str) -> Result<()> {
    let d = ExactMatrix::diagonal(&op.diagonal_entries());
    if (op - &d).is_nilpotent() && d.commutator(op).is_zero() {
        return Ok(());
    }
    let f = factor_linear(&characteristic_polynomial(op))?;
    if !f.splits() {
        return Err(Error::ExtendScalars { factor: f.residual.to_string() });
    }
    Err(Error::NonAlignedEigenspaces { operator: name.to_string() })
}
