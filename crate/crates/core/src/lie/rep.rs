//! Finite-dimensional representations given by the matrices of `dρ(X_i)`.

use num_traits::Zero;

use crate::arith::{ExactMatrix, GaussianRational};

use super::algebra::{LieAlgebraData, ValidationReport, Violation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentationData {
    dim: usize,
    matrices: Vec<ExactMatrix>,
    adjoint: bool,
}

impl RepresentationData {
    /// Explicit `dim×dim` matrices, one per basis vector of the algebra.
    pub fn new(dim: usize, matrices: Vec<ExactMatrix>) -> Self {
        RepresentationData { dim, matrices, adjoint: false }
    }

    /// The adjoint representation on `𝔤_ℂ`.
    pub fn adjoint(g: &LieAlgebraData) -> Self {
        RepresentationData {
            dim: g.dim(),
            matrices: (0..g.dim()).map(|i| g.ad(i)).collect(),
            adjoint: true,
        }
    }

    /// The trivial representation of dimension `m`.
    pub fn trivial(g: &LieAlgebraData, m: usize) -> Self {
        RepresentationData {
            dim: m,
            matrices: (0..g.dim()).map(|_| ExactMatrix::zeros(m, m)).collect(),
            adjoint: false,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_adjoint(&self) -> bool {
        self.adjoint
    }

    pub fn matrices(&self) -> &[ExactMatrix] {
        &self.matrices
    }

    pub fn matrix(&self, i: usize) -> &ExactMatrix {
        &self.matrices[i]
    }

    /// Checks shapes, the homomorphism law and unipotence on the nilradical.
    pub fn validate(&self, g: &LieAlgebraData) -> ValidationReport {
        let n = g.dim();
        let mut v = Vec::new();
        if self.matrices.len() != n {
            v.push(Violation::RepresentationShape { index: self.matrices.len().min(n) });
            return ValidationReport { violations: v };
        }
        let m = self.dim();
        for (index, mat) in self.matrices.iter().enumerate() {
            if mat.rows() != m || mat.cols() != m {
                v.push(Violation::RepresentationShape { index });
            }
        }
        if !v.is_empty() {
            return ValidationReport { violations: v };
        }
        for i in 0..n {
            for j in i + 1..n {
                let lhs = self.matrices[i].commutator(&self.matrices[j]);
                let mut rhs = ExactMatrix::zeros(m, m);
                for (k, c) in g.bracket_basis(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        rhs = &rhs + &self.matrices[k].scale(c);
                    }
                }
                if lhs != rhs {
                    v.push(Violation::RepresentationHomomorphism { i, j });
                }
            }
        }
        for &index in g.nilradical() {
            if !self.matrices[index].is_nilpotent() {
                v.push(Violation::RepresentationNotUnipotent { index });
            }
        }
        ValidationReport { violations: v }
    }

    /// `X·v` for a basis vector `X_i` acting on coordinates `v`.
    pub fn act(&self, i: usize, v: &[GaussianRational]) -> Vec<GaussianRational> {
        self.matrices[i].mul_vec(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::catalog;

    #[test]
    fn adjoint_and_trivial_are_valid() {
        for g in [catalog::heisenberg3(), catalog::complex_semidirect_real(), catalog::complex_semidirect_3()] {
            assert!(RepresentationData::adjoint(&g).validate(&g).is_pass());
            assert!(RepresentationData::trivial(&g, 2).validate(&g).is_pass());
        }
    }

    #[test]
    fn broken_homomorphism_is_reported() {
        let g = catalog::heisenberg3();
        let e = ExactMatrix::from_i64_rows(&[&[0, 1], &[0, 0]]);
        // X and Y commute in this assignment although [X,Y] = Z ≠ 0 acts as e
        let rep = RepresentationData::new(2, vec![e.clone(), e.clone(), e]);
        let r = rep.validate(&g);
        assert!(r.violations.contains(&Violation::RepresentationHomomorphism { i: 0, j: 1 }));
    }

    #[test]
    fn non_unipotent_on_nilradical_is_reported() {
        let g = catalog::heisenberg3();
        let id = ExactMatrix::identity(1);
        let z = ExactMatrix::zeros(1, 1);
        let rep = RepresentationData::new(1, vec![id, z.clone(), z]);
        let r = rep.validate(&g);
        assert!(r.violations.contains(&Violation::RepresentationNotUnipotent { index: 0 }));
    }
}
