//! Chevalley–Eilenberg differential of `⋀𝔤* ⊗ V_μ ⊗ V_ρ`.
//!
//! Convention, for a `p`-cochain `ω`:
//!
//! ```text
//! (dω)(X₀,…,X_p) = Σ_i (−1)^i X_i·ω(…X̂_i…) + Σ_{i<j} (−1)^{i+j} ω([X_i,X_j], …X̂_i…X̂_j…)
//! ```
//!
//! with `X` acting on the coefficients as `μ(X)·id + dρ(X)`. On basis elements
//! this is computed as a graded derivation:
//! `d(x_I ⊗ v) = dx_I ⊗ v + Σ_j (x_j ∧ x_I) ⊗ X_j·v` and
//! `dx_k = −Σ_{a<b} c_{ab}^k x_a ∧ x_b`.
//!
//! Basis order in degree `p`: `x_I ⊗ v_k` at row `pos(I)·m + k`, with `I`
//! ranging lexicographically.

use std::collections::BTreeMap;

use num_traits::Zero;
use rayon::prelude::*;

use crate::arith::{ExactMatrix, GaussianRational};
use crate::error::{Error, Result};
use crate::weights::Weight;

use super::algebra::LieAlgebraData;
use super::complex::FiniteComplex;
use super::exterior::{indices_of, wedge_left, ExteriorBasis};
use super::rep::RepresentationData;

/// Sparse image of one basis element: `(row, coefficient)` in the next degree.
pub type SparseColumn = Vec<(usize, GaussianRational)>;

pub struct CeOperator<'a> {
    g: &'a LieAlgebraData,
    rep: &'a RepresentationData,
    m: usize,
    basis: ExteriorBasis,
    /// `dx_k` as a list of `(mask of x_a ∧ x_b, coefficient)`.
    d_generators: Vec<Vec<(u64, GaussianRational)>>,
}

impl<'a> CeOperator<'a> {
    pub fn new(g: &'a LieAlgebraData, rep: &'a RepresentationData) -> Self {
        let n = g.dim();
        let d_generators = (0..n)
            .map(|k| {
                let mut terms = Vec::new();
                for a in 0..n {
                    for b in a + 1..n {
                        let c = g.structure_constant(a, b, k);
                        if !c.is_zero() {
                            terms.push(((1u64 << a) | (1u64 << b), -c));
                        }
                    }
                }
                terms
            })
            .collect();
        CeOperator { g, rep, m: rep.dim(), basis: ExteriorBasis::new(n), d_generators }
    }

    pub fn basis(&self) -> &ExteriorBasis {
        &self.basis
    }

    pub fn module_dim(&self) -> usize {
        self.m
    }

    pub fn dim(&self, p: usize) -> usize {
        self.basis.dim(p) * self.m
    }

    /// `d(x_I ⊗ v_μ ⊗ v_k)` in the coordinates of degree `|I| + 1`.
    /// `mu_on_basis[j]` is `μ(X_j)`.
    pub fn apply(&self, form: u64, k: usize, mu_on_basis: &[GaussianRational]) -> SparseColumn {
        let mut acc: BTreeMap<usize, GaussianRational> = BTreeMap::new();
        let m = self.m;
        let mut push = |mask: u64, l: usize, c: GaussianRational| {
            let row = self.basis.position(mask) * m + l;
            let e = acc.entry(row).or_insert_with(GaussianRational::zero);
            *e += c;
        };

        // dx_I ⊗ v_k
        for (r, &i) in indices_of(form).iter().enumerate() {
            let rest = form & !(1u64 << i);
            for (ab, c) in &self.d_generators[i] {
                if ab & rest != 0 {
                    continue;
                }
                let mut it = indices_of(*ab).into_iter();
                let (a, b) = (it.next().unwrap(), it.next().unwrap());
                let Some((s1, m1)) = wedge_left(b, rest) else { continue };
                let Some((s2, m2)) = wedge_left(a, m1) else { continue };
                let negative = (r % 2 == 1) ^ s1 ^ s2;
                push(m2, k, if negative { -c } else { c.clone() });
            }
        }

        // Σ_j (x_j ∧ x_I) ⊗ (μ(X_j) v_k + dρ(X_j) v_k)
        for (j, mu_j) in mu_on_basis.iter().enumerate().take(self.g.dim()) {
            let Some((neg, mask)) = wedge_left(j, form) else { continue };
            let sign = |c: GaussianRational| if neg { -c } else { c };
            if !mu_j.is_zero() {
                push(mask, k, sign(mu_j.clone()));
            }
            if let Some(mat) = self.rep.matrices().get(j) {
                for l in 0..m {
                    let e = &mat[(l, k)];
                    if !e.is_zero() {
                        push(mask, l, sign(e.clone()));
                    }
                }
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// Matrix of `d_p` for the fixed weight module `V_μ ⊗ V_ρ`.
    pub fn matrix(&self, mu: &Weight, p: usize) -> Result<ExactMatrix> {
        let n = self.g.dim();
        if p > n {
            return Err(Error::DegreeOutOfRange { degree: p, max: n });
        }
        let mu_on_basis = mu.on_basis(self.g);
        let mut out = ExactMatrix::zeros(self.dim(p + 1), self.dim(p));
        for (pos, &form) in self.basis.degree(p).iter().enumerate() {
            for k in 0..self.m {
                let col = pos * self.m + k;
                for (row, c) in self.apply(form, k, &mu_on_basis) {
                    out[(row, col)] = c;
                }
            }
        }
        Ok(out)
    }

    /// Labels `x_I ⊗ v_k` in the basis order.
    pub fn labels(&self, p: usize) -> Vec<String> {
        let names = self.g.basis_names();
        self.basis
            .degree(p)
            .iter()
            .flat_map(|&mask| {
                let form = form_label(names, mask);
                (0..self.m).map(move |k| format!("{form}⊗v{}", k + 1))
            })
            .collect()
    }
}

/// `x1∧x3` style label built from basis names; `1` for the empty form.
pub fn form_label(names: &[String], mask: u64) -> String {
    let parts: Vec<String> = indices_of(mask).iter().map(|&i| format!("{}*", names[i])).collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("∧")
    }
}

/// Matrix of the Chevalley–Eilenberg differential `d_p` with coefficients in
/// `V_μ ⊗ V_ρ`.
pub fn ce_differential(
    g: &LieAlgebraData,
    rep: &RepresentationData,
    mu: &Weight,
    p: usize,
) -> Result<ExactMatrix> {
    CeOperator::new(g, rep).matrix(mu, p)
}

/// The whole complex `⋀𝔤* ⊗ V_μ ⊗ V_ρ`, degrees `0..=n`.
pub fn ce_complex(
    g: &LieAlgebraData,
    rep: &RepresentationData,
    mu: &Weight,
) -> Result<FiniteComplex> {
    let op = CeOperator::new(g, rep);
    let n = g.dim();
    let differentials = (0..n)
        .into_par_iter()
        .map(|p| op.matrix(mu, p))
        .collect::<Result<Vec<_>>>()?;
    let labels = (0..=n).map(|p| op.labels(p)).collect();
    FiniteComplex::new(differentials, labels)
}
