//! The invariant complex: `⋀𝔤* ⊗ V_ρ` with each basis element `x_I ⊗ v_k`
//! placed in its own weight module `V_μ`, `μ = Σ_{i∈I} λ_i − λ'_k`.

use rayon::prelude::*;

use crate::arith::ExactMatrix;
use crate::error::{Error, Result};
use crate::lie::exterior::indices_of;
use crate::lie::{CeOperator, FiniteComplex, LieAlgebraData, RepresentationData};

use super::assignment::WeightAssignment;
use super::weight::Weight;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InvariantLabel {
    /// Bit mask of the form indices `I`.
    pub form: u64,
    /// Index `k` of the representation basis vector.
    pub k: usize,
}

impl InvariantLabel {
    pub fn indices(&self) -> Vec<usize> {
        indices_of(self.form)
    }
}

#[derive(Clone, Debug)]
pub struct InvariantComplex {
    complex: FiniteComplex,
    labels: Vec<Vec<InvariantLabel>>,
    tags: Vec<Vec<Weight>>,
    /// Position of each basis element in the unrestricted complex.
    parent_index: Vec<Vec<usize>>,
}

impl InvariantComplex {
    pub fn complex(&self) -> &FiniteComplex {
        &self.complex
    }

    pub fn labels(&self, p: usize) -> &[InvariantLabel] {
        &self.labels[p]
    }

    pub fn tags(&self, p: usize) -> &[Weight] {
        &self.tags[p]
    }

    pub fn parent_index(&self, p: usize) -> &[usize] {
        &self.parent_index[p]
    }

    pub fn dims(&self) -> &[usize] {
        self.complex.dims()
    }

    /// Distinct tags over all degrees, sorted.
    pub fn distinct_tags(&self) -> Vec<Weight> {
        let mut all: Vec<Weight> = self.tags.iter().flatten().cloned().collect();
        all.sort();
        all.dedup();
        all
    }

    /// Subcomplex spanned by the basis elements whose tag satisfies `keep`.
    /// Fails if some kept element has a differential leaving the span.
    pub fn restrict<F>(&self, keep: F) -> Result<InvariantComplex>
    where
        F: Fn(&Weight) -> bool + Sync,
    {
        let top = self.dims().len();
        let selected: Vec<Vec<usize>> = (0..top)
            .map(|p| (0..self.dims()[p]).filter(|&i| keep(&self.tags[p][i])).collect())
            .collect();
        let mut differentials = Vec::with_capacity(top.saturating_sub(1));
        for p in 0..top.saturating_sub(1) {
            let d = self.complex.differential(p);
            let (src, dst) = (&selected[p], &selected[p + 1]);
            for &c in src {
                for r in 0..d.rows() {
                    if !num_traits::Zero::is_zero(&d[(r, c)]) && dst.binary_search(&r).is_err() {
                        return Err(Error::Internal(format!(
                            "selection is not a subcomplex: d({}) reaches {}",
                            self.complex.labels(p)[c],
                            self.complex.labels(p + 1)[r]
                        )));
                    }
                }
            }
            differentials.push(d.select(dst, src));
        }
        let pick = |p: usize| -> Vec<String> {
            selected[p].iter().map(|&i| self.complex.labels(p)[i].clone()).collect()
        };
        let complex = FiniteComplex::new(differentials, (0..top).map(pick).collect())?;
        Ok(InvariantComplex {
            complex,
            labels: (0..top)
                .map(|p| selected[p].iter().map(|&i| self.labels[p][i]).collect())
                .collect(),
            tags: (0..top)
                .map(|p| selected[p].iter().map(|&i| self.tags[p][i].clone()).collect())
                .collect(),
            parent_index: (0..top)
                .map(|p| selected[p].iter().map(|&i| self.parent_index[p][i]).collect())
                .collect(),
        })
    }
}

/// Builds the invariant complex. Each column is computed in its own weight
/// module; a coefficient on a basis element with a different tag is a
/// [`Error::WeightGrading`] failure.
pub fn build_invariant_complex(
    g: &LieAlgebraData,
    rep: &RepresentationData,
    weights: &WeightAssignment,
) -> Result<InvariantComplex> {
    weights.validate(g, rep).into_result()?;
    let op = CeOperator::new(g, rep);
    let n = g.dim();
    let m = rep.dim();
    let labels: Vec<Vec<InvariantLabel>> = (0..=n)
        .map(|p| {
            op.basis()
                .degree(p)
                .iter()
                .flat_map(|&form| (0..m).map(move |k| InvariantLabel { form, k }))
                .collect()
        })
        .collect();
    let tags: Vec<Vec<Weight>> = labels
        .iter()
        .map(|row| row.iter().map(|l| weights.tag(&l.indices(), l.k)).collect())
        .collect();
    let names: Vec<Vec<String>> = (0..=n).map(|p| op.labels(p)).collect();

    let differentials = (0..n)
        .into_par_iter()
        .map(|p| {
            let mut d = ExactMatrix::zeros(labels[p + 1].len(), labels[p].len());
            for (col, label) in labels[p].iter().enumerate() {
                let mu = &tags[p][col];
                for (row, c) in op.apply(label.form, label.k, &mu.on_basis(g)) {
                    if &tags[p + 1][row] != mu {
                        return Err(Error::WeightGrading {
                            source_label: names[p][col].clone(),
                            target_label: names[p + 1][row].clone(),
                        });
                    }
                    d[(row, col)] = c;
                }
            }
            Ok(d)
        })
        .collect::<Result<Vec<_>>>()?;
    let parent_index = labels.iter().map(|row| (0..row.len()).collect()).collect();
    Ok(InvariantComplex {
        complex: FiniteComplex::new(differentials, names)?,
        labels,
        tags,
        parent_index,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{catalog, ce_complex, exterior::mask_of};
    use crate::weights::infer_weights;

    fn real_example() -> (LieAlgebraData, RepresentationData, WeightAssignment) {
        let g = catalog::complex_semidirect_real();
        let rep = RepresentationData::adjoint(&g);
        let w = infer_weights(&g, &rep).unwrap();
        (g, rep, w)
    }

    #[test]
    fn degree_one_size_and_tags() {
        let (g, rep, w) = real_example();
        let inv = build_invariant_complex(&g, &rep, &w).unwrap();
        assert_eq!(inv.dims()[1], 36);
        let at = |form: &[usize], k: usize| {
            let i = inv.labels(1).iter().position(|l| *l == InvariantLabel { form: mask_of(form), k }).unwrap();
            inv.tags(1)[i].clone()
        };
        assert!(at(&[0], 0).is_zero());
        assert_eq!(at(&[0], 1), Weight::from_i64(&[1, -1]));
    }

    #[test]
    fn zero_weights_reproduce_plain_complex() {
        let g = catalog::heisenberg3();
        let rep = RepresentationData::adjoint(&g);
        let w = infer_weights(&g, &rep).unwrap();
        let inv = build_invariant_complex(&g, &rep, &w).unwrap();
        let plain = ce_complex(&g, &rep, &Weight::zero(0)).unwrap();
        assert_eq!(inv.complex(), &plain);
    }

    #[test]
    fn differential_is_block_diagonal() {
        let (g, rep, w) = real_example();
        let inv = build_invariant_complex(&g, &rep, &w).unwrap();
        for p in 0..6 {
            for (r, c, _) in inv.complex().differential(p).nonzeros() {
                assert_eq!(inv.tags(p + 1)[r], inv.tags(p)[c]);
            }
        }
        inv.complex().check_d_squared().unwrap();
    }

    #[test]
    fn restriction_to_one_tag() {
        let (g, rep, w) = real_example();
        let inv = build_invariant_complex(&g, &rep, &w).unwrap();
        let zero = inv.restrict(Weight::is_zero).unwrap();
        assert!(zero.tags(1).iter().all(Weight::is_zero));
        let total: usize = inv
            .distinct_tags()
            .iter()
            .map(|t| inv.restrict(|u| u == t).unwrap().dims()[2])
            .sum();
        assert_eq!(total, inv.dims()[2]);
    }

    #[test]
    fn complex_example_cohomology() {
        let g = catalog::complex_semidirect_3();
        let rep = RepresentationData::trivial(&g, 1);
        let w = infer_weights(&g, &rep).unwrap();
        let inv = build_invariant_complex(&g, &rep, &w).unwrap();
        let zero = inv.restrict(Weight::is_zero).unwrap();
        assert_eq!(zero.complex().betti_numbers().unwrap(), vec![1, 1, 1, 1]);
        assert_eq!(inv.complex().betti_numbers().unwrap(), vec![1, 3, 3, 1]);
    }
}
