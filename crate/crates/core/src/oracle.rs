//! Brute-force check that each weight block of the invariant complex has the
//! cohomology of the full sector `⋀𝔤* ⊗ V_μ ⊗ V_ρ`.
//!
//! The differentials here are built by evaluating
//!
//! ```text
//! (dω)(X_{j0},…,X_{jp}) = Σ_a (−1)^a X_{ja}·ω(…X̂_{ja}…)
//!                        + Σ_{a<b} (−1)^{a+b} ω([X_{ja},X_{jb}], …X̂_{ja}…X̂_{jb}…)
//! ```
//!
//! on sorted basis tuples, with `ω = x_I ⊗ v_k` evaluated as a determinant.
//! Nothing from the graded-derivation builder is reused.

use itertools::Itertools;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::arith::{ExactMatrix, GaussianRational};
use crate::error::Result;
use crate::lie::{CohomologyResult, FiniteComplex, LieAlgebraData, RepresentationData};
use crate::weights::{build_invariant_complex, Weight, WeightAssignment};

/// Sorted subsets of `0..n` of size `p`, lexicographic.
fn subsets(n: usize, p: usize) -> Vec<Vec<usize>> {
    (0..n).combinations(p).collect()
}

/// `x_I(Y_1,…,Y_p)` for basis vectors `Y_t = X_{tuple[t]}`: the sign of the
/// sorting permutation when `tuple` is a rearrangement of `form`, else 0.
fn eval_form(form: &[usize], tuple: &[usize]) -> i32 {
    if form.len() != tuple.len() {
        return 0;
    }
    let mut sorted = tuple.to_vec();
    sorted.sort_unstable();
    if sorted != form {
        return 0;
    }
    let mut inversions = 0;
    for a in 0..tuple.len() {
        for b in a + 1..tuple.len() {
            if tuple[a] > tuple[b] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

fn sign(k: usize) -> GaussianRational {
    if k.is_multiple_of(2) {
        GaussianRational::one()
    } else {
        -GaussianRational::one()
    }
}

/// Matrix of `d_p` on `⋀^p𝔤* ⊗ V_μ ⊗ V_ρ`, rows `(J, l)` and columns `(I, k)`
/// ordered as `pos·m + index`.
pub fn evaluated_differential(
    g: &LieAlgebraData,
    rep: &RepresentationData,
    mu: &Weight,
    p: usize,
) -> ExactMatrix {
    let n = g.dim();
    let m = rep.dim();
    let source = subsets(n, p);
    let target = subsets(n, p + 1);
    let mut mu_at = vec![GaussianRational::zero(); n];
    for (q, &j) in g.complement().iter().enumerate() {
        mu_at[j] = mu.coords()[q].clone();
    }
    // action(j)[l][k]: coefficient of v_l in X_j·v_k
    let action = |j: usize, l: usize, k: usize| -> GaussianRational {
        let mut c = rep.matrix(j)[(l, k)].clone();
        if l == k {
            c += &mu_at[j];
        }
        c
    };

    let mut d = ExactMatrix::zeros(target.len() * m, source.len() * m);
    for (col_pos, form) in source.iter().enumerate() {
        for (row_pos, tuple) in target.iter().enumerate() {
            // value[l]: coefficient of v_l in (dω)(X_J), ω = x_I ⊗ v_k, for each k
            let mut value = vec![vec![GaussianRational::zero(); m]; m];
            for a in 0..=p {
                let rest: Vec<usize> =
                    tuple.iter().enumerate().filter(|&(t, _)| t != a).map(|(_, &x)| x).collect();
                let s = eval_form(form, &rest);
                if s == 0 {
                    continue;
                }
                let coef = sign(a) * GaussianRational::from_integer(s as i64);
                for (k, row) in value.iter_mut().enumerate() {
                    for (l, entry) in row.iter_mut().enumerate() {
                        let act = action(tuple[a], l, k);
                        if !act.is_zero() {
                            *entry += &coef * &act;
                        }
                    }
                }
            }
            for a in 0..=p {
                for b in a + 1..=p {
                    let rest: Vec<usize> = tuple
                        .iter()
                        .enumerate()
                        .filter(|&(t, _)| t != a && t != b)
                        .map(|(_, &x)| x)
                        .collect();
                    for c in 0..n {
                        let sc = g.structure_constant(tuple[a], tuple[b], c);
                        if sc.is_zero() {
                            continue;
                        }
                        let mut args = vec![c];
                        args.extend(&rest);
                        let s = eval_form(form, &args);
                        if s == 0 {
                            continue;
                        }
                        let coef = sign(a + b) * sc.clone() * GaussianRational::from_integer(s as i64);
                        for (k, row) in value.iter_mut().enumerate() {
                            row[k] += &coef;
                        }
                    }
                }
            }
            for (k, row) in value.into_iter().enumerate() {
                for (l, entry) in row.into_iter().enumerate() {
                    if !entry.is_zero() {
                        d[(row_pos * m + l, col_pos * m + k)] = entry;
                    }
                }
            }
        }
    }
    d
}

fn full_complex(g: &LieAlgebraData, rep: &RepresentationData, mu: &Weight) -> Result<FiniteComplex> {
    let n = g.dim();
    let m = rep.dim();
    let differentials: Vec<ExactMatrix> =
        (0..n).into_par_iter().map(|p| evaluated_differential(g, rep, mu, p)).collect();
    let labels = (0..=n)
        .map(|p| {
            subsets(n, p)
                .iter()
                .flat_map(|s| (0..m).map(move |k| format!("{s:?}⊗v{}", k + 1)))
                .collect()
        })
        .collect();
    FiniteComplex::new(differentials, labels)
}

/// Cohomology of the whole sector `⋀𝔤* ⊗ V_μ ⊗ V_ρ`, without any invariance
/// reduction.
pub fn sector_cohomology_full(
    g: &LieAlgebraData,
    rep: &RepresentationData,
    mu: &Weight,
) -> Result<CohomologyResult> {
    full_complex(g, rep, mu)?.cohomology()
}

/// Betti numbers of the whole sector.
pub fn sector_betti_full(g: &LieAlgebraData, rep: &RepresentationData, mu: &Weight) -> Result<Vec<usize>> {
    full_complex(g, rep, mu)?.betti_numbers()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectorReport {
    pub tag: Weight,
    /// Dimensions of the invariant block with this tag.
    pub block_dims: Vec<usize>,
    pub block_betti: Vec<usize>,
    pub full_betti: Vec<usize>,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiIsoReport {
    /// Sorted by tag.
    pub sectors: Vec<SectorReport>,
}

impl QuasiIsoReport {
    pub fn all_equal(&self) -> bool {
        self.sectors.iter().all(|s| s.equal)
    }
}

/// Compares every weight block of the invariant complex with the full sector
/// of the same tag.
pub fn verify_quasi_iso(
    g: &LieAlgebraData,
    rep: &RepresentationData,
    weights: &WeightAssignment,
) -> Result<QuasiIsoReport> {
    let ic = build_invariant_complex(g, rep, weights)?;
    let sectors = ic
        .distinct_tags()
        .into_par_iter()
        .map(|tag| {
            let block = ic.restrict(|t| t == &tag)?;
            let block_betti = block.complex().betti_numbers()?;
            let full_betti = sector_betti_full(g, rep, &tag)?;
            Ok(SectorReport {
                equal: block_betti == full_betti,
                block_dims: block.dims().to_vec(),
                block_betti,
                full_betti,
                tag,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(QuasiIsoReport { sectors })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{catalog, ce_differential, GroundMode};
    use crate::weights::infer_weights;

    #[test]
    fn agrees_with_graded_derivation_builder() {
        let cases = [
            (catalog::heisenberg3(), true),
            (catalog::complex_semidirect_3(), false),
            (catalog::complex_semidirect_real(), true),
        ];
        for (g, adjoint) in cases {
            let rep = if adjoint { RepresentationData::adjoint(&g) } else { RepresentationData::trivial(&g, 2) };
            let c = g.complement().len();
            let mu = Weight::new((0..c).map(|q| GaussianRational::from_integer(q as i64 + 2)).collect());
            for p in 0..=g.dim() {
                assert_eq!(
                    evaluated_differential(&g, &rep, &mu, p),
                    ce_differential(&g, &rep, &mu, p).unwrap(),
                    "degree {p}"
                );
            }
        }
    }

    #[test]
    fn sector_examples() {
        let h = catalog::heisenberg3();
        let triv = RepresentationData::trivial(&h, 1);
        assert_eq!(sector_cohomology_full(&h, &triv, &Weight::zero(0)).unwrap().betti, vec![1, 2, 2, 1]);

        // e2* ⊗ v_μ has total weight zero for μ(E1) = 1
        let g = catalog::complex_semidirect_3();
        let triv = RepresentationData::trivial(&g, 1);
        assert_eq!(sector_betti_full(&g, &triv, &Weight::from_i64(&[1])).unwrap(), vec![0, 1, 1, 0]);
        assert_eq!(sector_betti_full(&g, &triv, &Weight::from_i64(&[2])).unwrap(), vec![0; 4]);

        let a = catalog::abelian(1, GroundMode::Complex);
        let triv = RepresentationData::trivial(&a, 1);
        assert_eq!(sector_betti_full(&a, &triv, &Weight::zero(0)).unwrap(), vec![1, 1]);
        let line = LieAlgebraData::with_default_names(1, vec![], vec![], vec![0], GroundMode::Complex).unwrap();
        let triv = RepresentationData::trivial(&line, 1);
        assert_eq!(sector_betti_full(&line, &triv, &Weight::from_i64(&[1])).unwrap(), vec![0, 0]);
    }

    #[test]
    fn complex_example_sectors_agree() {
        let g = catalog::complex_semidirect_3();
        let rep = RepresentationData::trivial(&g, 1);
        let w = infer_weights(&g, &rep).unwrap();
        let r = verify_quasi_iso(&g, &rep, &w).unwrap();
        assert!(r.all_equal(), "{r:?}");
        assert_eq!(r.sectors.len(), 3);
    }

    #[test]
    fn nilpotent_has_one_sector() {
        let g = catalog::heisenberg3();
        let rep = RepresentationData::adjoint(&g);
        let w = infer_weights(&g, &rep).unwrap();
        let r = verify_quasi_iso(&g, &rep, &w).unwrap();
        assert_eq!(r.sectors.len(), 1);
        assert!(r.all_equal());
    }

    #[test]
    fn eval_form_signs() {
        assert_eq!(eval_form(&[0, 2], &[0, 2]), 1);
        assert_eq!(eval_form(&[0, 2], &[2, 0]), -1);
        assert_eq!(eval_form(&[0, 2], &[0, 1]), 0);
        assert_eq!(eval_form(&[0, 2], &[2, 2]), 0);
        assert_eq!(eval_form(&[], &[]), 1);
    }
}
