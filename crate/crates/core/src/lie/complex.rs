//! Finite cochain complexes and their cohomology.

use rayon::prelude::*;

use crate::arith::{ExactMatrix, Vector};
use crate::error::{Error, Result};

/// Cochain complex concentrated in degrees `0..dims.len()`, with
/// `differentials[p]: C^p → C^{p+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteComplex {
    dims: Vec<usize>,
    differentials: Vec<ExactMatrix>,
    labels: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyResult {
    pub betti: Vec<usize>,
    /// Per degree, cocycles whose classes form a basis of `H^p`.
    pub representatives: Vec<Vec<Vector>>,
}

impl FiniteComplex {
    /// Builds a complex from its differentials and per-degree labels; there is
    /// one more degree than differentials. Shapes must compose.
    pub fn new(differentials: Vec<ExactMatrix>, labels: Vec<Vec<String>>) -> Result<Self> {
        if labels.len() != differentials.len() + 1 {
            return Err(Error::Dimension(format!(
                "{} label lists for {} differentials",
                labels.len(),
                differentials.len()
            )));
        }
        let dims: Vec<usize> = labels.iter().map(Vec::len).collect();
        for (p, d) in differentials.iter().enumerate() {
            if d.cols() != dims[p] || d.rows() != dims[p + 1] {
                return Err(Error::Dimension(format!(
                    "d_{p} is {}x{}, expected {}x{}",
                    d.rows(),
                    d.cols(),
                    dims[p + 1],
                    dims[p]
                )));
            }
        }
        Ok(FiniteComplex { dims, differentials, labels })
    }

    /// Complex with all differentials zero.
    pub fn zero(dims: &[usize]) -> Self {
        let labels: Vec<Vec<String>> = dims
            .iter()
            .enumerate()
            .map(|(p, &d)| (0..d).map(|i| format!("e{p}_{i}")).collect())
            .collect();
        let differentials = dims.windows(2).map(|w| ExactMatrix::zeros(w[1], w[0])).collect();
        FiniteComplex { dims: dims.to_vec(), differentials, labels }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn differentials(&self) -> &[ExactMatrix] {
        &self.differentials
    }

    pub fn differential(&self, p: usize) -> &ExactMatrix {
        &self.differentials[p]
    }

    pub fn labels(&self, p: usize) -> &[String] {
        &self.labels[p]
    }

    pub fn top_degree(&self) -> usize {
        self.dims.len().saturating_sub(1)
    }

    pub fn euler_characteristic(&self) -> i64 {
        alternating_sum(&self.dims)
    }

    /// First degree `p` with `d_{p+1} d_p ≠ 0`.
    pub fn check_d_squared(&self) -> Result<()> {
        let bad = self
            .differentials
            .par_windows(2)
            .enumerate()
            .filter(|(_, w)| !(&w[1] * &w[0]).is_zero())
            .map(|(p, _)| p)
            .min();
        match bad {
            Some(degree) => Err(Error::NotAComplex { degree }),
            None => Ok(()),
        }
    }

    fn ranks(&self) -> Vec<usize> {
        self.differentials.par_iter().map(ExactMatrix::rank).collect()
    }

    /// Betti numbers only.
    pub fn betti_numbers(&self) -> Result<Vec<usize>> {
        self.check_d_squared()?;
        let ranks = self.ranks();
        Ok(betti_from_ranks(&self.dims, &ranks))
    }

    /// Betti numbers and explicit cocycle representatives.
    pub fn cohomology(&self) -> Result<CohomologyResult> {
        self.check_d_squared()?;
        let per_degree: Vec<(usize, Vec<Vector>)> = (0..self.dims.len())
            .into_par_iter()
            .map(|p| self.degree_cohomology(p))
            .collect();
        let (betti, representatives) = per_degree.into_iter().unzip();
        Ok(CohomologyResult { betti, representatives })
    }

    fn degree_cohomology(&self, p: usize) -> (usize, Vec<Vector>) {
        let dim = self.dims[p];
        let cocycles = match self.differentials.get(p) {
            Some(d) => d.rank_and_kernel().1,
            None => (0..dim)
                .map(|i| {
                    let mut v = vec![Default::default(); dim];
                    v[i] = num_traits::One::one();
                    v
                })
                .collect(),
        };
        let boundaries: Vec<Vector> = match p.checked_sub(1) {
            Some(q) => {
                let d = &self.differentials[q];
                (0..d.cols()).map(|c| d.column(c)).collect()
            }
            None => Vec::new(),
        };
        if cocycles.is_empty() {
            return (0, Vec::new());
        }
        // Pivot columns of [boundaries | cocycles] beyond the boundary block
        // are cocycles independent modulo the image.
        let mut columns = boundaries;
        let offset = columns.len();
        columns.extend(cocycles.iter().cloned());
        let ech = ExactMatrix::from_columns(dim, &columns).row_echelon();
        let reps: Vec<Vector> = ech
            .pivots
            .iter()
            .filter(|&&c| c >= offset)
            .map(|&c| columns[c].clone())
            .collect();
        (reps.len(), reps)
    }
}

pub fn betti_from_ranks(dims: &[usize], ranks: &[usize]) -> Vec<usize> {
    (0..dims.len())
        .map(|p| {
            let out_rank = ranks.get(p).copied().unwrap_or(0);
            let in_rank = p.checked_sub(1).map_or(0, |q| ranks[q]);
            dims[p] - out_rank - in_rank
        })
        .collect()
}

pub fn alternating_sum(values: &[usize]) -> i64 {
    values
        .iter()
        .enumerate()
        .map(|(p, &d)| if p % 2 == 0 { d as i64 } else { -(d as i64) })
        .sum()
}

/// Cohomology of a complex.
pub fn cohomology(c: &FiniteComplex) -> Result<CohomologyResult> {
    c.cohomology()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{catalog, ce_complex, RepresentationData};
    use crate::weights::Weight;

    #[test]
    fn heisenberg_trivial_coefficients() {
        let g = catalog::heisenberg3();
        let rep = RepresentationData::trivial(&g, 1);
        let c = ce_complex(&g, &rep, &Weight::zero(0)).unwrap();
        let h = c.cohomology().unwrap();
        assert_eq!(h.betti, vec![1, 2, 2, 1]);
        for (p, reps) in h.representatives.iter().enumerate() {
            assert_eq!(reps.len(), h.betti[p]);
            if let Some(d) = c.differentials().get(p) {
                for r in reps {
                    assert!(d.mul_vec(r).iter().all(num_traits::Zero::is_zero));
                }
            }
        }
    }

    #[test]
    fn solvable_complex_algebra_trivial_coefficients() {
        let g = catalog::complex_semidirect_3();
        let rep = RepresentationData::trivial(&g, 1);
        let c = ce_complex(&g, &rep, &Weight::zero(1)).unwrap();
        assert_eq!(c.betti_numbers().unwrap(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn zero_complex_betti_equals_dims() {
        let c = FiniteComplex::zero(&[2, 5, 0, 3]);
        assert_eq!(c.cohomology().unwrap().betti, vec![2, 5, 0, 3]);
    }

    #[test]
    fn detects_nonzero_square() {
        let one = ExactMatrix::identity(1);
        let labels = vec![vec!["a".into()], vec!["b".into()], vec!["c".into()]];
        let c = FiniteComplex::new(vec![one.clone(), one], labels).unwrap();
        assert!(matches!(c.cohomology(), Err(Error::NotAComplex { degree: 0 })));
    }

    #[test]
    fn rejects_mismatched_shapes() {
        let labels = vec![vec!["a".into()], vec!["b".into(), "c".into()]];
        assert!(FiniteComplex::new(vec![ExactMatrix::zeros(1, 1)], labels).is_err());
    }

    #[test]
    fn point_complex() {
        let g = catalog::abelian(0, crate::lie::GroundMode::Complex);
        let rep = RepresentationData::trivial(&g, 1);
        let c = ce_complex(&g, &rep, &Weight::zero(0)).unwrap();
        assert_eq!(c.cohomology().unwrap().betti, vec![1]);
    }
}
