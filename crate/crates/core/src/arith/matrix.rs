//! Dense matrices over ℚ(i) with exact row reduction.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::gaussian::GaussianRational;

pub type Vector = Vec<GaussianRational>;

/// Pivot choice during elimination. Both rules yield the same reduced row
/// echelon form; they differ only in the order rows are used.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PivotRule {
    /// Row with the fewest nonzero entries among the candidates.
    #[default]
    Sparsest,
    /// Topmost candidate row.
    First,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<GaussianRational>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct RowEchelon {
    pub reduced: ExactMatrix,
    pub pivots: Vec<usize>,
}

impl RowEchelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Null space basis read off the reduced form: one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let cols = self.reduced.cols;
        let mut is_pivot = vec![false; cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![GaussianRational::zero(); cols];
                v[free] = GaussianRational::one();
                for (r, &p) in self.pivots.iter().enumerate() {
                    let e = &self.reduced[(r, free)];
                    if !e.is_zero() {
                        v[p] = -e;
                    }
                }
                v
            })
            .collect()
    }
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, entries: vec![GaussianRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ExactMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = GaussianRational::one();
        }
        m
    }

    pub fn diagonal(diag: &[GaussianRational]) -> Self {
        let mut m = ExactMatrix::zeros(diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m[(i, i)] = d.clone();
        }
        m
    }

    /// Builds a matrix from row vectors; all rows must share a length.
    pub fn from_rows(rows: Vec<Vector>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        ExactMatrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() }
    }

    pub fn from_columns(rows: usize, columns: &[Vector]) -> Self {
        let mut m = ExactMatrix::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (r, e) in col.iter().enumerate() {
                m[(r, c)] = e.clone();
            }
        }
        m
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        ExactMatrix::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&x| GaussianRational::from_integer(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn row(&self, r: usize) -> &[GaussianRational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn diagonal_entries(&self) -> Vector {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).collect()
    }

    /// Positions and values of nonzero entries in row-major order.
    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, &GaussianRational)> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .map(move |(idx, e)| (idx / self.cols.max(1), idx % self.cols.max(1), e))
    }

    pub fn transpose(&self) -> Self {
        let mut t = ExactMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn scale(&self, s: &GaussianRational) -> Self {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * s).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[GaussianRational]) -> Vector {
        assert_eq!(v.len(), self.cols, "dimension mismatch in mul_vec");
        (0..self.rows)
            .map(|r| {
                let mut acc = GaussianRational::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, e: u32) -> Self {
        assert!(self.is_square());
        let mut acc = ExactMatrix::identity(self.rows);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `self·other − other·self`.
    pub fn commutator(&self, other: &ExactMatrix) -> Self {
        &(self * other) - &(other * self)
    }

    /// Nilpotency test: `M^n = 0` for an `n×n` matrix.
    pub fn is_nilpotent(&self) -> bool {
        assert!(self.is_square());
        if self.rows == 0 {
            return true;
        }
        let mut p = self.clone();
        for _ in 1..self.rows {
            if p.is_zero() {
                return true;
            }
            p = &p * self;
        }
        p.is_zero()
    }

    pub fn row_echelon(&self) -> RowEchelon {
        self.row_echelon_with(PivotRule::default())
    }

    /// Exact Gauss–Jordan elimination to reduced row echelon form.
    pub fn row_echelon_with(&self, rule: PivotRule) -> RowEchelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let candidates = (row..m.rows).filter(|&r| !m[(r, col)].is_zero());
            let chosen = match rule {
                PivotRule::First => candidates.min(),
                PivotRule::Sparsest => candidates
                    .min_by_key(|&r| (m.row(r).iter().filter(|e| !e.is_zero()).count(), r)),
            };
            let Some(p) = chosen else { continue };
            m.swap_rows(row, p);
            let inv = m[(row, col)].inv().expect("pivot is nonzero");
            let support: Vec<usize> =
                (col..m.cols).filter(|&c| !m[(row, c)].is_zero()).collect();
            for &c in &support {
                let scaled = &m[(row, c)] * &inv;
                m[(row, c)] = scaled;
            }
            for r in 0..m.rows {
                if r == row || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone();
                for &c in &support {
                    let delta = &factor * &m[(row, c)];
                    m[(r, c)] -= &delta;
                }
            }
            pivots.push(col);
            row += 1;
        }
        RowEchelon { reduced: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.row_echelon().rank()
    }

    /// Exact rank and a basis of the right null space.
    pub fn rank_and_kernel(&self) -> (usize, Vec<Vector>) {
        let ech = self.row_echelon();
        (ech.rank(), ech.kernel_basis())
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = ExactMatrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, n + r)] = GaussianRational::one();
        }
        let ech = aug.row_echelon_with(PivotRule::First);
        if ech.pivots.len() < n || ech.pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = ExactMatrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv[(r, c)] = ech.reduced[(r, n + c)].clone();
            }
        }
        Some(inv)
    }

    /// Sub-matrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut m = ExactMatrix::zeros(rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                m[(i, j)] = self[(r, c)].clone();
            }
        }
        m
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

/// Rank of the span of a list of vectors of common length `dim`.
pub fn span_rank(dim: usize, vectors: &[Vector]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    ExactMatrix::from_columns(dim, vectors).rank()
}

impl Index<(usize, usize)> for ExactMatrix {
    type Output = GaussianRational;
    fn index(&self, (r, c): (usize, usize)) -> &GaussianRational {
        debug_assert!(r < self.rows && c < self.cols);
        &self.entries[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for ExactMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut GaussianRational {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.entries[r * self.cols + c]
    }
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = ExactMatrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = &rhs[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add for &ExactMatrix {
    type Output = ExactMatrix;
    fn add(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &ExactMatrix {
    type Output = ExactMatrix;
    fn sub(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &ExactMatrix {
    type Output = ExactMatrix;
    fn neg(self) -> ExactMatrix {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    #[test]
    fn identity_has_full_rank_and_no_kernel() {
        let (rank, kernel) = ExactMatrix::identity(3).rank_and_kernel();
        assert_eq!(rank, 3);
        assert!(kernel.is_empty());
    }

    #[test]
    fn gaussian_rank_one() {
        // second row is i times the first
        let m = ExactMatrix::from_rows(vec![vec![g("1"), g("i")], vec![g("i"), g("-1")]]);
        let (rank, kernel) = m.rank_and_kernel();
        assert_eq!(rank, 1);
        assert_eq!(kernel.len(), 1);
        assert!(m.mul_vec(&kernel[0]).iter().all(Zero::is_zero));
    }

    #[test]
    fn pivot_rules_agree_on_reduced_form() {
        let m = ExactMatrix::from_i64_rows(&[&[0, 2, 4, 1], &[1, 1, 0, 0], &[1, 3, 4, 1], &[0, 0, 0, 5]]);
        let a = m.row_echelon_with(PivotRule::First);
        let b = m.row_echelon_with(PivotRule::Sparsest);
        assert_eq!(a.pivots, b.pivots);
        assert_eq!(a.reduced, b.reduced);
        assert_eq!(a.rank(), 3);
    }

    #[test]
    fn inverse_round_trip() {
        let m = ExactMatrix::from_rows(vec![vec![g("2"), g("i")], vec![g("1"), g("1+i")]]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, ExactMatrix::identity(2));
        let singular = ExactMatrix::from_i64_rows(&[&[1, 2], &[2, 4]]);
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn nilpotency() {
        assert!(ExactMatrix::from_i64_rows(&[&[0, 1], &[0, 0]]).is_nilpotent());
        assert!(!ExactMatrix::from_i64_rows(&[&[1, 1], &[0, 0]]).is_nilpotent());
        assert!(ExactMatrix::zeros(0, 0).is_nilpotent());
    }

    #[test]
    fn empty_shapes() {
        let m = ExactMatrix::zeros(0, 3);
        let (rank, kernel) = m.rank_and_kernel();
        assert_eq!(rank, 0);
        assert_eq!(kernel.len(), 3);
        let m = ExactMatrix::zeros(2, 0);
        assert_eq!(m.rank_and_kernel(), (0, vec![]));
    }
}
