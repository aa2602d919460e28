//! Lie algebras given by structure constants on a nilradical-adapted basis.

use std::fmt;

use num_traits::Zero;

use crate::arith::{ExactMatrix, GaussianRational, Vector};
use crate::error::{Error, Result};

/// Largest supported dimension; exterior basis elements are stored as `u64`
/// bit masks.
pub const MAX_DIM: usize = 63;

/// Whether the algebra is the complexification of a real algebra (with a
/// conjugation on basis indices) or a complex Lie algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroundMode {
    RealComplexified,
    Complex,
}

impl fmt::Display for GroundMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroundMode::RealComplexified => "real-complexified",
            GroundMode::Complex => "complex",
        })
    }
}

/// `[X_left, X_right] ∋ coeff · X_out`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bracket {
    pub left: usize,
    pub right: usize,
    pub out: usize,
    pub coeff: GaussianRational,
}

impl Bracket {
    pub fn new(left: usize, right: usize, out: usize, coeff: GaussianRational) -> Self {
        Bracket { left, right, out, coeff }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebraData {
    basis_names: Vec<String>,
    brackets: Vec<Bracket>,
    nilradical: Vec<usize>,
    complement: Vec<usize>,
    conjugation: Option<Vec<usize>>,
    ground: GroundMode,
    /// `table[i][j][k]`: coefficient of `X_k` in `[X_i, X_j]`, antisymmetrized.
    table: Vec<Vec<Vector>>,
    /// Stated brackets that disagree with antisymmetry, kept for validation.
    antisymmetry_conflicts: Vec<(usize, usize)>,
}

/// One failed invariant, with a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Antisymmetry { i: usize, j: usize },
    Jacobi { i: usize, j: usize, k: usize },
    NilradicalNotIdeal { i: usize, j: usize, k: usize },
    NilradicalNotNilpotent { series: Vec<usize> },
    IndexUncovered { index: usize },
    IndexInBothParts { index: usize },
    ConjugationNotInvolution { index: usize },
    ConjugationIncompatible { i: usize, j: usize, k: usize },
    ConjugationInComplexMode,
    ComplementNotConjugationStable { index: usize },
    RepresentationShape { index: usize },
    RepresentationHomomorphism { i: usize, j: usize },
    RepresentationNotUnipotent { index: usize },
    WeightShape { what: String },
    WeightResidueNotNilpotent { operator: String, complement_index: usize },
    WeightResidueNotCommuting { operator: String, complement_index: usize },
    WeightAdditivity { i: usize, j: usize, k: usize },
    RepWeightCompatibility { algebra_index: usize, row: usize, col: usize },
    LatticeShape { generator: usize, coords: usize },
    LatticeNotConjugationStable { generator: usize, index: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Violation::*;
        match self {
            Antisymmetry { i, j } => write!(f, "antisymmetry fails for brackets ({i},{j}) and ({j},{i})"),
            Jacobi { i, j, k } => write!(f, "Jacobi identity fails on ({i},{j},{k})"),
            NilradicalNotIdeal { i, j, k } => write!(
                f,
                "[X{i},X{j}] has a component on X{k} outside the nilradical"
            ),
            NilradicalNotNilpotent { series } => {
                write!(f, "nilradical is not nilpotent (lower central series {series:?})")
            }
            IndexUncovered { index } => {
                write!(f, "index {index} is in neither the nilradical nor the complement")
            }
            IndexInBothParts { index } => {
                write!(f, "index {index} is in both the nilradical and the complement")
            }
            ConjugationNotInvolution { index } => {
                write!(f, "conjugation is not an involution at index {index}")
            }
            ConjugationIncompatible { i, j, k } => write!(
                f,
                "structure constant c({i},{j};{k}) does not conjugate to its paired constant"
            ),
            ConjugationInComplexMode => write!(f, "conjugation table given in complex mode"),
            ComplementNotConjugationStable { index } => {
                write!(f, "conjugation maps complement index {index} outside the complement")
            }
            RepresentationShape { index } => {
                write!(f, "representation matrix {index} has the wrong shape")
            }
            RepresentationHomomorphism { i, j } => write!(
                f,
                "representation does not respect the bracket [X{i},X{j}]"
            ),
            RepresentationNotUnipotent { index } => {
                write!(f, "representation matrix of nilradical index {index} is not nilpotent")
            }
            WeightShape { what } => write!(f, "weight table has the wrong shape: {what}"),
            WeightResidueNotNilpotent { operator, complement_index } => write!(
                f,
                "{operator}(X{complement_index}) minus its declared weights is not nilpotent"
            ),
            WeightResidueNotCommuting { operator, complement_index } => write!(
                f,
                "declared weights of {operator}(X{complement_index}) do not commute with it"
            ),
            WeightAdditivity { i, j, k } => write!(
                f,
                "[X{i},X{j}] has a component on X{k} but weight(i)+weight(j) ≠ weight(k)"
            ),
            RepWeightCompatibility { algebra_index, row, col } => write!(
                f,
                "entry ({row},{col}) of representation matrix {algebra_index} breaks weight compatibility"
            ),
            LatticeShape { generator, coords } => write!(
                f,
                "lattice generator {generator} has {coords} coordinates, expected one per complement index"
            ),
            LatticeNotConjugationStable { generator, index } => write!(
                f,
                "lattice generator {generator}: coordinate at the conjugate of X{index} is not the conjugate of its coordinate"
            ),
        }
    }
}

/// Result of a validator: empty means pass.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_pass(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn merge(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
    }

    pub fn into_result(self) -> Result<()> {
        if self.is_pass() {
            Ok(())
        } else {
            Err(Error::Invalid(self))
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("pass");
        }
        for (n, v) in self.violations.iter().enumerate() {
            if n > 0 {
                writeln!(f)?;
            }
            write!(f, "  - {v}")?;
        }
        Ok(())
    }
}

impl LieAlgebraData {
    /// Builds the structure-constant table. Index-range and shape problems
    /// are hard errors; algebraic invariants are left to [`Self::validate`].
    pub fn new(
        basis_names: Vec<String>,
        brackets: Vec<Bracket>,
        nilradical: Vec<usize>,
        complement: Vec<usize>,
        conjugation: Option<Vec<usize>>,
        ground: GroundMode,
    ) -> Result<Self> {
        let n = basis_names.len();
        if n > MAX_DIM {
            return Err(Error::Dimension(format!("dimension {n} exceeds {MAX_DIM}")));
        }
        let in_range = |i: usize| i < n;
        if let Some(b) = brackets
            .iter()
            .find(|b| !(in_range(b.left) && in_range(b.right) && in_range(b.out)))
        {
            return Err(Error::Dimension(format!(
                "bracket ({},{},{}) refers to an index ≥ {n}",
                b.left, b.right, b.out
            )));
        }
        if let Some(i) = nilradical.iter().chain(&complement).find(|&&i| !in_range(i)) {
            return Err(Error::Dimension(format!("index {i} out of range for dimension {n}")));
        }
        if let Some(conj) = &conjugation {
            if conj.len() != n || conj.iter().any(|&i| !in_range(i)) {
                return Err(Error::Dimension("conjugation must map every index into range".into()));
            }
        }

        let mut stated = vec![vec![vec![GaussianRational::zero(); n]; n]; n];
        let mut given = vec![vec![false; n]; n];
        for b in &brackets {
            stated[b.left][b.right][b.out] += &b.coeff;
            given[b.left][b.right] = true;
        }
        let mut table = vec![vec![vec![GaussianRational::zero(); n]; n]; n];
        let mut conflicts = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    if stated[i][i].iter().any(|c| !c.is_zero()) {
                        conflicts.push((i, i));
                    }
                    continue;
                }
                if given[i][j] && given[j][i] && i < j {
                    let consistent =
                        (0..n).all(|k| (&stated[i][j][k] + &stated[j][i][k]).is_zero());
                    if !consistent {
                        conflicts.push((i, j));
                    }
                }
                for k in 0..n {
                    table[i][j][k] = if given[i][j] {
                        stated[i][j][k].clone()
                    } else if given[j][i] {
                        -&stated[j][i][k]
                    } else {
                        GaussianRational::zero()
                    };
                }
            }
        }
        let mut nilradical = nilradical;
        nilradical.sort_unstable();
        nilradical.dedup();
        let complement_sorted = {
            let mut c = complement.clone();
            c.sort_unstable();
            c.dedup();
            c
        };
        Ok(LieAlgebraData {
            basis_names,
            brackets,
            nilradical,
            complement: complement_sorted,
            conjugation,
            ground,
            table,
            antisymmetry_conflicts: conflicts,
        })
    }

    /// Convenience constructor naming the basis `X1..Xn`.
    pub fn with_default_names(
        n: usize,
        brackets: Vec<Bracket>,
        nilradical: Vec<usize>,
        complement: Vec<usize>,
        ground: GroundMode,
    ) -> Result<Self> {
        let names = (1..=n).map(|i| format!("X{i}")).collect();
        LieAlgebraData::new(names, brackets, nilradical, complement, None, ground)
    }

    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn brackets(&self) -> &[Bracket] {
        &self.brackets
    }

    pub fn nilradical(&self) -> &[usize] {
        &self.nilradical
    }

    pub fn complement(&self) -> &[usize] {
        &self.complement
    }

    pub fn conjugation(&self) -> Option<&[usize]> {
        self.conjugation.as_deref()
    }

    pub fn ground(&self) -> GroundMode {
        self.ground
    }

    /// Position of a basis index inside the complement, if it belongs there.
    pub fn complement_position(&self, index: usize) -> Option<usize> {
        self.complement.iter().position(|&c| c == index)
    }

    /// Coefficient of `X_k` in `[X_i, X_j]`.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &GaussianRational {
        &self.table[i][j][k]
    }

    /// Coordinates of `[X_i, X_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[GaussianRational] {
        &self.table[i][j]
    }

    pub fn bracket(&self, u: &[GaussianRational], v: &[GaussianRational]) -> Vector {
        let n = self.dim();
        let mut out = vec![GaussianRational::zero(); n];
        for i in 0..n {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if v[j].is_zero() || i == j {
                    continue;
                }
                let uv = &u[i] * &v[j];
                for (k, c) in self.table[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &uv * c;
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ad(X_i)`: column `j` holds `[X_i, X_j]`.
    pub fn ad(&self, i: usize) -> ExactMatrix {
        let n = self.dim();
        let mut m = ExactMatrix::zeros(n, n);
        for j in 0..n {
            for k in 0..n {
                m[(k, j)] = self.table[i][j][k].clone();
            }
        }
        m
    }

    /// Canonical bracket list: one entry per nonzero `c(i,j;k)` with `i < j`.
    pub fn canonical_brackets(&self) -> Vec<Bracket> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in 0..n {
                    let c = &self.table[i][j][k];
                    if !c.is_zero() {
                        out.push(Bracket::new(i, j, k, c.clone()));
                    }
                }
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().flatten().flatten().all(Zero::is_zero)
    }

    /// Dimensions of `𝔥, [𝔥,𝔥], [𝔥,[𝔥,𝔥]], …` for the subalgebra spanned by
    /// the given basis indices, stopping at zero or once the dimension no
    /// longer drops.
    pub fn lower_central_series(&self, indices: &[usize]) -> Vec<usize> {
        let n = self.dim();
        let unit = |i: usize| {
            let mut v = vec![GaussianRational::zero(); n];
            v[i] = GaussianRational::from_integer(1);
            v
        };
        let mut current: Vec<Vector> = indices.iter().map(|&i| unit(i)).collect();
        let mut series = vec![current.len()];
        loop {
            if current.is_empty() {
                return series;
            }
            let mut next = Vec::new();
            for &i in indices {
                let ui = unit(i);
                for v in &current {
                    let b = self.bracket(&ui, v);
                    if b.iter().any(|c| !c.is_zero()) {
                        next.push(b);
                    }
                }
            }
            let basis = independent_subset(n, next);
            let d = basis.len();
            if d >= *series.last().unwrap() {
                return series;
            }
            series.push(d);
            current = basis;
        }
    }

    /// True when the lower central series of the given span reaches zero.
    pub fn is_nilpotent_on(&self, indices: &[usize]) -> bool {
        self.lower_central_series(indices).last() == Some(&0)
    }

    /// Checks every structural invariant and lists the violations found.
    pub fn validate(&self) -> ValidationReport {
        let n = self.dim();
        let mut v = Vec::new();
        for &(i, j) in &self.antisymmetry_conflicts {
            v.push(Violation::Antisymmetry { i, j });
        }
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if !self.jacobi_holds(i, j, k) {
                        v.push(Violation::Jacobi { i, j, k });
                    }
                }
            }
        }

        let mut in_nil = vec![false; n];
        for &i in &self.nilradical {
            in_nil[i] = true;
        }
        let mut in_comp = vec![false; n];
        for &i in &self.complement {
            in_comp[i] = true;
        }
        for index in 0..n {
            match (in_nil[index], in_comp[index]) {
                (false, false) => v.push(Violation::IndexUncovered { index }),
                (true, true) => v.push(Violation::IndexInBothParts { index }),
                _ => {}
            }
        }
        // An index-spanned subspace is an ideal containing [𝔤,𝔤] exactly when
        // every bracket lands inside it.
        for i in 0..n {
            for j in i + 1..n {
                for k in 0..n {
                    if !in_nil[k] && !self.table[i][j][k].is_zero() {
                        v.push(Violation::NilradicalNotIdeal { i, j, k });
                    }
                }
            }
        }
        let series = self.lower_central_series(&self.nilradical);
        if series.last() != Some(&0) {
            v.push(Violation::NilradicalNotNilpotent { series });
        }

        match (&self.conjugation, self.ground) {
            (Some(_), GroundMode::Complex) => v.push(Violation::ConjugationInComplexMode),
            (Some(conj), GroundMode::RealComplexified) => {
                for index in 0..n {
                    if conj[conj[index]] != index {
                        v.push(Violation::ConjugationNotInvolution { index });
                    }
                }
                for &c in &self.complement {
                    if !in_comp[conj[c]] {
                        v.push(Violation::ComplementNotConjugationStable { index: c });
                    }
                }
                if v.iter().all(|x| !matches!(x, Violation::ConjugationNotInvolution { .. })) {
                    for i in 0..n {
                        for j in i + 1..n {
                            for k in 0..n {
                                let c = &self.table[i][j][k];
                                let paired = &self.table[conj[i]][conj[j]][conj[k]];
                                if c.conj() != *paired {
                                    v.push(Violation::ConjugationIncompatible { i, j, k });
                                }
                            }
                        }
                    }
                }
            }
            (None, _) => {}
        }
        ValidationReport { violations: v }
    }

    fn jacobi_holds(&self, i: usize, j: usize, k: usize) -> bool {
        let n = self.dim();
        // [X_i,[X_j,X_k]] + [X_j,[X_k,X_i]] + [X_k,[X_i,X_j]]
        let mut total = vec![GaussianRational::zero(); n];
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            for (m, coef) in self.table[b][c].iter().enumerate() {
                if coef.is_zero() {
                    continue;
                }
                for (out, c2) in self.table[a][m].iter().enumerate() {
                    if !c2.is_zero() {
                        total[out] += coef * c2;
                    }
                }
            }
        }
        total.iter().all(Zero::is_zero)
    }
}

/// Greedy linearly independent subset, in input order.
fn independent_subset(dim: usize, vectors: Vec<Vector>) -> Vec<Vector> {
    if vectors.is_empty() {
        return vectors;
    }
    let m = ExactMatrix::from_columns(dim, &vectors);
    let ech = m.row_echelon();
    ech.pivots.iter().map(|&c| vectors[c].clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::catalog;

    #[test]
    fn heisenberg_passes() {
        let g = catalog::heisenberg3();
        assert!(g.validate().is_pass(), "{}", g.validate());
        assert_eq!(g.lower_central_series(&[0, 1, 2]), vec![3, 1, 0]);
    }

    #[test]
    fn example_real_algebra_passes() {
        let g = catalog::complex_semidirect_real();
        assert!(g.validate().is_pass(), "{}", g.validate());
        assert_eq!(g.structure_constant(0, 4, 0), &GaussianRational::from_integer(-1));
    }

    #[test]
    fn jacobi_breaking_bracket_is_reported() {
        // [X1,X2]=X3, [X1,X3]=X1: the Jacobi sum on (1,2,3) is X3
        let b = |l, r, o, c| Bracket::new(l, r, o, GaussianRational::from_integer(c));
        let g = LieAlgebraData::with_default_names(
            3,
            vec![b(0, 1, 2, 1), b(0, 2, 0, 1)],
            vec![0, 1, 2],
            vec![],
            GroundMode::Complex,
        )
        .unwrap();
        let report = g.validate();
        assert!(report.violations.contains(&Violation::Jacobi { i: 0, j: 1, k: 2 }), "{report}");
    }

    fn with_extra(extra: Bracket) -> LieAlgebraData {
        let g = catalog::complex_semidirect_real();
        let mut brackets = g.brackets().to_vec();
        brackets.push(extra);
        LieAlgebraData::new(
            g.basis_names().to_vec(),
            brackets,
            g.nilradical().to_vec(),
            g.complement().to_vec(),
            g.conjugation().map(<[usize]>::to_vec),
            g.ground(),
        )
        .unwrap()
    }

    #[test]
    fn extra_bracket_on_example_algebra_breaks_jacobi() {
        // [v1, v3] = v1 is not compatible with the action of v5
        let report = with_extra(Bracket::new(0, 2, 0, GaussianRational::from_integer(1))).validate();
        assert!(report.violations.contains(&Violation::Jacobi { i: 0, j: 2, k: 4 }), "{report}");
    }

    #[test]
    fn bracket_leaving_the_nilradical_is_reported() {
        let report = with_extra(Bracket::new(0, 2, 4, GaussianRational::from_integer(1))).validate();
        assert!(
            report.violations.contains(&Violation::NilradicalNotIdeal { i: 0, j: 2, k: 4 }),
            "{report}"
        );
        assert!(!report.violations.iter().any(|v| matches!(v, Violation::Jacobi { .. })));
    }

    #[test]
    fn antisymmetry_conflict_and_partition_problems() {
        let b = |l, r, o, c| Bracket::new(l, r, o, GaussianRational::from_integer(c));
        let g = LieAlgebraData::with_default_names(
            3,
            vec![b(0, 1, 2, 1), b(1, 0, 2, 1)],
            vec![1, 2],
            vec![2],
            GroundMode::Complex,
        )
        .unwrap();
        let r = g.validate();
        assert!(r.violations.contains(&Violation::Antisymmetry { i: 0, j: 1 }));
        assert!(r.violations.contains(&Violation::IndexUncovered { index: 0 }));
        assert!(r.violations.contains(&Violation::IndexInBothParts { index: 2 }));
    }

    #[test]
    fn non_nilpotent_nilradical_is_reported() {
        let g = catalog::complex_semidirect_3();
        let bad = LieAlgebraData::with_default_names(
            3,
            g.brackets().to_vec(),
            vec![0, 1, 2],
            vec![],
            GroundMode::Complex,
        )
        .unwrap();
        let r = bad.validate();
        assert!(r
            .violations
            .iter()
            .any(|v| matches!(v, Violation::NilradicalNotNilpotent { .. })));
    }

    #[test]
    fn out_of_range_indices_are_errors() {
        let b = Bracket::new(0, 5, 1, GaussianRational::from_integer(1));
        assert!(LieAlgebraData::with_default_names(2, vec![b], vec![0, 1], vec![], GroundMode::Complex).is_err());
    }

    #[test]
    fn derived_algebra_quotient() {
        // b1 = n − dim [g,g]; the real example has [g,g] = span(v1..v4)
        let g = catalog::complex_semidirect_real();
        let n = g.dim();
        let all: Vec<usize> = (0..n).collect();
        assert_eq!(g.lower_central_series(&all)[1], 4);
    }
}
