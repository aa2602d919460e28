//! Additive Jordan–Chevalley decomposition over ℚ(i).
//!
//! The semisimple part is computed twice: by the Newton iteration
//! `S ← S − p(S)·p'(S)⁻¹` on the square-free part `p` of the characteristic
//! polynomial (which yields a polynomial in `M`), and from the generalized
//! eigenspace decomposition. The two must agree exactly.

use crate::arith::poly::{characteristic_polynomial, factor_linear, Poly};
use crate::arith::{ExactMatrix, GaussianRational, Vector};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanDecomposition {
    pub semisimple: ExactMatrix,
    pub nilpotent: ExactMatrix,
    /// Distinct eigenvalues with algebraic multiplicities.
    pub eigenvalues: Vec<(GaussianRational, usize)>,
}

/// Splits `M = S + N` with `S` diagonalizable over ℚ(i), `N` nilpotent and
/// `SN = NS`.
pub fn jordan_chevalley_additive(m: &ExactMatrix) -> Result<JordanDecomposition> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "Jordan decomposition of a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    if n == 0 {
        return Ok(JordanDecomposition {
            semisimple: m.clone(),
            nilpotent: m.clone(),
            eigenvalues: Vec::new(),
        });
    }
    let chi = characteristic_polynomial(m);
    let factored = factor_linear(&chi)?;
    if !factored.splits() {
        return Err(Error::ExtendScalars { factor: factored.residual.to_string() });
    }

    let by_newton = newton_semisimple(m, &chi)?;
    let by_projection = eigenprojection_semisimple(m, &factored.roots)?;
    if by_newton != by_projection {
        return Err(Error::Internal(
            "semisimple parts from Newton iteration and eigenprojections differ".into(),
        ));
    }
    let nilpotent = m - &by_newton;
    if !by_newton.commutator(&nilpotent).is_zero() || !nilpotent.is_nilpotent() {
        return Err(Error::Internal("Jordan parts fail S·N = N·S or N nilpotent".into()));
    }
    Ok(JordanDecomposition { semisimple: by_newton, nilpotent, eigenvalues: factored.roots })
}

fn newton_semisimple(m: &ExactMatrix, chi: &Poly) -> Result<ExactMatrix> {
    let p = chi.square_free_part();
    let dp = p.derivative();
    let mut s = m.clone();
    // Quadratic convergence: log2(n) + 1 steps suffice.
    for _ in 0..=usize::BITS {
        let ps = p.eval_matrix(&s);
        if ps.is_zero() {
            return Ok(s);
        }
        let inv = dp
            .eval_matrix(&s)
            .inverse()
            .ok_or_else(|| Error::Internal("p'(S) not invertible in Newton step".into()))?;
        s = &s - &(&ps * &inv);
    }
    Err(Error::Internal("Newton iteration for the semisimple part did not terminate".into()))
}

fn eigenprojection_semisimple(
    m: &ExactMatrix,
    roots: &[(GaussianRational, usize)],
) -> Result<ExactMatrix> {
    let n = m.rows();
    let mut columns: Vec<Vector> = Vec::with_capacity(n);
    let mut diag = Vec::with_capacity(n);
    for (r, mult) in roots {
        let shifted = m - &ExactMatrix::identity(n).scale(r);
        let generalized = shifted.pow(*mult as u32).rank_and_kernel().1;
        if generalized.len() != *mult {
            return Err(Error::Internal(format!(
                "generalized eigenspace of {r} has dimension {} instead of {mult}",
                generalized.len()
            )));
        }
        diag.extend(std::iter::repeat_n(r.clone(), *mult));
        columns.extend(generalized);
    }
    let t = ExactMatrix::from_columns(n, &columns);
    let t_inv = t
        .inverse()
        .ok_or_else(|| Error::Internal("generalized eigenvectors are dependent".into()))?;
    Ok(&(&t * &ExactMatrix::diagonal(&diag)) * &t_inv)
}

/// True when `m` is diagonalizable over ℚ(i).
pub fn is_semisimple(m: &ExactMatrix) -> Result<bool> {
    Ok(jordan_chevalley_additive(m)?.nilpotent.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    #[test]
    fn unipotent_jordan_block() {
        let m = ExactMatrix::from_i64_rows(&[&[1, 1], &[0, 1]]);
        let j = jordan_chevalley_additive(&m).unwrap();
        assert_eq!(j.semisimple, ExactMatrix::identity(2));
        assert_eq!(j.nilpotent, ExactMatrix::from_i64_rows(&[&[0, 1], &[0, 0]]));
    }

    #[test]
    fn diagonal_is_semisimple() {
        let m = ExactMatrix::from_i64_rows(&[&[2, 0], &[0, 3]]);
        let j = jordan_chevalley_additive(&m).unwrap();
        assert_eq!(j.semisimple, m);
        assert!(j.nilpotent.is_zero());
    }

    #[test]
    fn distinct_eigenvalues_force_semisimplicity() {
        let m = ExactMatrix::from_i64_rows(&[&[2, 1], &[0, 3]]);
        let j = jordan_chevalley_additive(&m).unwrap();
        assert_eq!(j.semisimple, m);
        assert!(j.nilpotent.is_zero());
        assert_eq!(j.eigenvalues, vec![(g("2"), 1), (g("3"), 1)]);
    }

    #[test]
    fn mixed_blocks_over_gaussian_rationals() {
        // rotation block with eigenvalues ±i next to a Jordan block for 1/2
        let m = ExactMatrix::from_rows(vec![
            vec![g("0"), g("-1"), g("0"), g("0")],
            vec![g("1"), g("0"), g("0"), g("0")],
            vec![g("0"), g("0"), g("1/2"), g("1")],
            vec![g("0"), g("0"), g("0"), g("1/2")],
        ]);
        let j = jordan_chevalley_additive(&m).unwrap();
        assert_eq!(&j.semisimple + &j.nilpotent, m);
        assert!(j.semisimple.commutator(&j.nilpotent).is_zero());
        assert!(j.nilpotent.is_nilpotent());
        assert_eq!(j.nilpotent.rank(), 1);
    }

    #[test]
    fn non_split_polynomial_asks_to_extend_scalars() {
        // x² − 2
        let m = ExactMatrix::from_i64_rows(&[&[0, 2], &[1, 0]]);
        match jordan_chevalley_additive(&m) {
            Err(Error::ExtendScalars { factor }) => assert_eq!(factor, "x^2 - 2"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn non_square_is_rejected() {
        assert!(jordan_chevalley_additive(&ExactMatrix::zeros(2, 3)).is_err());
    }
}
