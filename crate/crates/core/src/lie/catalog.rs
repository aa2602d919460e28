//! Small algebras used throughout the tests and shipped instances.

use crate::arith::GaussianRational;

use super::algebra::{Bracket, GroundMode, LieAlgebraData};

fn b(left: usize, right: usize, out: usize, c: i64) -> Bracket {
    Bracket::new(left, right, out, GaussianRational::from_integer(c))
}

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

/// Three-dimensional Heisenberg algebra `[X,Y] = Z`, nilpotent.
pub fn heisenberg3() -> LieAlgebraData {
    LieAlgebraData::new(
        names(&["X", "Y", "Z"]),
        vec![b(0, 1, 2, 1)],
        vec![0, 1, 2],
        vec![],
        None,
        GroundMode::RealComplexified,
    )
    .expect("static data")
}

/// Abelian algebra of dimension `n`.
pub fn abelian(n: usize, ground: GroundMode) -> LieAlgebraData {
    LieAlgebraData::with_default_names(n, vec![], (0..n).collect(), vec![], ground)
        .expect("static data")
}

/// Complexification of the real Lie algebra of `ℂ ⋉_φ ℂ²` with
/// `φ(w) = diag(e^w, e^{−w})`, on the basis `v1..v6` where `v5 = ∂_w`,
/// `v6 = ∂_w̄`: `[v5,v1]=v1, [v6,v2]=v2, [v5,v3]=−v3, [v6,v4]=−v4`.
pub fn complex_semidirect_real() -> LieAlgebraData {
    LieAlgebraData::new(
        names(&["v1", "v2", "v3", "v4", "v5", "v6"]),
        vec![b(4, 0, 0, 1), b(5, 1, 1, 1), b(4, 2, 2, -1), b(5, 3, 3, -1)],
        vec![0, 1, 2, 3],
        vec![4, 5],
        Some(vec![1, 0, 3, 2, 5, 4]),
        GroundMode::RealComplexified,
    )
    .expect("static data")
}

/// The same group as a complex Lie algebra: `[E1,E2]=E2, [E1,E3]=−E3`.
pub fn complex_semidirect_3() -> LieAlgebraData {
    LieAlgebraData::new(
        names(&["E1", "E2", "E3"]),
        vec![b(0, 1, 1, 1), b(0, 2, 2, -1)],
        vec![1, 2],
        vec![0],
        None,
        GroundMode::Complex,
    )
    .expect("static data")
}
