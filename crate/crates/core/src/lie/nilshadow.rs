use num_traits::Zero;

use crate::error::{Error, Result};
use crate::weights::WeightAssignment;

use super::algebra::{Bracket, LieAlgebraData};

/// The nilshadow `𝔤_u`: same underlying space, bracket
/// `[X_a,X_b]_u = [X_a,X_b] − λ_b(X_a)·X_b + λ_a(X_b)·X_a`.
///
/// Every index goes to the nilradical of the result, and nilpotency is
/// certified through the lower central series.
pub fn nilshadow(g: &LieAlgebraData, weights: &WeightAssignment) -> Result<LieAlgebraData> {
    let n = g.dim();
    if weights.algebra.len() != n {
        return Err(Error::Dimension(format!(
            "{} algebra weights for dimension {n}",
            weights.algebra.len()
        )));
    }
    let lambda = |b: usize, a: usize| match g.complement_position(a) {
        Some(q) => weights.algebra[b].coords()[q].clone(),
        None => Zero::zero(),
    };
    let mut brackets = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let mut v = g.bracket_basis(a, b).to_vec();
            v[b] -= lambda(b, a);
            v[a] += lambda(a, b);
            for (k, c) in v.into_iter().enumerate() {
                if !c.is_zero() {
                    brackets.push(Bracket::new(a, b, k, c));
                }
            }
        }
    }
    let shadow = LieAlgebraData::new(
        g.basis_names().to_vec(),
        brackets,
        (0..n).collect(),
        Vec::new(),
        g.conjugation().map(<[usize]>::to_vec),
        g.ground(),
    )?;
    let series = shadow.lower_central_series(&(0..n).collect::<Vec<_>>());
    if series.last() != Some(&0) {
        return Err(Error::NotNilpotent { series });
    }
    Ok(shadow)
}
