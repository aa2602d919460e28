//! Lexicographically ordered bases of `⋀^p` on `n` generators, stored as bit masks.

use std::collections::HashMap;

use itertools::Itertools;

#[derive(Clone, Debug)]
pub struct ExteriorBasis {
    n: usize,
    degrees: Vec<Vec<u64>>,
    positions: HashMap<u64, usize>,
}

impl ExteriorBasis {
    pub fn new(n: usize) -> Self {
        assert!(n < 64, "exterior basis limited to 63 generators");
        let degrees: Vec<Vec<u64>> = (0..=n)
            .map(|p| (0..n).combinations(p).map(|c| mask_of(&c)).collect())
            .collect();
        let positions = degrees
            .iter()
            .flat_map(|d| d.iter().enumerate().map(|(pos, &m)| (m, pos)))
            .collect();
        ExteriorBasis { n, degrees, positions }
    }

    pub fn generators(&self) -> usize {
        self.n
    }

    /// Basis masks of degree `p`; empty beyond the top degree.
    pub fn degree(&self, p: usize) -> &[u64] {
        self.degrees.get(p).map_or(&[], Vec::as_slice)
    }

    pub fn dim(&self, p: usize) -> usize {
        self.degree(p).len()
    }

    /// Position of a mask within its degree.
    pub fn position(&self, mask: u64) -> usize {
        self.positions[&mask]
    }
}

pub fn mask_of(indices: &[usize]) -> u64 {
    indices.iter().fold(0u64, |m, &i| m | (1u64 << i))
}

/// Sorted indices of a mask.
pub fn indices_of(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask & (1u64 << i) != 0).collect()
}

/// `x_a ∧ x_I` as a sign and a mask, or `None` when `a ∈ I`.
pub fn wedge_left(a: usize, mask: u64) -> Option<(bool, u64)> {
    let bit = 1u64 << a;
    if mask & bit != 0 {
        return None;
    }
    let below = (mask & (bit - 1)).count_ones();
    Some((below % 2 == 1, mask | bit))
}

/// Binomial coefficient.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}
