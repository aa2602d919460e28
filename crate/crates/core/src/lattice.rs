//! Lattice character data and the selection of `A*_Γ` and `B*_Γ`.
//!
//! A lattice enters only through the images `δ ∈ 𝔞 = 𝔤/𝔫` of generators of
//! `Γ/(Γ∩N)`, written as log-coordinate vectors over the complement basis with
//! entries in the period field. A character `e^μ` is trivial on `Γ` when
//! `μ(δ) ∈ 2πiℤ` for every generator, which is decided coordinatewise under the
//! declared ℚ-linear independence of `1, i, π, iπ` and the user symbols.

use std::collections::BTreeMap;

use num_traits::Zero;
use rayon::prelude::*;

use crate::arith::{PeriodSymbols, PeriodValue};
use crate::error::{Error, Result};
use crate::lie::exterior::binomial;
use crate::lie::{CohomologyResult, GroundMode, LieAlgebraData, ValidationReport, Violation};
use crate::weights::{InvariantComplex, InvariantLabel, Weight, WeightAssignment};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LatticeData {
    pub symbols: PeriodSymbols,
    /// One vector per generator, one coordinate per complement index.
    pub generators: Vec<Vec<PeriodValue>>,
}

impl LatticeData {
    pub fn new(symbols: PeriodSymbols, generators: Vec<Vec<PeriodValue>>) -> Self {
        LatticeData { symbols, generators }
    }

    pub fn validate(&self, g: &LieAlgebraData) -> ValidationReport {
        let c = g.complement().len();
        let mut v = Vec::new();
        for (generator, coords) in self.generators.iter().enumerate() {
            if coords.len() != c {
                v.push(Violation::LatticeShape { generator, coords: coords.len() });
                continue;
            }
            if let Some(sigma) = g.conjugation() {
                for (q, &j) in g.complement().iter().enumerate() {
                    let paired = g.complement_position(sigma[j]);
                    if paired.is_none_or(|p| coords[p] != coords[q].conj()) {
                        v.push(Violation::LatticeNotConjugationStable { generator, index: j });
                    }
                }
            }
        }
        ValidationReport { violations: v }
    }
}

/// `e^μ` restricted to `Γ` is trivial.
pub fn char_trivial_on_lattice(mu: &Weight, lat: &LatticeData) -> bool {
    lat.generators.iter().all(|d| mu.eval_periods(d).in_2pi_i_z())
}

/// `conj(e^μ)/e^μ` restricted to `Γ` is trivial, that is `Im μ(δ) ∈ πℤ`.
pub fn ratio_char_trivial_on_lattice(mu: &Weight, lat: &LatticeData) -> bool {
    lat.generators.iter().all(|d| mu.eval_periods(d).im_in_pi_z())
}

/// `|e^{μ(v)}| = 1` on the real form: `μ_j + conj(μ_{σ(j)}) = 0` on every
/// conjugation orbit of the complement.
pub fn char_unitary(mu: &Weight, g: &LieAlgebraData) -> Result<bool> {
    let sigma = match (g.ground(), g.conjugation()) {
        (GroundMode::RealComplexified, Some(s)) => s,
        _ => {
            return Err(Error::Mode(
                "unitarity needs a real-complexified algebra with a conjugation table".into(),
            ))
        }
    };
    let coords = mu.coords();
    Ok(g.complement().iter().enumerate().all(|(q, &j)| {
        g.complement_position(sigma[j])
            .is_some_and(|p| (&coords[q] + &coords[p].conj()).is_zero())
    }))
}

/// Verdicts for one weight tag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TagVerdict {
    pub tag: Weight,
    /// `μ = 0`, the character is trivial on `G`.
    pub trivial_on_g: bool,
    pub trivial_on_lattice: bool,
    pub ratio_trivial: bool,
    /// `None` when unitarity cannot be evaluated.
    pub unitary: Option<bool>,
    pub selected: bool,
    /// Number of basis elements per degree carrying this tag.
    pub count: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct SelectionResult {
    pub selected: InvariantComplex,
    /// Sorted by tag.
    pub verdicts: Vec<TagVerdict>,
}

impl SelectionResult {
    pub fn verdict(&self, tag: &Weight) -> Option<&TagVerdict> {
        self.verdicts.binary_search_by(|v| v.tag.cmp(tag)).ok().map(|i| &self.verdicts[i])
    }

    pub fn dims(&self) -> &[usize] {
        self.selected.dims()
    }
}

fn tag_verdicts<F>(ic: &InvariantComplex, lat: &LatticeData, g: &LieAlgebraData, keep: F) -> Vec<TagVerdict>
where
    F: Fn(&TagVerdict) -> bool + Sync,
{
    let top = ic.dims().len();
    let mut counts: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
    for p in 0..top {
        for t in ic.tags(p) {
            counts.entry(t.clone()).or_insert_with(|| vec![0; top])[p] += 1;
        }
    }
    counts
        .into_par_iter()
        .map(|(tag, count)| {
            let mut v = TagVerdict {
                trivial_on_g: tag.is_zero(),
                trivial_on_lattice: char_trivial_on_lattice(&tag, lat),
                ratio_trivial: ratio_char_trivial_on_lattice(&tag, lat),
                unitary: char_unitary(&tag, g).ok(),
                selected: false,
                count,
                tag,
            };
            v.selected = keep(&v);
            v
        })
        .collect()
}

fn select<F>(ic: &InvariantComplex, lat: &LatticeData, g: &LieAlgebraData, keep: F) -> Result<SelectionResult>
where
    F: Fn(&TagVerdict) -> bool + Sync,
{
    lat.validate(g).into_result()?;
    let verdicts = tag_verdicts(ic, lat, g, keep);
    let chosen: Vec<&Weight> = verdicts.iter().filter(|v| v.selected).map(|v| &v.tag).collect();
    let selected = ic.restrict(|t| chosen.binary_search(&t).is_ok())?;
    Ok(SelectionResult { selected, verdicts })
}

/// `A*_Γ`: labels whose character is trivial on `Γ`.
pub fn select_de_rham(ic: &InvariantComplex, lat: &LatticeData, g: &LieAlgebraData) -> Result<SelectionResult> {
    if g.ground() != GroundMode::RealComplexified {
        return Err(Error::Mode("de Rham selection needs a real-complexified algebra".into()));
    }
    select(ic, lat, g, |v| v.trivial_on_lattice)
}

/// `B*_Γ`: labels whose ratio character is trivial on `Γ`.
pub fn select_dolbeault(ic: &InvariantComplex, lat: &LatticeData, g: &LieAlgebraData) -> Result<SelectionResult> {
    if g.ground() != GroundMode::Complex {
        return Err(Error::Mode("Dolbeault selection needs a complex Lie algebra".into()));
    }
    select(ic, lat, g, |v| v.ratio_trivial)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flag {
    True,
    False,
    Unknown,
}

impl Flag {
    fn from_bool(b: bool) -> Self {
        if b {
            Flag::True
        } else {
            Flag::False
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Flag::True => "true",
            Flag::False => "false",
            Flag::Unknown => "unknown",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionReport {
    pub diamond1: Flag,
    pub diamond2: Flag,
    pub star: Flag,
    pub boxed: Flag,
    /// Labels `(degree, label)` breaking each condition.
    pub diamond1_witnesses: Vec<(usize, InvariantLabel)>,
    pub diamond2_witnesses: Vec<(usize, InvariantLabel)>,
    pub star_witnesses: Vec<(usize, InvariantLabel)>,
    /// Algebra indices `i` with `λ_i` not ratio-trivial.
    pub box_witnesses: Vec<usize>,
}

/// Evaluates the four conditions on every label of the invariant complex.
pub fn check_conditions(
    ic: &InvariantComplex,
    lat: &LatticeData,
    g: &LieAlgebraData,
    weights: &WeightAssignment,
) -> Result<ConditionReport> {
    lat.validate(g).into_result()?;
    let verdicts = tag_verdicts(ic, lat, g, |_| false);
    let by_tag: BTreeMap<&Weight, &TagVerdict> = verdicts.iter().map(|v| (&v.tag, v)).collect();
    let mut d1 = Vec::new();
    let mut d2 = Vec::new();
    let mut st = Vec::new();
    let mut d2_unknown = false;
    for p in 0..ic.dims().len() {
        for (label, tag) in ic.labels(p).iter().zip(ic.tags(p)) {
            let v = by_tag[tag];
            if v.trivial_on_g != v.trivial_on_lattice {
                d1.push((p, *label));
            }
            if !v.trivial_on_g {
                match v.unitary {
                    Some(true) => d2.push((p, *label)),
                    Some(false) => {}
                    None => d2_unknown = true,
                }
            }
            if v.trivial_on_g != v.ratio_trivial {
                st.push((p, *label));
            }
        }
    }
    let box_witnesses: Vec<usize> = weights
        .algebra
        .iter()
        .enumerate()
        .filter(|(_, w)| !ratio_char_trivial_on_lattice(w, lat))
        .map(|(i, _)| i)
        .collect();
    let diamond2 = if !d2.is_empty() {
        Flag::False
    } else if d2_unknown {
        Flag::Unknown
    } else {
        Flag::True
    };
    Ok(ConditionReport {
        diamond1: Flag::from_bool(d1.is_empty()),
        diamond2,
        star: Flag::from_bool(st.is_empty()),
        boxed: Flag::from_bool(box_witnesses.is_empty()),
        diamond1_witnesses: d1,
        diamond2_witnesses: d2,
        star_witnesses: st,
        box_witnesses,
    })
}

/// `h^{p,q} = C(n,p)·b_q` for `⋀ℂⁿ ⊗ H*(B*_Γ)`.
pub fn dolbeault_hodge_table(b: &CohomologyResult, n: usize) -> Vec<Vec<usize>> {
    (0..=n)
        .map(|p| b.betti.iter().map(|&bq| binomial(n, p) * bq).collect())
        .collect()
}
