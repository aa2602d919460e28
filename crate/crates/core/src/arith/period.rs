//! Formal period values: rational combinations of `1, i, π, iπ` and declared
//! transcendental symbols `s, i·s`.
//!
//! The basis is taken to be linearly independent over ℚ, which turns
//! membership tests such as "λ(δ) ∈ 2πiℤ" into coordinate checks.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::gaussian::{parse_rational, split_signed_terms, GaussianRational};
use super::ParseScalarError;

/// Behaviour of a basis symbol under complex conjugation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parity {
    Real,
    Imaginary,
}

impl Parity {
    fn flip(self) -> Parity {
        match self {
            Parity::Real => Parity::Imaginary,
            Parity::Imaginary => Parity::Real,
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Real => "real",
            Parity::Imaginary => "imaginary",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum Base {
    One,
    Pi,
    User { name: String, parity: Parity },
}

impl Base {
    fn parity(&self) -> Parity {
        match self {
            Base::One | Base::Pi => Parity::Real,
            Base::User { parity, .. } => *parity,
        }
    }
}

/// One coordinate direction of the period field: a base symbol, optionally
/// multiplied by `i`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PeriodBasisSymbol {
    base: Base,
    times_i: bool,
}

impl PeriodBasisSymbol {
    pub fn one() -> Self {
        PeriodBasisSymbol { base: Base::One, times_i: false }
    }

    pub fn i() -> Self {
        PeriodBasisSymbol { base: Base::One, times_i: true }
    }

    pub fn pi() -> Self {
        PeriodBasisSymbol { base: Base::Pi, times_i: false }
    }

    pub fn i_pi() -> Self {
        PeriodBasisSymbol { base: Base::Pi, times_i: true }
    }

    pub fn parity(&self) -> Parity {
        if self.times_i {
            self.base.parity().flip()
        } else {
            self.base.parity()
        }
    }

    pub fn is_user(&self) -> bool {
        matches!(self.base, Base::User { .. })
    }

    /// Product with `i`, as a sign and a new basis symbol.
    fn mul_i(&self) -> (bool, PeriodBasisSymbol) {
        let negate = self.times_i;
        (negate, PeriodBasisSymbol { base: self.base.clone(), times_i: !self.times_i })
    }
}

impl fmt::Display for PeriodBasisSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.base, self.times_i) {
            (Base::One, false) => f.write_str("1"),
            (Base::One, true) => f.write_str("i"),
            (Base::Pi, false) => f.write_str("pi"),
            (Base::Pi, true) => f.write_str("i*pi"),
            (Base::User { name, .. }, false) => f.write_str(name),
            (Base::User { name, .. }, true) => write!(f, "i*{name}"),
        }
    }
}

/// Declared user symbols. Each declaration `s` also makes its companion
/// `i*s` available.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PeriodSymbols {
    declared: BTreeMap<String, Parity>,
}

impl PeriodSymbols {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn declare(&mut self, name: &str, parity: Parity) -> Result<(), ParseScalarError> {
        let valid = name
            .chars()
            .next()
            .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !valid {
            return Err(ParseScalarError::new(name, "symbol names must be identifiers"));
        }
        if matches!(name, "i" | "pi") {
            return Err(ParseScalarError::new(name, "reserved symbol name"));
        }
        if self.declared.insert(name.to_string(), parity).is_some() {
            return Err(ParseScalarError::new(name, "symbol declared twice"));
        }
        Ok(())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, Parity)> {
        self.declared.iter().map(|(k, v)| (k.as_str(), *v))
    }

    pub fn symbol(&self, name: &str) -> Option<PeriodBasisSymbol> {
        self.declared.get(name).map(|&parity| PeriodBasisSymbol {
            base: Base::User { name: name.to_string(), parity },
            times_i: false,
        })
    }

    /// Parses a rational-coefficient sum over `1`, `i`, `pi`, `i*pi` and the
    /// declared symbols, e.g. `"a + 2*i*pi"`.
    pub fn parse(&self, s: &str) -> Result<PeriodValue, ParseScalarError> {
        let mut acc = PeriodValue::zero();
        for (negative, term) in split_signed_terms(s)? {
            let mut coef = BigRational::one();
            let mut imaginary = false;
            let mut base: Option<PeriodBasisSymbol> = None;
            for factor in term.split('*') {
                if factor.starts_with(|c: char| c.is_ascii_digit()) {
                    coef *= parse_rational(factor).map_err(|e| e.within(s))?;
                    continue;
                }
                if factor == "i" {
                    if imaginary {
                        return Err(ParseScalarError::new(s, "repeated factor `i`"));
                    }
                    imaginary = true;
                    continue;
                }
                let sym = if factor == "pi" {
                    PeriodBasisSymbol::pi()
                } else {
                    self.symbol(factor).ok_or_else(|| {
                        ParseScalarError::new(s, &format!("undeclared period symbol `{factor}`"))
                    })?
                };
                if base.replace(sym).is_some() {
                    return Err(ParseScalarError::new(
                        s,
                        "products of period symbols are not allowed",
                    ));
                }
            }
            let mut key = base.unwrap_or_else(PeriodBasisSymbol::one);
            if imaginary {
                let (negate, k) = key.mul_i();
                key = k;
                if negate {
                    coef = -coef;
                }
            }
            if negative {
                coef = -coef;
            }
            acc.add_coord(key, coef);
        }
        Ok(acc)
    }
}

/// An element of the ℚ-span of the period basis, stored with zero
/// coordinates removed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PeriodValue {
    coords: BTreeMap<PeriodBasisSymbol, BigRational>,
}

impl PeriodValue {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn from_symbol(sym: PeriodBasisSymbol, coef: BigRational) -> Self {
        let mut v = PeriodValue::zero();
        v.add_coord(sym, coef);
        v
    }

    pub fn from_gaussian(z: &GaussianRational) -> Self {
        let mut v = PeriodValue::zero();
        v.add_coord(PeriodBasisSymbol::one(), z.re().clone());
        v.add_coord(PeriodBasisSymbol::i(), z.im().clone());
        v
    }

    pub fn coord(&self, sym: &PeriodBasisSymbol) -> BigRational {
        self.coords.get(sym).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coords(&self) -> impl Iterator<Item = (&PeriodBasisSymbol, &BigRational)> {
        self.coords.iter()
    }

    fn add_coord(&mut self, sym: PeriodBasisSymbol, coef: BigRational) {
        if coef.is_zero() {
            return;
        }
        let entry = self.coords.entry(sym.clone()).or_insert_with(BigRational::zero);
        *entry += coef;
        if entry.is_zero() {
            self.coords.remove(&sym);
        }
    }

    /// Complex conjugation: negates the imaginary-parity coordinates.
    pub fn conj(&self) -> Self {
        PeriodValue {
            coords: self
                .coords
                .iter()
                .map(|(k, v)| match k.parity() {
                    Parity::Real => (k.clone(), v.clone()),
                    Parity::Imaginary => (k.clone(), -v.clone()),
                })
                .collect(),
        }
    }

    pub fn scale(&self, z: &GaussianRational) -> Self {
        let mut out = PeriodValue::zero();
        if z.is_zero() {
            return out;
        }
        for (k, v) in &self.coords {
            out.add_coord(k.clone(), v * z.re());
            let (negate, ki) = k.mul_i();
            let c = v * z.im();
            out.add_coord(ki, if negate { -c } else { c });
        }
        out
    }

    /// `self ∈ 2πiℤ`: the value exponentiates to 1.
    pub fn in_2pi_i_z(&self) -> bool {
        let ipi = PeriodBasisSymbol::i_pi();
        self.coords.iter().all(|(k, v)| {
            *k == ipi && v.is_integer() && (v.numer() % 2u32).is_zero()
        })
    }

    /// `Im(self) ∈ πℤ`, i.e. `conj(self) − self ∈ 2πiℤ`.
    pub fn im_in_pi_z(&self) -> bool {
        self.coords.iter().all(|(k, v)| {
            if *k == PeriodBasisSymbol::i_pi() {
                v.is_integer()
            } else {
                k.parity() == Parity::Real
            }
        })
    }
}

impl Add for &PeriodValue {
    type Output = PeriodValue;
    fn add(self, rhs: &PeriodValue) -> PeriodValue {
        let mut out = self.clone();
        for (k, v) in &rhs.coords {
            out.add_coord(k.clone(), v.clone());
        }
        out
    }
}

impl Add for PeriodValue {
    type Output = PeriodValue;
    fn add(self, rhs: PeriodValue) -> PeriodValue {
        &self + &rhs
    }
}

impl Neg for &PeriodValue {
    type Output = PeriodValue;
    fn neg(self) -> PeriodValue {
        PeriodValue {
            coords: self.coords.iter().map(|(k, v)| (k.clone(), -v.clone())).collect(),
        }
    }
}

impl Sub for &PeriodValue {
    type Output = PeriodValue;
    fn sub(self, rhs: &PeriodValue) -> PeriodValue {
        self + &(-rhs)
    }
}

impl fmt::Display for PeriodValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.is_empty() {
            return f.write_str("0");
        }
        for (n, (k, v)) in self.coords.iter().enumerate() {
            let negative = v.is_negative();
            let mag = v.abs();
            match (n, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let is_one = *k == PeriodBasisSymbol::one();
            let unit = mag.is_one();
            match (is_one, unit) {
                (true, _) => write_mag(f, &mag)?,
                (false, true) => write!(f, "{k}")?,
                (false, false) => {
                    write_mag(f, &mag)?;
                    write!(f, "*{k}")?;
                }
            }
        }
        Ok(())
    }
}

fn write_mag(f: &mut fmt::Formatter<'_>, r: &BigRational) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}
