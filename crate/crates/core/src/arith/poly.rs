//! Univariate polynomials over ℚ(i): characteristic polynomials, square-free
//! parts and exact root finding in ℚ(i).

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::gaussian::GaussianRational;
use super::matrix::ExactMatrix;

/// Coefficients in ascending degree; no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<GaussianRational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::new(vec![GaussianRational::one()])
    }

    /// `x − r`
    pub fn linear(root: &GaussianRational) -> Self {
        Poly::new(vec![-root, GaussianRational::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&GaussianRational> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Poly::zero(),
            Some(lc) => {
                let inv = lc.inv().expect("nonzero leading coefficient");
                Poly::new(self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn eval(&self, x: &GaussianRational) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, m: &ExactMatrix) -> ExactMatrix {
        let n = m.rows();
        let mut acc = ExactMatrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * m) + &ExactMatrix::identity(n).scale(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &GaussianRational::from_integer(k as i64))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![GaussianRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn pow(&self, e: usize) -> Poly {
        (0..e).fold(Poly::one(), |acc, _| acc.mul(self))
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc_inv = divisor.leading().unwrap().inv().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![GaussianRational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let shift = rem.len() - 1 - dd;
            let factor = rem.last().unwrap() * &lc_inv;
            for (k, c) in divisor.coeffs.iter().enumerate() {
                rem[shift + k] -= &factor * c;
            }
            quot[shift] = factor;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (Poly::new(quot), Poly::new(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Product of the distinct irreducible factors, monic.
    pub fn square_free_part(&self) -> Poly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_real() && c.re().is_negative();
            let c = if negative && !first { -c } else { c.clone() };
            if !first {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let coef = if c.is_real() || c.re().is_zero() {
                c.to_string()
            } else {
                format!("({c})")
            };
            match k {
                0 => write!(f, "{coef}")?,
                _ => {
                    if !c.is_one() {
                        write!(f, "{coef}*")?;
                    }
                    if k == 1 {
                        f.write_str("x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Characteristic polynomial `det(xI − M)` via the Faddeev–LeVerrier recurrence.
pub fn characteristic_polynomial(m: &ExactMatrix) -> Poly {
    assert!(m.is_square(), "characteristic polynomial of a non-square matrix");
    let n = m.rows();
    let mut coeffs = vec![GaussianRational::zero(); n + 1];
    coeffs[n] = GaussianRational::one();
    let mut aux = ExactMatrix::zeros(n, n);
    for k in 1..=n {
        aux = &(m * &aux) + &ExactMatrix::identity(n).scale(&coeffs[n - k + 1]);
        let am = m * &aux;
        let trace: GaussianRational = am.diagonal_entries().into_iter().sum();
        coeffs[n - k] = -(&trace / &GaussianRational::from_integer(k as i64));
    }
    Poly::new(coeffs)
}

/// Outcome of searching for roots of a polynomial in ℚ(i).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    /// Distinct roots in ℚ(i) with their multiplicities.
    pub roots: Vec<(GaussianRational, usize)>,
    /// Monic part without roots in ℚ(i); `1` when the polynomial splits.
    pub residual: Poly,
}

impl Factorization {
    pub fn splits(&self) -> bool {
        self.residual.degree() == Some(0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("coefficients too large for exact root search (norm {0})")]
pub struct RootSearchTooLarge(pub String);

/// Finds all roots in ℚ(i) of a nonzero polynomial, with multiplicities.
pub fn factor_linear(p: &Poly) -> Result<Factorization, RootSearchTooLarge> {
    assert!(!p.is_zero(), "factor_linear of the zero polynomial");
    let mut residual = p.monic();
    let candidates = {
        let sf = residual.square_free_part();
        gaussian_rational_roots(&sf)?
    };
    let mut roots = Vec::new();
    for r in candidates {
        let lin = Poly::linear(&r);
        let mut mult = 0;
        loop {
            let (q, rem) = residual.div_rem(&lin);
            if !rem.is_zero() {
                break;
            }
            residual = q;
            mult += 1;
        }
        debug_assert!(mult > 0);
        roots.push((r, mult));
    }
    roots.sort_by(|a, b| cmp_gaussian(&a.0, &b.0));
    Ok(Factorization { roots, residual: residual.monic() })
}

/// Total order on ℚ(i) used for deterministic output: by real part, then
/// imaginary part.
pub fn cmp_gaussian(a: &GaussianRational, b: &GaussianRational) -> std::cmp::Ordering {
    a.re().cmp(b.re()).then_with(|| a.im().cmp(b.im()))
}

/// Gaussian integer with arbitrary-precision parts.
#[derive(Clone, Debug, PartialEq, Eq)]
struct GInt {
    re: BigInt,
    im: BigInt,
}

impl GInt {
    fn new(re: BigInt, im: BigInt) -> Self {
        GInt { re, im }
    }

    fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    fn mul(&self, o: &GInt) -> GInt {
        GInt::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }

    fn conj(&self) -> GInt {
        GInt::new(self.re.clone(), -self.im.clone())
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Exact quotient if `o` divides `self`.
    fn div_exact(&self, o: &GInt) -> Option<GInt> {
        let n = o.norm();
        let num = self.mul(&o.conj());
        let (qr, rr) = num.re.div_rem(&n);
        let (qi, ri) = num.im.div_rem(&n);
        (rr.is_zero() && ri.is_zero()).then(|| GInt::new(qr, qi))
    }

    fn rem_round(&self, o: &GInt) -> GInt {
        let n = o.norm();
        let num = self.mul(&o.conj());
        let round = |x: &BigInt| -> BigInt {
            let two = BigInt::from(2);
            (two.clone() * x + &n).div_floor(&(two * &n))
        };
        let q = GInt::new(round(&num.re), round(&num.im));
        let qo = q.mul(o);
        GInt::new(&self.re - &qo.re, &self.im - &qo.im)
    }

    fn gcd(a: &GInt, b: &GInt) -> GInt {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.rem_round(&b);
            a = b;
            b = r;
        }
        a
    }

    fn to_gaussian(&self) -> GaussianRational {
        GaussianRational::new(
            BigRational::from_integer(self.re.clone()),
            BigRational::from_integer(self.im.clone()),
        )
    }
}

/// Distinct roots in ℚ(i) of a square-free polynomial.
fn gaussian_rational_roots(sf: &Poly) -> Result<Vec<GaussianRational>, RootSearchTooLarge> {
    let mut p = sf.monic();
    let mut roots = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return Ok(roots);
    }
    if p.coeffs()[0].is_zero() {
        roots.push(GaussianRational::zero());
        p = p.div_rem(&Poly::linear(&GaussianRational::zero())).0;
    }
    let deg = p.degree().unwrap();
    if deg == 0 {
        return Ok(roots);
    }
    // Substituting x = y/D gives a monic polynomial with Gaussian integer
    // coefficients whose ℚ(i)-roots are Gaussian integers dividing the
    // constant term.
    let mut d = BigInt::one();
    for c in p.coeffs() {
        d = num_integer::lcm(d, c.denominator_lcm());
    }
    let d_rat = GaussianRational::from(BigRational::from_integer(d.clone()));
    let scaled: Vec<GaussianRational> = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| c * &d_rat.pow((deg - k) as u32))
        .collect();
    let q = Poly::new(scaled);
    let c0 = &q.coeffs()[0];
    debug_assert!(c0.is_gaussian_integer());
    let c0 = GInt::new(c0.re().to_integer(), c0.im().to_integer());
    for y in gaussian_divisors(&c0)? {
        let yg = y.to_gaussian();
        if q.eval(&yg).is_zero() {
            roots.push(&yg / &d_rat);
        }
    }
    Ok(roots)
}

/// All divisors of a nonzero Gaussian integer, units included.
fn gaussian_divisors(c: &GInt) -> Result<Vec<GInt>, RootSearchTooLarge> {
    let norm = c.norm();
    let primes = factor_rational(&norm)?;
    let mut gprimes: Vec<GInt> = Vec::new();
    for p in primes {
        let pb = BigInt::from(p);
        match p % 4 {
            2 => gprimes.push(GInt::new(1.into(), 1.into())),
            3 => gprimes.push(GInt::new(pb, 0.into())),
            _ => {
                let x = sqrt_minus_one_mod(p);
                let pi = GInt::gcd(&GInt::new(pb, 0.into()), &GInt::new(x.into(), 1.into()));
                gprimes.push(pi.conj());
                gprimes.push(pi);
            }
        }
    }
    let mut factors: Vec<(GInt, u32)> = Vec::new();
    let mut rest = c.clone();
    for pi in gprimes {
        let mut e = 0;
        while let Some(q) = rest.div_exact(&pi) {
            rest = q;
            e += 1;
        }
        if e > 0 {
            factors.push((pi, e));
        }
    }
    let mut divisors = vec![GInt::new(1.into(), 0.into())];
    for (pi, e) in &factors {
        let mut next = Vec::with_capacity(divisors.len() * (*e as usize + 1));
        for dv in &divisors {
            let mut acc = dv.clone();
            next.push(acc.clone());
            for _ in 0..*e {
                acc = acc.mul(pi);
                next.push(acc.clone());
            }
        }
        divisors = next;
    }
    let units = [
        GInt::new(1.into(), 0.into()),
        GInt::new(0.into(), 1.into()),
        GInt::new((-1).into(), 0.into()),
        GInt::new(0.into(), (-1).into()),
    ];
    Ok(divisors
        .iter()
        .flat_map(|dv| units.iter().map(move |u| dv.mul(u)))
        .collect())
}

/// Distinct prime factors of a positive integer.
fn factor_rational(n: &BigInt) -> Result<Vec<u64>, RootSearchTooLarge> {
    let too_large = || RootSearchTooLarge(n.to_string());
    if n.sign() != Sign::Plus {
        return Ok(Vec::new());
    }
    let mut rest: u128 = n.to_u128().ok_or_else(too_large)?;
    let mut primes = Vec::new();
    let mut p: u128 = 2;
    while p * p <= rest && p < 1_000_000 {
        if rest.is_multiple_of(p) {
            primes.push(p as u64);
            while rest.is_multiple_of(p) {
                rest /= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        let r = u64::try_from(rest).map_err(|_| too_large())?;
        if (r as u128) < 1_000_000u128 * 1_000_000 || is_prime_u64(r) {
            primes.push(r);
        } else {
            return Err(too_large());
        }
    }
    Ok(primes)
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// `x` with `x² ≡ −1 (mod p)` for a prime `p ≡ 1 (mod 4)`.
fn sqrt_minus_one_mod(p: u64) -> u64 {
    (2..p)
        .map(|z| pow_mod(z, (p - 1) / 4, p))
        .find(|&x| mul_mod(x, x, p) == p - 1)
        .expect("p ≡ 1 mod 4 has a square root of −1")
}
