//! Dense univariate polynomials over `F_p` ([`FpPoly`]) and over `R`
//! ([`RPoly`]), coefficients stored low degree first with no trailing zeros.
//!
//! Factorization of `x^n ± 1` uses Berlekamp's algorithm with exhaustive
//! splitting, which is deterministic and fast at the lengths used here.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{gcd_u64, pow_mod, PrimeField};
use crate::linalg;
use crate::ring::{Ring, RingElement};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

#[inline]
fn m_add(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
fn m_sub(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
fn m_inv(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

impl FpPoly {
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % p).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { p, coeffs }
    }

    pub fn from_i64(p: u64, coeffs: &[i64]) -> Self {
        Self::new(p, coeffs.iter().map(|&c| c.rem_euclid(p as i64) as u64).collect())
    }

    pub fn zero(p: u64) -> Self {
        Self { p, coeffs: Vec::new() }
    }

    pub fn one(p: u64) -> Self {
        Self::constant(p, 1)
    }

    pub fn constant(p: u64, c: u64) -> Self {
        Self::new(p, vec![c])
    }

    pub fn x(p: u64) -> Self {
        Self::monomial(p, 1, 1)
    }

    pub fn monomial(p: u64, c: u64, degree: usize) -> Self {
        let mut v = vec![0; degree + 1];
        v[degree] = c;
        Self::new(p, v)
    }

    /// `x^n - c`.
    pub fn x_n_minus(p: u64, n: usize, c: i64) -> Self {
        let mut v = vec![0u64; n + 1];
        v[n] = 1;
        v[0] = m_sub(v[0], c.rem_euclid(p as i64) as u64, p);
        Self::new(p, v)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<u64> {
        self.coeffs
    }

    /// Coefficient of `x^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    /// Coefficients padded or truncated to exactly `len` entries.
    pub fn to_vec(&self, len: usize) -> Vec<u64> {
        (0..len).map(|i| self.coeff(i)).collect()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.p, other.p, "polynomials over different fields");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(self.p, (0..n).map(|i| m_add(self.coeff(i), other.coeff(i), self.p)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(self.p, (0..n).map(|i| m_sub(self.coeff(i), other.coeff(i), self.p)).collect())
    }

    pub fn neg(&self) -> Self {
        Self::zero(self.p).sub(self)
    }

    pub fn scale(&self, c: u64) -> Self {
        Self::new(self.p, self.coeffs.iter().map(|&x| x * (c % self.p) % self.p).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        let p = self.p;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a * b) % p;
            }
        }
        Self::new(p, out)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        self.scale(m_inv(self.leading(), self.p))
    }

    pub fn divmod(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.check(divisor);
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let p = self.p;
        let Some(nd) = self.degree().filter(|&d| d >= dd) else {
            return Ok((Self::zero(p), self.clone()));
        };
        let lead_inv = m_inv(divisor.leading(), p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = rem[k + dd] * lead_inv % p;
            if c == 0 {
                continue;
            }
            quot[k] = c;
            for (j, &g) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = m_sub(rem[k + j], c * g % p, p);
            }
        }
        rem.truncate(dd);
        Ok((Self::new(p, quot), Self::new(p, rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.divmod(divisor)?.1)
    }

    pub fn divides(&self, other: &Self) -> bool {
        !self.is_zero() && other.rem(self).is_ok_and(|r| r.is_zero())
    }

    pub fn eval(&self, x: u64) -> u64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| m_add(acc * (x % self.p) % self.p, c, self.p))
    }

    pub fn derivative(&self) -> Self {
        let p = self.p;
        Self::new(p, self.coeffs.iter().enumerate().skip(1).map(|(i, &c)| c * (i as u64 % p) % p).collect())
    }

    pub fn pow_mod(&self, mut e: u128, modulus: &Self) -> Result<Self> {
        let mut acc = Self::one(self.p).rem(modulus)?;
        let mut base = self.rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(modulus)?;
            }
            base = base.mul(&base).rem(modulus)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Reduction modulo `x^n - c` by folding high coefficients down.
    pub fn reduce_mod_xn(&self, n: usize, c: u64) -> Self {
        let p = self.p;
        let mut out = vec![0u64; n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            let wraps = (i / n) as u64;
            let factor = pow_mod(c, wraps, p);
            out[i % n] = m_add(out[i % n], a * factor % p, p);
        }
        Self::new(p, out)
    }

    /// Product in `F_p[x]/(x^n - c)`.
    pub fn mul_mod_xn(&self, other: &Self, n: usize, c: u64) -> Self {
        self.mul(other).reduce_mod_xn(n, c)
    }

    /// `E(x^{-1})` in `F_p[x]/(x^n - 1)`.
    pub fn inverse_variable(&self, n: usize) -> Self {
        let r = self.reduce_mod_xn(n, 1);
        let mut out = vec![0u64; n];
        for (i, &a) in r.coeffs.iter().enumerate() {
            out[(n - i) % n] = a;
        }
        Self::new(self.p, out)
    }

    /// `x^{deg h} h(1/x)`, normalized to be monic.
    pub fn reciprocal(&self) -> Result<Self> {
        if self.coeff(0) == 0 {
            return Err(Error::ZeroConstantTerm);
        }
        let mut rev = self.coeffs.clone();
        rev.reverse();
        Ok(Self::new(self.p, rev).monic())
    }

    /// `f(delta x)`: coefficient `i` is multiplied by `delta^i`.
    pub fn substitute_scale(&self, delta: u64) -> Result<Self> {
        let p = self.p;
        if delta % p == 0 {
            return Err(Error::NotAUnit);
        }
        let mut power = 1u64;
        let mut out = Vec::with_capacity(self.coeffs.len());
        for &c in &self.coeffs {
            out.push(c * power % p);
            power = power * (delta % p) % p;
        }
        Ok(Self::new(p, out))
    }

    /// Irreducibility by trial division against every monic polynomial of
    /// degree at most `deg / 2`. Exponential in the degree; desk scale only.
    pub fn is_irreducible_by_trial_division(&self) -> bool {
        let Some(n) = self.degree() else {
            return false;
        };
        if n == 0 {
            return false;
        }
        let p = self.p;
        for d in 1..=n / 2 {
            let mut tail = vec![0u64; d];
            loop {
                let mut c = tail.clone();
                c.push(1);
                if Self::new(p, c).divides(self) {
                    return false;
                }
                if !odometer(&mut tail, p) {
                    break;
                }
            }
        }
        true
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && poly_gcd(self, &self.derivative()).degree() == Some(0)
    }
}

fn odometer(v: &mut [u64], p: u64) -> bool {
    for c in v.iter_mut() {
        *c += 1;
        if *c < p {
            return true;
        }
        *c = 0;
    }
    false
}

/// Orders by degree, then lexicographically on the low-degree-first
/// coefficient vector.
impl Ord for FpPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.p
            .cmp(&other.p)
            .then(self.coeffs.len().cmp(&other.coeffs.len()))
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl PartialOrd for FpPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match (i, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "{c}*x")?,
                (_, 1) => write!(f, "x^{i}")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}

pub fn poly_divmod(f: &FpPoly, g: &FpPoly) -> Result<(FpPoly, FpPoly)> {
    f.divmod(g)
}

/// Monic gcd; `gcd(0, 0)` is the zero polynomial.
pub fn poly_gcd(f: &FpPoly, g: &FpPoly) -> FpPoly {
    let mut a = f.clone();
    let mut b = g.clone();
    while !b.is_zero() {
        let r = a.rem(&b).expect("b is nonzero");
        a = b;
        b = r;
    }
    a.monic()
}

pub fn poly_gcd_all<'a>(polys: impl IntoIterator<Item = &'a FpPoly>, p: u64) -> FpPoly {
    polys.into_iter().fold(FpPoly::zero(p), |acc, g| poly_gcd(&acc, g))
}

pub fn reciprocal(h: &FpPoly) -> Result<FpPoly> {
    h.reciprocal()
}

/// Irreducible factors of a squarefree polynomial, monic and sorted.
pub fn factor_squarefree(f: &FpPoly) -> Result<Vec<FpPoly>> {
    let Some(deg) = f.degree() else {
        return Err(Error::Invalid("cannot factor the zero polynomial".into()));
    };
    if deg == 0 {
        return Ok(Vec::new());
    }
    if !f.is_squarefree() {
        return Err(Error::Invalid(format!("{f} is not squarefree")));
    }
    let mut factors = berlekamp(&f.monic());
    factors.sort();
    Ok(factors)
}

fn berlekamp(f: &FpPoly) -> Vec<FpPoly> {
    let p = f.p();
    let n = f.degree().expect("nonzero");
    if n == 1 {
        return vec![f.clone()];
    }
    let field = PrimeField::new(p).expect("polynomial modulus is prime");
    // Row i of the Berlekamp matrix is x^{ip} mod f, and the kernel of
    // (Q - I)^T is the subalgebra { v : v^p ≡ v mod f }.
    let xp = FpPoly::x(p).pow_mod(p as u128, f).expect("f nonzero");
    let mut rows = Vec::with_capacity(n);
    let mut cur = FpPoly::one(p);
    for _ in 0..n {
        rows.push(cur.to_vec(n));
        cur = cur.mul(&xp).rem(f).expect("f nonzero");
    }
    let transposed: Vec<Vec<u64>> = (0..n)
        .map(|j| {
            (0..n)
                .map(|i| {
                    let q = rows[i][j];
                    if i == j {
                        field.sub(q, 1)
                    } else {
                        q
                    }
                })
                .collect()
        })
        .collect();
    let kernel = linalg::null_space(&transposed, n, &field);
    let k = kernel.len();
    let mut factors = vec![f.clone()];
    if k == 1 {
        return factors;
    }
    for v in kernel.iter().map(|v| FpPoly::new(p, v.clone())) {
        if v.degree().unwrap_or(0) == 0 {
            continue;
        }
        let mut next = Vec::with_capacity(k);
        for u in factors {
            if u.degree() == Some(1) {
                next.push(u);
                continue;
            }
            let mut rest = u;
            for s in 0..p {
                if rest.degree() == Some(1) {
                    break;
                }
                let g = poly_gcd(&rest, &v.sub(&FpPoly::constant(p, s)));
                let dg = g.degree().unwrap_or(0);
                if dg > 0 && dg < rest.degree().unwrap() {
                    rest = rest.divmod(&g).expect("g nonzero").0.monic();
                    next.push(g);
                }
            }
            next.push(rest);
        }
        factors = next;
        if factors.len() == k {
            break;
        }
    }
    debug_assert_eq!(factors.len(), k);
    factors
}

/// Irreducible factors of `x^n - 1` (`sign = +1`) or `x^n + 1`
/// (`sign = -1`) over `F_p`, monic and sorted by degree then coefficients.
pub fn factor_xn_pm1(n: usize, sign: i8, field: &PrimeField) -> Result<Vec<FpPoly>> {
    let p = field.p();
    if n == 0 {
        return Err(Error::Invalid("length must be positive".into()));
    }
    if gcd_u64(n as u64, p) != 1 {
        return Err(Error::RepeatedRoots { n, p });
    }
    let target = match sign {
        1 => FpPoly::x_n_minus(p, n, 1),
        -1 => FpPoly::x_n_minus(p, n, -1),
        _ => return Err(Error::Invalid(format!("sign must be +1 or -1, got {sign}"))),
    };
    factor_squarefree(&target)
}

/// Polynomial over `R`, coefficients low degree first, trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RPoly {
    coeffs: Vec<RingElement>,
}

impl RPoly {
    pub fn new(coeffs: Vec<RingElement>) -> Self {
        let mut coeffs = coeffs;
        while coeffs.last().is_some_and(RingElement::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn coeffs(&self) -> &[RingElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> RingElement {
        self.coeffs.get(i).copied().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `x^n - c` over `R`.
    pub fn x_n_minus(ring: &Ring, n: usize, c: &RingElement) -> Self {
        let mut v = vec![RingElement::ZERO; n + 1];
        v[n] = RingElement::ONE;
        v[0] = ring.sub(&v[0], c);
        Self::new(v)
    }

    /// `sum_i eta_i g_i`.
    pub fn from_components(ring: &Ring, comps: [&FpPoly; 4]) -> Self {
        let len = comps.iter().map(|g| g.coeffs().len()).max().unwrap_or(0);
        Self::new((0..len).map(|k| ring.compose(comps.map(|g| g.coeff(k)))).collect())
    }

    /// The four CRT component polynomials.
    pub fn components(&self, ring: &Ring) -> [FpPoly; 4] {
        let p = ring.p();
        let decomposed: Vec<[u64; 4]> = self.coeffs.iter().map(|r| ring.decompose(r)).collect();
        std::array::from_fn(|i| FpPoly::new(p, decomposed.iter().map(|x| x[i]).collect()))
    }

    /// `a(x), b(x), c(x), d(x)` with `f = a + b u + c u^2 + d u^3`.
    pub fn basis_parts(&self, p: u64) -> [FpPoly; 4] {
        std::array::from_fn(|k| FpPoly::new(p, self.coeffs.iter().map(|r| r.coeffs()[k]).collect()))
    }

    pub fn from_basis_parts(parts: [&FpPoly; 4]) -> Self {
        let len = parts.iter().map(|g| g.coeffs().len()).max().unwrap_or(0);
        Self::new((0..len).map(|k| RingElement::from_coeffs(parts.map(|g| g.coeff(k)))).collect())
    }

    pub fn add(&self, ring: &Ring, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| ring.add(&self.coeff(i), &other.coeff(i))).collect())
    }

    pub fn sub(&self, ring: &Ring, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| ring.sub(&self.coeff(i), &other.coeff(i))).collect())
    }

    pub fn scale(&self, ring: &Ring, c: &RingElement) -> Self {
        Self::new(self.coeffs.iter().map(|r| ring.mul(c, r)).collect())
    }

    pub fn mul(&self, ring: &Ring, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![RingElement::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = ring.add(&out[i + j], &ring.mul(a, b));
            }
        }
        Self::new(out)
    }

    /// Reduction modulo `x^n - c`.
    pub fn reduce_mod_xn(&self, ring: &Ring, n: usize, c: &RingElement) -> Self {
        let mut out = vec![RingElement::ZERO; n];
        for (i, a) in self.coeffs.iter().enumerate() {
            let factor = ring.pow(c, (i / n) as u64);
            out[i % n] = ring.add(&out[i % n], &ring.mul(&factor, a));
        }
        Self::new(out)
    }

    pub fn mul_mod_xn(&self, ring: &Ring, other: &Self, n: usize, c: &RingElement) -> Self {
        self.mul(ring, other).reduce_mod_xn(ring, n, c)
    }

    /// `f(delta x)` for a unit `delta`.
    pub fn substitute_scale(&self, ring: &Ring, delta: &RingElement) -> Result<Self> {
        if !ring.is_unit(delta) {
            return Err(Error::NotAUnit);
        }
        let mut power = RingElement::ONE;
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(ring.mul(c, &power));
            power = ring.mul(&power, delta);
        }
        Ok(Self::new(out))
    }

    /// Coefficient vector of length `n` (zero padded).
    pub fn to_vec(&self, n: usize) -> Vec<RingElement> {
        (0..n).map(|i| self.coeff(i)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7() -> PrimeField {
        PrimeField::new(7).unwrap()
    }

    fn poly(c: &[i64]) -> FpPoly {
        FpPoly::from_i64(7, c)
    }

    #[test]
    fn division() {
        let (q, r) = poly_divmod(&FpPoly::x_n_minus(7, 5, 1), &poly(&[-1, 1])).unwrap();
        assert_eq!(q, poly(&[1, 1, 1, 1, 1]));
        assert!(r.is_zero());
        let f = poly(&[3, 0, 2, 5]);
        assert_eq!(f.divmod(&f).unwrap(), (FpPoly::one(7), FpPoly::zero(7)));
        let (q, r) = poly(&[1, 0, 1]).divmod(&poly(&[1, 0, 0, 1])).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, poly(&[1, 0, 1]));
        assert_eq!(f.divmod(&FpPoly::zero(7)), Err(Error::DivisionByZero));
    }

    #[test]
    fn gcds() {
        let g = poly_gcd_all([&poly(&[-1, -1, 1]), &poly(&[-1, -3, 1]), &poly(&[-1, 1, 1])], 7);
        assert!(g.is_one());
        let f = poly(&[3, 0, 6]);
        assert_eq!(poly_gcd(&f, &FpPoly::zero(7)), f.monic());
        assert_eq!(poly_gcd(&poly(&[-1, 0, 0, 0, 1]), &poly(&[-1, 0, 1])), poly(&[-1, 0, 1]));
    }

    #[test]
    fn factor_examples() {
        let f = f7();
        assert_eq!(factor_xn_pm1(5, 1, &f).unwrap(), vec![poly(&[-1, 1]), poly(&[1, 1, 1, 1, 1])]);
        let mut expected = vec![poly(&[-1, -1, 1]), poly(&[-1, -3, 1]), poly(&[-1, 1, 1]), poly(&[-1, 3, 1])];
        expected.sort();
        assert_eq!(factor_xn_pm1(8, -1, &f).unwrap(), expected);
        let f19 = PrimeField::new(19).unwrap();
        assert_eq!(
            factor_xn_pm1(3, 1, &f19).unwrap(),
            vec![
                FpPoly::from_i64(19, &[-11, 1]),
                FpPoly::from_i64(19, &[-7, 1]),
                FpPoly::from_i64(19, &[-1, 1])
            ]
        );
        assert_eq!(factor_xn_pm1(7, 1, &f), Err(Error::RepeatedRoots { n: 7, p: 7 }));
    }

    #[test]
    fn factorization_products_and_irreducibility() {
        for p in [7u64, 13, 19, 31] {
            let field = PrimeField::new(p).unwrap();
            for n in 1..=24usize {
                if n as u64 % p == 0 {
                    continue;
                }
                for sign in [1i8, -1] {
                    let factors = factor_xn_pm1(n, sign, &field).unwrap();
                    let prod = factors.iter().fold(FpPoly::one(p), |a, g| a.mul(g));
                    assert_eq!(prod, FpPoly::x_n_minus(p, n, sign as i64));
                    for g in &factors {
                        assert!(g.is_monic());
                        if g.degree().unwrap() <= 4 {
                            assert!(g.is_irreducible_by_trial_division(), "{g} mod {p}");
                        }
                    }
                    assert!(factors.windows(2).all(|w| w[0] < w[1]));
                }
            }
        }
    }

    #[test]
    fn reciprocals() {
        assert_eq!(poly(&[-1, 1]).reciprocal().unwrap(), poly(&[-1, 1]));
        assert_eq!(poly(&[1, -3, 1]).reciprocal().unwrap(), poly(&[1, -3, 1]));
        assert_eq!(poly(&[-1, 1, 1]).reciprocal().unwrap(), poly(&[-1, -1, 1]));
        assert_eq!(poly(&[0, 1]).reciprocal(), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn scaling_substitution() {
        assert_eq!(poly(&[0, 1, 1]).substitute_scale(6).unwrap(), poly(&[0, -1, 1]));
        assert_eq!(poly(&[4]).substitute_scale(3).unwrap(), poly(&[4]));
        assert_eq!(poly(&[1, 1]).substitute_scale(0), Err(Error::NotAUnit));
    }

    #[test]
    fn cyclic_reduction_and_inverse_variable() {
        // x^5 + 2x^6 mod x^5 - 3 = 3 + 6x
        let f = poly(&[0, 0, 0, 0, 0, 1, 2]);
        assert_eq!(f.reduce_mod_xn(5, 3), poly(&[3, 6]));
        // E(x) = 1 + 2x + 3x^2 mod x^3 - 1 -> 1 + 3x + 2x^2
        assert_eq!(poly(&[1, 2, 3]).inverse_variable(3), poly(&[1, 3, 2]));
    }

    #[test]
    fn rpoly_components_round_trip() {
        let ring = Ring::new(f7()).unwrap();
        let g = [poly(&[1, 1, 1, 1, 1]), poly(&[1, -1, 1, -1, 1]), poly(&[1, 1]), poly(&[1, 1])];
        let rp = RPoly::from_components(&ring, [&g[0], &g[1], &g[2], &g[3]]);
        assert_eq!(rp.components(&ring), g);
        let parts = rp.basis_parts(7);
        assert_eq!(RPoly::from_basis_parts([&parts[0], &parts[1], &parts[2], &parts[3]]), rp);
    }
}
