//! Linear codes over `F_p` kept in canonical reduced row echelon form, so
//! two codes are equal exactly when their bases are equal.
//!
//! Cyclic (`x^n - 1`) and negacyclic (`x^n + 1`) codes are built from
//! generator polynomials or idempotents; the enumeration routines
//! (`weight_enumerator`, `min_distance`) walk the `p^k` message space and
//! refuse to run past a configurable cap.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{gcd_u64, PrimeField};
use crate::linalg;
use crate::poly::{poly_gcd, FpPoly};

/// Default enumeration cap: `2^24` codewords.
pub const DEFAULT_CAP: u64 = 1 << 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModulusTag {
    /// Ideal of `F_p[x]/(x^n - 1)`.
    Cyclic,
    /// Ideal of `F_p[x]/(x^n + 1)`.
    Negacyclic,
    None,
}

impl ModulusTag {
    fn from_sign(sign: i8) -> Self {
        if sign == 1 {
            Self::Cyclic
        } else {
            Self::Negacyclic
        }
    }
}

#[derive(Debug, Clone)]
pub struct FpLinearCode {
    field: PrimeField,
    n: usize,
    basis: Vec<Vec<u64>>,
    pivots: Vec<usize>,
    tag: ModulusTag,
}

/// Equality is basis equality; the modulus tag is metadata.
impl PartialEq for FpLinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.field.p() == other.field.p() && self.n == other.n && self.basis == other.basis
    }
}

impl Eq for FpLinearCode {}

/// A monomial transformation: position `i` is scaled by `scalars[i]` and
/// moved to position `perm[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialMap {
    perm: Vec<usize>,
    scalars: Vec<u64>,
}

impl MonomialMap {
    pub fn new(perm: Vec<usize>, scalars: Vec<u64>, field: &PrimeField) -> Result<Self> {
        if perm.len() != scalars.len() {
            return Err(Error::LengthMismatch { expected: perm.len(), got: scalars.len() });
        }
        let mut seen = vec![false; perm.len()];
        for &t in &perm {
            if t >= perm.len() || std::mem::replace(&mut seen[t], true) {
                return Err(Error::BadMonomial(format!("{perm:?} is not a permutation")));
            }
        }
        if scalars.iter().any(|&s| s % field.p() == 0) {
            return Err(Error::BadMonomial("scalars must be nonzero".into()));
        }
        Ok(Self { perm, scalars: scalars.iter().map(|&s| s % field.p()).collect() })
    }

    pub fn identity(n: usize) -> Self {
        Self { perm: (0..n).collect(), scalars: vec![1; n] }
    }

    /// Pure scaling `pi_i = scalars[i]`.
    pub fn scaling(scalars: Vec<u64>, field: &PrimeField) -> Result<Self> {
        Self::new((0..scalars.len()).collect(), scalars, field)
    }

    /// The multiplier `i -> s i mod n` as a permutation.
    pub fn multiplier(s: i64, n: usize) -> Result<Self> {
        let s_mod = s.rem_euclid(n as i64) as u64;
        if gcd_u64(s_mod, n as u64) != 1 {
            return Err(Error::NotCoprime { s, q: n });
        }
        Ok(Self {
            perm: (0..n).map(|i| (i as u64 * s_mod % n as u64) as usize).collect(),
            scalars: vec![1; n],
        })
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn scalars(&self) -> &[u64] {
        &self.scalars
    }

    pub fn apply(&self, v: &[u64], field: &PrimeField) -> Vec<u64> {
        let mut out = vec![0u64; v.len()];
        for (i, &x) in v.iter().enumerate() {
            out[self.perm[i]] = field.mul(self.scalars[i], x);
        }
        out
    }
}

impl FpLinearCode {
    /// Row-reduces an arbitrary spanning set.
    pub fn from_generators(rows: &[Vec<u64>], field: &PrimeField, n: usize) -> Result<Self> {
        let mut m = Vec::with_capacity(rows.len());
        for r in rows {
            if r.len() != n {
                return Err(Error::LengthMismatch { expected: n, got: r.len() });
            }
            m.push(r.iter().map(|&x| field.reduce(x)).collect::<Vec<_>>());
        }
        let pivots = linalg::rref(&mut m, field);
        Ok(Self { field: *field, n, basis: m, pivots, tag: ModulusTag::None })
    }

    pub fn zero(field: &PrimeField, n: usize) -> Self {
        Self { field: *field, n, basis: Vec::new(), pivots: Vec::new(), tag: ModulusTag::None }
    }

    pub fn full(field: &PrimeField, n: usize) -> Self {
        let basis = (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                v
            })
            .collect();
        Self { field: *field, n, basis, pivots: (0..n).collect(), tag: ModulusTag::None }
    }

    /// Code spanned by `g, x g, ..., x^{n - deg g - 1} g` for a divisor `g`
    /// of `x^n - sign`.
    pub fn cyclic_from_gpoly(g: &FpPoly, n: usize, sign: i8, field: &PrimeField) -> Result<Self> {
        let modulus = FpPoly::x_n_minus(field.p(), n, sign as i64);
        if g.p() != field.p() {
            return Err(Error::FieldMismatch(g.p(), field.p()));
        }
        if !g.divides(&modulus) {
            return Err(Error::NotADivisor(modulus.to_string()));
        }
        let dg = g.degree().expect("divisor is nonzero");
        let rows: Vec<Vec<u64>> = (0..n - dg)
            .map(|j| {
                let mut v = vec![0u64; n];
                for (i, &c) in g.coeffs().iter().enumerate() {
                    v[i + j] = c;
                }
                v
            })
            .collect();
        Ok(Self::from_generators(&rows, field, n)?.with_tag(ModulusTag::from_sign(sign)))
    }

    /// The ideal generated by an arbitrary `f` in `F_p[x]/(x^n - sign)`:
    /// the span of `x^j f` for `j < n`.
    pub fn ideal_code(f: &FpPoly, n: usize, sign: i8, field: &PrimeField) -> Result<Self> {
        if f.p() != field.p() {
            return Err(Error::FieldMismatch(f.p(), field.p()));
        }
        let c = field.from_i64(sign as i64);
        let mut cur = f.reduce_mod_xn(n, c);
        let mut rows = Vec::with_capacity(n);
        for _ in 0..n {
            rows.push(cur.to_vec(n));
            cur = shift_poly(&cur, n, c);
        }
        Ok(Self::from_generators(&rows, field, n)?.with_tag(ModulusTag::from_sign(sign)))
    }

    /// Cyclic code of length `q` generated by an idempotent of
    /// `F_p[x]/(x^q - 1)`.
    pub fn from_idempotent(e: &FpPoly, q: usize, field: &PrimeField) -> Result<Self> {
        let e = e.reduce_mod_xn(q, 1);
        if e.mul_mod_xn(&e, q, 1) != e {
            return Err(Error::NotIdempotent(q));
        }
        Self::ideal_code(&e, q, 1, field)
    }

    pub fn with_tag(mut self, tag: ModulusTag) -> Self {
        self.tag = tag;
        self
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn p(&self) -> u64 {
        self.field.p()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<u64>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn tag(&self) -> ModulusTag {
        self.tag
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        if v.len() != self.n {
            return false;
        }
        let f = &self.field;
        let mut w: Vec<u64> = v.iter().map(|&x| f.reduce(x)).collect();
        for (row, &pc) in self.basis.iter().zip(&self.pivots) {
            let c = w[pc];
            if c == 0 {
                continue;
            }
            for (x, &y) in w.iter_mut().zip(row) {
                *x = f.sub(*x, f.mul(c, y));
            }
        }
        w.iter().all(|&x| x == 0)
    }

    pub fn is_subcode_of(&self, other: &Self) -> bool {
        self.n == other.n && self.basis.iter().all(|r| other.contains(r))
    }

    pub fn dual(&self) -> Self {
        let basis = linalg::null_space_of_rref(&self.basis, &self.pivots, self.n, &self.field);
        let tag = self.tag;
        Self::from_generators(&basis, &self.field, self.n)
            .expect("null space vectors have length n")
            .with_tag(tag)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.field.p() != other.field.p() {
            return Err(Error::FieldMismatch(self.field.p(), other.field.p()));
        }
        if self.n != other.n {
            return Err(Error::LengthMismatch { expected: self.n, got: other.n });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let rows: Vec<Vec<u64>> = self.basis.iter().chain(&other.basis).cloned().collect();
        let tag = if self.tag == other.tag { self.tag } else { ModulusTag::None };
        Ok(Self::from_generators(&rows, &self.field, self.n)?.with_tag(tag))
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let tag = if self.tag == other.tag { self.tag } else { ModulusTag::None };
        Ok(self.dual().sum(&other.dual())?.dual().with_tag(tag))
    }

    pub fn is_self_orthogonal(&self) -> bool {
        self.basis.iter().all(|a| self.basis.iter().all(|b| linalg::dot(a, b, &self.field) == 0))
    }

    pub fn is_self_dual(&self) -> bool {
        2 * self.dim() == self.n && self.is_self_orthogonal()
    }

    /// Closed under `(v_0..v_{n-1}) -> (c v_{n-1}, v_0, ..., v_{n-2})`.
    pub fn is_constacyclic(&self, c: u64) -> bool {
        self.basis.iter().all(|r| self.contains(&constashift(r, c, &self.field)))
    }

    pub fn is_cyclic(&self) -> bool {
        self.is_constacyclic(1)
    }

    pub fn is_negacyclic(&self) -> bool {
        self.is_constacyclic(self.field.p() - 1)
    }

    /// Monic generator of the code as an ideal of `F_p[x]/(x^n - sign)`,
    /// i.e. the gcd of all basis rows with `x^n - sign`.
    pub fn generator_polynomial(&self, sign: i8) -> FpPoly {
        let p = self.field.p();
        self.basis.iter().fold(FpPoly::x_n_minus(p, self.n, sign as i64), |g, row| {
            poly_gcd(&g, &FpPoly::new(p, row.clone()))
        })
    }

    /// Coordinate permutation `i -> s i mod q` (code length must be `q`).
    pub fn multiplier(&self, s: i64, q: usize) -> Result<Self> {
        if self.n != q {
            return Err(Error::LengthMismatch { expected: q, got: self.n });
        }
        let m = MonomialMap::multiplier(s, q)?;
        let tag = self.tag;
        Ok(self.apply_monomial(&m)?.with_tag(tag))
    }

    pub fn apply_monomial(&self, m: &MonomialMap) -> Result<Self> {
        if m.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: m.len() });
        }
        let rows: Vec<Vec<u64>> = self.basis.iter().map(|r| m.apply(r, &self.field)).collect();
        Self::from_generators(&rows, &self.field, self.n)
    }

    /// `log_p |C|`.
    pub fn log_size(&self) -> usize {
        self.dim()
    }

    fn check_cap(&self, cap: u64) -> Result<()> {
        let size = (self.field.p() as u128).checked_pow(self.dim() as u32);
        match size {
            Some(s) if s <= cap as u128 => Ok(()),
            _ => Err(Error::TooLarge { size: format!("{}^{}", self.field.p(), self.dim()), cap }),
        }
    }

    /// Calls `visit` on every codeword (including zero), in a fixed order.
    pub fn for_each_codeword(&self, cap: u64, mut visit: impl FnMut(&[u64])) -> Result<()> {
        self.check_cap(cap)?;
        enumerate_span(&self.basis, self.n, &self.field, &mut visit);
        Ok(())
    }

    /// `W[w]` = number of codewords of Hamming weight `w`.
    pub fn weight_enumerator(&self, cap: u64) -> Result<Vec<u128>> {
        self.check_cap(cap)?;
        let n = self.n;
        let f = self.field;
        if self.basis.is_empty() {
            let mut w = vec![0u128; n + 1];
            w[0] = 1;
            return Ok(w);
        }
        // Split on the coefficient of the first basis row.
        let (first, rest) = self.basis.split_first().expect("nonempty basis");
        let partials: Vec<Vec<u128>> = (0..f.p())
            .into_par_iter()
            .map(|c| {
                let mut w = vec![0u128; n + 1];
                let offset: Vec<u64> = first.iter().map(|&x| f.mul(c, x)).collect();
                enumerate_span(rest, n, &f, &mut |v| {
                    let wt = v.iter().zip(&offset).filter(|(&a, &b)| f.add(a, b) != 0).count();
                    w[wt] += 1;
                });
                w
            })
            .collect();
        Ok(partials.into_iter().fold(vec![0u128; n + 1], |mut acc, w| {
            for (a, b) in acc.iter_mut().zip(w) {
                *a += b;
            }
            acc
        }))
    }

    /// Minimum nonzero Hamming weight; `None` for the zero code.
    pub fn min_distance(&self, cap: u64) -> Result<Option<usize>> {
        let w = self.weight_enumerator(cap)?;
        Ok(w.iter().enumerate().skip(1).find(|(_, &c)| c > 0).map(|(i, _)| i))
    }
}

fn shift_poly(f: &FpPoly, n: usize, c: u64) -> FpPoly {
    let v = f.to_vec(n);
    FpPoly::new(f.p(), constashift_raw(&v, c, f.p()))
}

fn constashift_raw(v: &[u64], c: u64, p: u64) -> Vec<u64> {
    let n = v.len();
    let mut out = vec![0u64; n];
    if n == 0 {
        return out;
    }
    out[0] = v[n - 1] * c % p;
    out[1..].copy_from_slice(&v[..n - 1]);
    out
}

/// `(v_0, ..., v_{n-1}) -> (c v_{n-1}, v_0, ..., v_{n-2})`.
pub fn constashift(v: &[u64], c: u64, field: &PrimeField) -> Vec<u64> {
    constashift_raw(v, c, field.p())
}

/// Odometer over all `F_p` combinations of `rows`; each step adds one row
/// (plus one more for each digit that wraps, since `p` copies vanish).
fn enumerate_span(rows: &[Vec<u64>], n: usize, f: &PrimeField, visit: &mut impl FnMut(&[u64])) {
    let k = rows.len();
    let p = f.p();
    let mut word = vec![0u64; n];
    let mut digits = vec![0u64; k];
    loop {
        visit(&word);
        let mut i = 0;
        loop {
            if i == k {
                return;
            }
            for (x, &y) in word.iter_mut().zip(&rows[i]) {
                *x = f.add(*x, y);
            }
            digits[i] += 1;
            if digits[i] < p {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

fn binomial(n: u64, k: u64) -> i128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

/// Krawtchouk polynomial `K_w(j)` for length `n` over an alphabet of size `q`.
pub fn krawtchouk(w: usize, j: usize, n: usize, q: u64) -> i128 {
    (0..=w)
        .map(|s| {
            let sign = if s % 2 == 0 { 1 } else { -1 };
            sign * ((q - 1) as i128).pow((w - s) as u32)
                * binomial(j as u64, s as u64)
                * binomial((n - j) as u64, (w - s) as u64)
        })
        .sum()
}

/// MacWilliams transform: the weight enumerator of the dual code computed
/// from that of the code. `None` if the result is not integral and
/// nonnegative (the input cannot be a linear code's enumerator).
pub fn macwilliams_transform(weights: &[u128], p: u64) -> Option<Vec<u128>> {
    let n = weights.len().checked_sub(1)?;
    let size: u128 = weights.iter().sum();
    (0..=n)
        .map(|w| {
            let total: i128 = (0..=n).map(|j| weights[j] as i128 * krawtchouk(w, j, n, p)).sum();
            (total >= 0 && total % size as i128 == 0).then(|| (total / size as i128) as u128)
        })
        .collect()
}

/// Convenience: monic `gcd(E, x^q - 1)` for an idempotent `E`.
pub fn gen_poly_from_idempotent(e: &FpPoly, q: usize, field: &PrimeField) -> Result<FpPoly> {
    let e = e.reduce_mod_xn(q, 1);
    if e.mul_mod_xn(&e, q, 1) != e {
        return Err(Error::NotIdempotent(q));
    }
    Ok(poly_gcd(&e, &FpPoly::x_n_minus(field.p(), q, 1)))
}
