//! Prime fields `F_p`, small extension fields `F_{p^m}`, and the number
//! theory the code constructions lean on: Legendre symbols, square roots,
//! cube roots of unity and Gaussian sums.
//!
//! Field elements are plain `u64` values kept canonical in `[0, p)`; the
//! [`PrimeField`] value carries the modulus and performs the arithmetic.

use crate::error::{Error, Result};
use crate::poly::FpPoly;

/// Primes below this bound get exhaustive square roots.
const SQRT_SEARCH_BOUND: u64 = 10_000;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// The prime field `F_p` with its smallest primitive element and, when
/// `p ≡ 1 (mod 3)`, the cube root of unity `xi = alpha^((p-1)/3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
    alpha: u64,
    xi: Option<u64>,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p < 3 || !is_prime(p) || p >= 1 << 31 {
            return Err(Error::NonPrime(p));
        }
        let divisors = prime_divisors(p - 1);
        let alpha = (2..p)
            .find(|&g| divisors.iter().all(|&d| pow_mod(g, (p - 1) / d, p) != 1))
            .expect("every prime field has a primitive element");
        let xi = ((p - 1) % 3 == 0).then(|| pow_mod(alpha, (p - 1) / 3, p));
        Ok(Self { p, alpha, xi })
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    /// Smallest element of multiplicative order `p - 1`.
    pub fn alpha(&self) -> u64 {
        self.alpha
    }

    pub fn xi(&self) -> Option<u64> {
        self.xi
    }

    pub fn xi_or_err(&self) -> Result<u64> {
        self.xi.ok_or(Error::NoCubeRoot(self.p))
    }

    #[inline]
    pub fn reduce(&self, x: u64) -> u64 {
        x % self.p
    }

    #[inline]
    pub fn from_i64(&self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }

    /// Centered representative in `(-p/2, p/2]`.
    pub fn to_signed(&self, x: u64) -> i64 {
        if x > self.p / 2 {
            x as i64 - self.p as i64
        } else {
            x as i64
        }
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, a: u64, e: u64) -> u64 {
        pow_mod(a, e, self.p)
    }

    pub fn inv(&self, a: u64) -> Result<u64> {
        if a % self.p == 0 {
            return Err(Error::NotAUnit);
        }
        Ok(self.pow(a, self.p - 2))
    }

    pub fn div(&self, a: u64, b: u64) -> Result<u64> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: u64) -> u64 {
        multiplicative_order(a % self.p, self.p)
    }

    pub fn is_square(&self, a: u64) -> bool {
        let a = a % self.p;
        a == 0 || self.pow(a, (self.p - 1) / 2) == 1
    }

    /// Both square roots `(r, p - r)` with `r <= p - r`, or `None` for a
    /// non-residue.
    pub fn sqrt(&self, a: u64) -> Option<(u64, u64)> {
        let a = a % self.p;
        if a == 0 {
            return Some((0, 0));
        }
        if !self.is_square(a) {
            return None;
        }
        let r = if self.p < SQRT_SEARCH_BOUND {
            (1..self.p).find(|&r| self.mul(r, r) == a)?
        } else {
            self.tonelli_shanks(a)
        };
        let s = self.neg(r);
        Some((r.min(s), r.max(s)))
    }

    fn tonelli_shanks(&self, a: u64) -> u64 {
        let p = self.p;
        let mut q = p - 1;
        let mut s = 0u32;
        while q % 2 == 0 {
            q /= 2;
            s += 1;
        }
        let z = (2..p).find(|&z| !self.is_square(z)).expect("non-residue exists");
        let mut m = s;
        let mut c = self.pow(z, q);
        let mut t = self.pow(a, q);
        let mut r = self.pow(a, q.div_ceil(2));
        while t != 1 {
            let mut i = 0u32;
            let mut t2 = t;
            while t2 != 1 {
                t2 = self.mul(t2, t2);
                i += 1;
            }
            let b = self.pow(c, 1 << (m - i - 1));
            m = i;
            c = self.mul(b, b);
            t = self.mul(t, c);
            r = self.mul(r, b);
        }
        r
    }
}

/// Free-function form of [`PrimeField::sqrt`].
pub fn sqrt_mod(a: u64, field: &PrimeField) -> Option<(u64, u64)> {
    field.sqrt(a)
}

pub fn pow_mod(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc
}

/// Order of `a` in `(Z/m)^*`; `a` must be coprime to `m`.
pub fn multiplicative_order(a: u64, m: u64) -> u64 {
    let mut x = a % m;
    let mut k = 1;
    while x != 1 {
        x = x * a % m;
        k += 1;
    }
    k
}

/// Legendre symbol `(i / q)` for an odd prime `q`.
pub fn legendre(i: i64, q: u64) -> i8 {
    let r = i.rem_euclid(q as i64) as u64;
    if r == 0 {
        return 0;
    }
    if pow_mod(r, (q - 1) / 2, q) == 1 {
        1
    } else {
        -1
    }
}

/// Quadratic residues and non-residues in `1..q`, each ascending.
pub fn quadratic_residues(q: u64) -> (Vec<u64>, Vec<u64>) {
    (1..q).partition(|&i| legendre(i as i64, q) == 1)
}

/// `F_{p^m}` realized as `F_p[y]/(modulus)` with a monic irreducible modulus.
///
/// Elements are coefficient vectors of length `m`, low degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtField {
    base: PrimeField,
    m: usize,
    modulus: FpPoly,
}

impl ExtField {
    /// Builds the extension from the lexicographically smallest monic
    /// irreducible polynomial of degree `m`.
    pub fn new(base: PrimeField, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::Invalid("extension degree must be positive".into()));
        }
        let p = base.p();
        let mut tail = vec![0u64; m];
        loop {
            let mut coeffs = tail.clone();
            coeffs.push(1);
            let candidate = FpPoly::new(p, coeffs);
            if candidate.is_irreducible_by_trial_division() {
                return Ok(Self { base, m, modulus: candidate });
            }
            if !lex_increment(&mut tail, p) {
                unreachable!("irreducible polynomials exist in every degree");
            }
        }
    }

    pub fn with_modulus(base: PrimeField, modulus: FpPoly) -> Result<Self> {
        let m = modulus.degree().ok_or(Error::Invalid("zero modulus".into()))?;
        if modulus.p() != base.p() {
            return Err(Error::FieldMismatch(modulus.p(), base.p()));
        }
        if !modulus.is_monic() || m == 0 || !modulus.is_irreducible_by_trial_division() {
            return Err(Error::Invalid(format!("{modulus} is not monic irreducible")));
        }
        Ok(Self { base, m, modulus })
    }

    pub fn base(&self) -> &PrimeField {
        &self.base
    }

    pub fn degree(&self) -> usize {
        self.m
    }

    pub fn modulus(&self) -> &FpPoly {
        &self.modulus
    }

    /// `p^m`, the field size.
    pub fn order(&self) -> u128 {
        (self.base.p() as u128).pow(self.m as u32)
    }

    pub fn zero(&self) -> Vec<u64> {
        vec![0; self.m]
    }

    pub fn one(&self) -> Vec<u64> {
        self.embed(1)
    }

    pub fn embed(&self, c: u64) -> Vec<u64> {
        let mut v = self.zero();
        v[0] = self.base.reduce(c);
        v
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter().zip(b).map(|(&x, &y)| self.base.add(x, y)).collect()
    }

    pub fn sub(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter().zip(b).map(|(&x, &y)| self.base.sub(x, y)).collect()
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let f = &self.base;
        let m = self.m;
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = f.add(prod[i + j], f.mul(x, y));
            }
        }
        // modulus is monic: y^m = -(c_0 + ... + c_{m-1} y^{m-1})
        let low = &self.modulus.coeffs()[..m];
        for k in (m..prod.len()).rev() {
            let top = prod[k];
            if top == 0 {
                continue;
            }
            prod[k] = 0;
            for (j, &c) in low.iter().enumerate() {
                prod[k - m + j] = f.sub(prod[k - m + j], f.mul(top, c));
            }
        }
        prod.truncate(m);
        prod
    }

    pub fn pow(&self, a: &[u64], mut e: u128) -> Vec<u64> {
        let mut acc = self.one();
        let mut base = a.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn is_one(&self, a: &[u64]) -> bool {
        a[0] == 1 && a[1..].iter().all(|&c| c == 0)
    }

    /// `Some(c)` when `a` lies in the prime subfield.
    pub fn as_base(&self, a: &[u64]) -> Option<u64> {
        a[1..].iter().all(|&c| c == 0).then_some(a[0])
    }

    /// A primitive `q`-th root of unity (`q` prime dividing `p^m - 1`): the
    /// power `beta^((p^m-1)/q)` for the lexicographically first nonzero
    /// `beta` for which that power is not 1.
    pub fn root_of_unity(&self, q: u64) -> Result<Vec<u64>> {
        let order = self.order() - 1;
        if order % q as u128 != 0 {
            return Err(Error::Invalid(format!("{q} does not divide {}^{} - 1", self.base.p(), self.m)));
        }
        let exp = order / q as u128;
        let p = self.base.p();
        let mut beta = vec![0u64; self.m];
        while lex_increment(&mut beta, p) {
            let zeta = self.pow(&beta, exp);
            if !self.is_one(&zeta) {
                return Ok(zeta);
            }
        }
        unreachable!("the multiplicative group is cyclic")
    }
}

/// Advances a coefficient vector in lexicographic order with `v[0]` most
/// significant. Returns false after wrapping back to all zeros.
fn lex_increment(v: &mut [u64], p: u64) -> bool {
    for c in v.iter_mut().rev() {
        *c += 1;
        if *c < p {
            return true;
        }
        *c = 0;
    }
    false
}

/// The Gaussian sum `sum_{i=1}^{q-1} chi(i) zeta^i` for the conventional
/// `q`-th root of unity `zeta` (see [`ExtField::root_of_unity`]), computed in
/// `F_{p^m}` with `m = ord_q(p)` and returned as an element of `F_p`.
pub fn gaussian_sum(p: u64, q: u64, field: &PrimeField) -> Result<u64> {
    if field.p() != p {
        return Err(Error::FieldMismatch(p, field.p()));
    }
    if q < 3 || !is_prime(q) || q == p {
        return Err(Error::Invalid(format!("q = {q} must be an odd prime different from p")));
    }
    if legendre(p as i64, q) != 1 {
        return Err(Error::NotResidue { p, q });
    }
    let m = multiplicative_order(p % q, q) as usize;
    let ext = ExtField::new(*field, m)?;
    let zeta = ext.root_of_unity(q)?;
    gaussian_sum_at(&ext, &zeta, q)
}

/// Gaussian sum for an explicit primitive `q`-th root of unity.
pub fn gaussian_sum_at(ext: &ExtField, zeta: &[u64], q: u64) -> Result<u64> {
    let mut theta = ext.zero();
    let mut power = ext.one();
    for i in 1..q {
        power = ext.mul(&power, zeta);
        theta = match legendre(i as i64, q) {
            1 => ext.add(&theta, &power),
            _ => ext.sub(&theta, &power),
        };
    }
    ext.as_base(&theta).ok_or_else(|| Error::Invalid("Gaussian sum left the prime subfield".into()))
}

/// `theta^2` required by the Gaussian sum: `-q` when `q ≡ 3 (mod 4)`,
/// `q` when `q ≡ 1 (mod 4)`.
pub fn gaussian_sum_square(q: u64, field: &PrimeField) -> u64 {
    if q % 4 == 3 {
        field.neg(field.reduce(q))
    } else {
        field.reduce(q)
    }
}
