//! Linear codes over `R` stored as four component codes over `F_p`.
//!
//! A code `C` over `R` is `eta_1 C_1 + eta_2 C_2 + eta_3 C_3 + eta_4 C_4`.
//! Because `eta_i eta_j = 0` for `i != j`, the `R`-inner product splits into
//! the four `F_p` inner products, so duals and self-duality are computed per
//! component.

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{gcd_u64, PrimeField};
use crate::fpcode::{FpLinearCode, MonomialMap};
use crate::poly::{factor_xn_pm1, poly_gcd, FpPoly, RPoly};
use crate::ring::{Ring, RingElement};

/// Sign of `x^n - sign` for component `i`: `+1` for the first component,
/// `-1` for the others (the components of `1 - 2u^3`).
pub const CONSTA_SIGNS: [i8; 4] = [1, -1, -1, -1];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RLinearCode {
    ring: Ring,
    n: usize,
    comps: [FpLinearCode; 4],
}

impl RLinearCode {
    pub fn from_components(ring: &Ring, comps: [FpLinearCode; 4]) -> Result<Self> {
        let n = comps[0].n();
        for c in &comps {
            if c.p() != ring.p() {
                return Err(Error::FieldMismatch(c.p(), ring.p()));
            }
            if c.n() != n {
                return Err(Error::LengthMismatch { expected: n, got: c.n() });
            }
        }
        Ok(Self { ring: ring.clone(), n, comps })
    }

    pub fn zero(ring: &Ring, n: usize) -> Self {
        let z = FpLinearCode::zero(ring.field(), n);
        Self { ring: ring.clone(), n, comps: std::array::from_fn(|_| z.clone()) }
    }

    pub fn full(ring: &Ring, n: usize) -> Self {
        let f = FpLinearCode::full(ring.field(), n);
        Self { ring: ring.clone(), n, comps: std::array::from_fn(|_| f.clone()) }
    }

    /// `R`-span of the given rows.
    pub fn from_rows(ring: &Ring, rows: &[Vec<RingElement>], n: usize) -> Result<Self> {
        let mut parts: [Vec<Vec<u64>>; 4] = Default::default();
        for row in rows {
            if row.len() != n {
                return Err(Error::LengthMismatch { expected: n, got: row.len() });
            }
            let dec: Vec<[u64; 4]> = row.iter().map(|r| ring.decompose(r)).collect();
            for (i, part) in parts.iter_mut().enumerate() {
                part.push(dec.iter().map(|x| x[i]).collect());
            }
        }
        let mut comps = Vec::with_capacity(4);
        for part in &parts {
            comps.push(FpLinearCode::from_generators(part, ring.field(), n)?);
        }
        Self::from_components(ring, comps.try_into().expect("four components"))
    }

    /// The ideal generated by `f` in `R[x]/(x^n - c)`, where every
    /// component of `c` must be `1` or `-1`.
    pub fn ideal(ring: &Ring, f: &RPoly, n: usize, c: &RingElement) -> Result<Self> {
        let signs = component_signs(ring, c)?;
        let parts = f.components(ring);
        let mut comps = Vec::with_capacity(4);
        for (part, sign) in parts.iter().zip(signs) {
            comps.push(FpLinearCode::ideal_code(part, n, sign, ring.field())?);
        }
        Self::from_components(ring, comps.try_into().expect("four components"))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn field(&self) -> &PrimeField {
        self.ring.field()
    }

    pub fn p(&self) -> u64 {
        self.ring.p()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn comps(&self) -> &[FpLinearCode; 4] {
        &self.comps
    }

    pub fn comp(&self, i: usize) -> &FpLinearCode {
        &self.comps[i]
    }

    /// `log_p |C|`, the sum of the component dimensions.
    pub fn log_size(&self) -> usize {
        self.comps.iter().map(FpLinearCode::dim).sum()
    }

    pub fn size(&self) -> BigUint {
        BigUint::from(self.p()).pow(self.log_size() as u32)
    }

    pub fn contains(&self, v: &[RingElement]) -> bool {
        if v.len() != self.n {
            return false;
        }
        let dec: Vec<[u64; 4]> = v.iter().map(|r| self.ring.decompose(r)).collect();
        self.comps.iter().enumerate().all(|(i, c)| {
            let col: Vec<u64> = dec.iter().map(|x| x[i]).collect();
            c.contains(&col)
        })
    }

    pub fn is_subcode_of(&self, other: &Self) -> bool {
        self.comps.iter().zip(&other.comps).all(|(a, b)| a.is_subcode_of(b))
    }

    pub fn dual(&self) -> Self {
        Self { ring: self.ring.clone(), n: self.n, comps: self.comps.clone().map(|c| c.dual()) }
    }

    fn zip_with(
        &self,
        other: &Self,
        op: impl Fn(&FpLinearCode, &FpLinearCode) -> Result<FpLinearCode>,
    ) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::LengthMismatch { expected: self.n, got: other.n });
        }
        let mut comps = Vec::with_capacity(4);
        for (a, b) in self.comps.iter().zip(&other.comps) {
            comps.push(op(a, b)?);
        }
        Self::from_components(&self.ring, comps.try_into().expect("four components"))
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, FpLinearCode::intersect)
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, FpLinearCode::sum)
    }

    pub fn is_self_orthogonal(&self) -> bool {
        self.comps.iter().all(FpLinearCode::is_self_orthogonal)
    }

    pub fn is_self_dual(&self) -> bool {
        self.comps.iter().all(FpLinearCode::is_self_dual)
    }

    /// Closed under the `(1 - 2u^3)`-constacyclic shift.
    pub fn is_lambda_constacyclic(&self) -> bool {
        self.comps[0].is_cyclic() && self.comps[1..].iter().all(FpLinearCode::is_negacyclic)
    }

    pub fn is_cyclic(&self) -> bool {
        self.comps.iter().all(FpLinearCode::is_cyclic)
    }

    /// Image under `(c_0, ..., c_{n-1}) -> (pi_0 c_0, ..., pi_{n-1} c_{n-1})`
    /// for units `pi_i`.
    pub fn scale_positions(&self, pis: &[RingElement]) -> Result<Self> {
        if pis.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: pis.len() });
        }
        if !pis.iter().all(|u| self.ring.is_unit(u)) {
            return Err(Error::NotAUnit);
        }
        let dec: Vec<[u64; 4]> = pis.iter().map(|u| self.ring.decompose(u)).collect();
        let mut comps = Vec::with_capacity(4);
        for (i, c) in self.comps.iter().enumerate() {
            let m = MonomialMap::scaling(dec.iter().map(|x| x[i]).collect(), self.field())?;
            comps.push(c.apply_monomial(&m)?);
        }
        Self::from_components(&self.ring, comps.try_into().expect("four components"))
    }

    /// Same monomial map applied to every component.
    pub fn apply_monomial(&self, m: &MonomialMap) -> Result<Self> {
        let mut comps = Vec::with_capacity(4);
        for c in &self.comps {
            comps.push(c.apply_monomial(m)?);
        }
        Self::from_components(&self.ring, comps.try_into().expect("four components"))
    }

    /// Generator rows over `R`: row `k` is `sum_i eta_i B_i[k]`, where
    /// `B_i` is the echelon basis of component `i`.
    pub fn generator_rows(&self) -> Vec<Vec<RingElement>> {
        let k = self.comps.iter().map(FpLinearCode::dim).max().unwrap_or(0);
        (0..k)
            .map(|row| {
                (0..self.n)
                    .map(|j| {
                        let x: [u64; 4] =
                            std::array::from_fn(|i| self.comps[i].basis().get(row).map_or(0, |r| r[j]));
                        self.ring.compose(x)
                    })
                    .collect()
            })
            .collect()
    }

    /// An `F_p`-spanning set: `eta_i` times each basis row of `C_i`.
    pub fn fp_spanning_set(&self) -> Vec<Vec<RingElement>> {
        let mut out = Vec::with_capacity(self.log_size());
        for (i, c) in self.comps.iter().enumerate() {
            for row in c.basis() {
                out.push(row.iter().map(|&x| self.ring.embed_component(i, x)).collect());
            }
        }
        out
    }

    /// Every codeword, in a fixed order.
    pub fn codewords(&self, cap: u64) -> Result<Vec<Vec<RingElement>>> {
        let size = (self.p() as u128).checked_pow(self.log_size() as u32);
        if !matches!(size, Some(s) if s <= cap as u128) {
            return Err(Error::TooLarge { size: format!("{}^{}", self.p(), self.log_size()), cap });
        }
        let mut lists: Vec<Vec<Vec<u64>>> = Vec::with_capacity(4);
        for c in &self.comps {
            let mut words = Vec::new();
            c.for_each_codeword(cap, |w| words.push(w.to_vec()))?;
            lists.push(words);
        }
        let mut out = Vec::with_capacity(size.unwrap_or(0) as usize);
        for w0 in &lists[0] {
            for w1 in &lists[1] {
                for w2 in &lists[2] {
                    for w3 in &lists[3] {
                        out.push(
                            (0..self.n).map(|j| self.ring.compose([w0[j], w1[j], w2[j], w3[j]])).collect(),
                        );
                    }
                }
            }
        }
        Ok(out)
    }
}

fn component_signs(ring: &Ring, c: &RingElement) -> Result<[i8; 4]> {
    let p = ring.p();
    let mut signs = [0i8; 4];
    for (s, x) in signs.iter_mut().zip(ring.decompose(c)) {
        *s = match x {
            1 => 1,
            x if x == p - 1 => -1,
            _ => return Err(Error::Invalid(format!("{c} is not a sign in every component"))),
        };
    }
    Ok(signs)
}

/// `sum_i x_i y_i` over `R`.
pub fn inner_product(ring: &Ring, x: &[RingElement], y: &[RingElement]) -> RingElement {
    x.iter().zip(y).fold(RingElement::ZERO, |acc, (a, b)| ring.add(&acc, &ring.mul(a, b)))
}

/// `(c_0, ..., c_{n-1}) -> (lambda c_{n-1}, c_0, ..., c_{n-2})`.
pub fn consta_shift(ring: &Ring, v: &[RingElement], lambda: &RingElement) -> Vec<RingElement> {
    let n = v.len();
    if n == 0 {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(n);
    out.push(ring.mul(lambda, &v[n - 1]));
    out.extend_from_slice(&v[..n - 1]);
    out
}

/// Component generator polynomials of a `(1 - 2u^3)`-constacyclic code,
/// their complements `h_i = (x^n - s_i) / g_i`, and the assembled `g`, `h`
/// over `R`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstaGenerators {
    pub n: usize,
    pub g: [FpPoly; 4],
    pub h: [FpPoly; 4],
    pub g_assembled: RPoly,
    pub h_assembled: RPoly,
}

impl ConstaGenerators {
    /// Validates `g_1 | x^n - 1` and `g_i | x^n + 1` (`i > 1`); the inputs
    /// are normalized to be monic.
    pub fn new(ring: &Ring, g: [FpPoly; 4], n: usize) -> Result<Self> {
        Self::with_signs(ring, g, n, CONSTA_SIGNS)
    }

    fn with_signs(ring: &Ring, g: [FpPoly; 4], n: usize, signs: [i8; 4]) -> Result<Self> {
        let p = ring.p();
        check_coprime(n, p)?;
        let mut hs = Vec::with_capacity(4);
        let mut gs = Vec::with_capacity(4);
        for (gi, sign) in g.iter().zip(signs) {
            if gi.p() != p {
                return Err(Error::FieldMismatch(gi.p(), p));
            }
            if gi.is_zero() {
                return Err(Error::NotADivisor(FpPoly::x_n_minus(p, n, sign as i64).to_string()));
            }
            let gi = gi.monic();
            let modulus = FpPoly::x_n_minus(p, n, sign as i64);
            let (h, r) = modulus.divmod(&gi)?;
            if !r.is_zero() {
                return Err(Error::NotADivisor(modulus.to_string()));
            }
            gs.push(gi);
            hs.push(h);
        }
        let g: [FpPoly; 4] = gs.try_into().expect("four components");
        let h: [FpPoly; 4] = hs.try_into().expect("four components");
        Ok(Self {
            n,
            g_assembled: RPoly::from_components(ring, [&g[0], &g[1], &g[2], &g[3]]),
            h_assembled: RPoly::from_components(ring, [&h[0], &h[1], &h[2], &h[3]]),
            g,
            h,
        })
    }

    pub fn degree_sum(&self) -> usize {
        self.g.iter().map(|g| g.degree().unwrap_or(0)).sum()
    }

    /// Monic reciprocals of the `h_i`: generators of the dual code.
    pub fn dual(&self, ring: &Ring) -> Result<Self> {
        let mut g = Vec::with_capacity(4);
        for h in &self.h {
            g.push(h.reciprocal()?.monic());
        }
        Self::new(ring, g.try_into().expect("four components"), self.n)
    }

    /// `h^perp = sum_i eta_i h_i^perp` over `R`.
    pub fn h_perp(&self, ring: &Ring) -> Result<RPoly> {
        Ok(self.dual(ring)?.g_assembled)
    }
}

fn check_coprime(n: usize, p: u64) -> Result<()> {
    if n == 0 || gcd_u64(n as u64, p) != 1 {
        return Err(Error::RepeatedRoots { n, p });
    }
    Ok(())
}

/// The `(1 - 2u^3)`-constacyclic code `<sum eta_i g_i>` of length `n`.
pub fn consta_build(ring: &Ring, g: [FpPoly; 4], n: usize) -> Result<(RLinearCode, ConstaGenerators)> {
    let gens = ConstaGenerators::new(ring, g, n)?;
    let code = code_from_generators(ring, &gens, CONSTA_SIGNS)?;
    Ok((code, gens))
}

fn code_from_generators(ring: &Ring, gens: &ConstaGenerators, signs: [i8; 4]) -> Result<RLinearCode> {
    let mut comps = Vec::with_capacity(4);
    for (g, sign) in gens.g.iter().zip(signs) {
        comps.push(FpLinearCode::cyclic_from_gpoly(g, gens.n, sign, ring.field())?);
    }
    RLinearCode::from_components(ring, comps.try_into().expect("four components"))
}

/// Cyclic code over `R` from component generators dividing `x^n - 1`.
pub fn cyclic_build(ring: &Ring, g: [FpPoly; 4], n: usize) -> Result<(RLinearCode, ConstaGenerators)> {
    let gens = ConstaGenerators::with_signs(ring, g, n, [1; 4])?;
    let code = code_from_generators(ring, &gens, [1; 4])?;
    Ok((code, gens))
}

/// Numbers of irreducible factors of `x^n - 1` and `x^n + 1`.
pub fn factor_counts(n: usize, field: &PrimeField) -> Result<(usize, usize)> {
    check_coprime(n, field.p())?;
    Ok((factor_xn_pm1(n, 1, field)?.len(), factor_xn_pm1(n, -1, field)?.len()))
}

/// Number of `(1 - 2u^3)`-constacyclic codes of length `n`: `2^{r_1} 8^{r_2}`.
pub fn count_constacyclic(n: usize, field: &PrimeField) -> Result<BigUint> {
    let (r1, r2) = factor_counts(n, field)?;
    Ok(BigUint::from(2u32).pow(r1 as u32) * BigUint::from(8u32).pow(r2 as u32))
}

/// All monic divisors of `x^n - sign`, one per subset of irreducible factors.
pub fn monic_divisors(n: usize, sign: i8, field: &PrimeField) -> Result<Vec<FpPoly>> {
    check_coprime(n, field.p())?;
    let factors = factor_xn_pm1(n, sign, field)?;
    let mut out = vec![FpPoly::one(field.p())];
    for f in &factors {
        let extra: Vec<FpPoly> = out.iter().map(|d| d.mul(f)).collect();
        out.extend(extra);
    }
    out.sort();
    Ok(out)
}

/// Every `(1 - 2u^3)`-constacyclic code of length `n`, as generator
/// quadruples.
pub fn all_constacyclic_generators(n: usize, field: &PrimeField) -> Result<Vec<[FpPoly; 4]>> {
    let cyc = monic_divisors(n, 1, field)?;
    let neg = monic_divisors(n, -1, field)?;
    let mut out = Vec::with_capacity(cyc.len() * neg.len().pow(3));
    for g1 in &cyc {
        for g2 in &neg {
            for g3 in &neg {
                for g4 in &neg {
                    out.push([g1.clone(), g2.clone(), g3.clone(), g4.clone()]);
                }
            }
        }
    }
    Ok(out)
}

/// How a constacyclic code of length `n` is carried to a cyclic one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CyclicEquivalence {
    /// `n` odd: the substitution `x -> (1 - 2u^3) x`.
    Substitution,
    /// `n` even: `x -> Delta x` with `Delta = eta_1 + delta (1 - eta_1)`,
    /// where `delta^n = -1` in `F_p`.
    Scaling {
        delta: u64,
    },
    NotEquivalent,
}

impl CyclicEquivalence {
    pub fn is_equivalent(&self) -> bool {
        !matches!(self, Self::NotEquivalent)
    }

    /// The unit `Delta` with `Delta^n = 1 - 2u^3`.
    pub fn unit(&self, ring: &Ring) -> Option<RingElement> {
        match *self {
            Self::Substitution => Some(ring.lambda()),
            Self::Scaling { delta } => Some(ring.compose([1, delta, delta, delta])),
            Self::NotEquivalent => None,
        }
    }

    /// Maps a constacyclic code to the equivalent cyclic code by scaling
    /// position `i` with `Delta^{-i}`.
    pub fn to_cyclic(&self, code: &RLinearCode) -> Result<RLinearCode> {
        let ring = code.ring();
        let unit = self.unit(ring).ok_or_else(|| Error::Invalid("no cyclic equivalent".into()))?;
        let inv = ring.inverse(&unit)?;
        code.scale_positions(&powers(ring, &inv, code.n()))
    }

    /// Inverse of [`CyclicEquivalence::to_cyclic`].
    pub fn from_cyclic(&self, code: &RLinearCode) -> Result<RLinearCode> {
        let ring = code.ring();
        let unit = self.unit(ring).ok_or_else(|| Error::Invalid("no cyclic equivalent".into()))?;
        code.scale_positions(&powers(ring, &unit, code.n()))
    }
}

fn powers(ring: &Ring, x: &RingElement, n: usize) -> Vec<RingElement> {
    let mut out = Vec::with_capacity(n);
    let mut cur = RingElement::ONE;
    for _ in 0..n {
        out.push(cur);
        cur = ring.mul(&cur, x);
    }
    out
}

/// Whether `(1 - 2u^3)`-constacyclic codes of length `n` are equivalent to
/// cyclic codes; for even `n` the smallest `delta` with `delta^n = -1` is the
/// witness.
pub fn equivalent_to_cyclic(n: usize, field: &PrimeField) -> Result<CyclicEquivalence> {
    check_coprime(n, field.p())?;
    if n % 2 == 1 {
        return Ok(CyclicEquivalence::Substitution);
    }
    let minus_one = field.p() - 1;
    Ok((1..field.p())
        .find(|&d| field.pow(d, n as u64) == minus_one)
        .map_or(CyclicEquivalence::NotEquivalent, |delta| CyclicEquivalence::Scaling { delta }))
}

/// `<g f>` in `R[x]/(x^n - (1 - 2u^3))`, provided `f` is coprime to `h`
/// in every component; in that case it equals `<g>`.
pub fn generated_by_product(ring: &Ring, gens: &ConstaGenerators, f: &RPoly) -> Result<RLinearCode> {
    let parts = f.components(ring);
    for (fi, hi) in parts.iter().zip(&gens.h) {
        if !poly_gcd(fi, hi).is_one() {
            return Err(Error::Invalid(format!("gcd({fi}, {hi}) != 1")));
        }
    }
    let gf = gens.g_assembled.mul(ring, f);
    RLinearCode::ideal(ring, &gf, gens.n, &ring.lambda())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring7() -> Ring {
        Ring::new(PrimeField::new(7).unwrap()).unwrap()
    }

    fn poly(c: &[i64]) -> FpPoly {
        FpPoly::from_i64(7, c)
    }

    fn example1(ring: &Ring) -> (RLinearCode, ConstaGenerators) {
        let g = [poly(&[1, 1, 1, 1, 1]), poly(&[1, -1, 1, -1, 1]), poly(&[1, 1]), poly(&[1, 1])];
        consta_build(ring, g, 5).unwrap()
    }

    #[test]
    fn sizes_and_duals() {
        let ring = ring7();
        let (c, gens) = example1(&ring);
        assert_eq!(gens.degree_sum(), 10);
        assert_eq!(c.log_size(), 20 - 10);
        assert_eq!(c.dual().log_size(), 10);
        assert_eq!(c.dual().dual(), c);
        assert!(c.is_lambda_constacyclic());
        let dual_gens = gens.dual(&ring).unwrap();
        let (d, _) = consta_build(&ring, dual_gens.g.clone(), 5).unwrap();
        assert_eq!(d, c.dual());
        assert_eq!(gens.h_perp(&ring).unwrap(), dual_gens.g_assembled);
    }

    #[test]
    fn g_times_h() {
        let ring = ring7();
        let (_, gens) = example1(&ring);
        let prod = gens.g_assembled.mul(&ring, &gens.h_assembled);
        assert_eq!(prod, RPoly::x_n_minus(&ring, 5, &ring.lambda()));
    }

    #[test]
    fn trivial_codes() {
        let ring = ring7();
        let one = FpPoly::one(7);
        let (c, _) = consta_build(&ring, std::array::from_fn(|_| one.clone()), 4).unwrap();
        assert_eq!(c, RLinearCode::full(&ring, 4));
        assert_eq!(c.size(), BigUint::from(7u32).pow(16));
        let xn = FpPoly::x_n_minus(7, 4, 1);
        let (z, _) = cyclic_build(&ring, std::array::from_fn(|_| xn.clone()), 4).unwrap();
        assert_eq!(z, RLinearCode::zero(&ring, 4));
        assert!(RLinearCode::zero(&ring, 3).is_lambda_constacyclic());
        assert!(!RLinearCode::zero(&ring, 3).is_self_dual());
        assert_eq!(RLinearCode::full(&ring, 3).dual(), RLinearCode::zero(&ring, 3));
    }

    #[test]
    fn precondition_errors() {
        let ring = ring7();
        let one = FpPoly::one(7);
        assert_eq!(
            consta_build(&ring, std::array::from_fn(|_| one.clone()), 7).unwrap_err(),
            Error::RepeatedRoots { n: 7, p: 7 }
        );
        let bad = [poly(&[1, 1]), one.clone(), one.clone(), one];
        assert!(matches!(consta_build(&ring, bad, 5), Err(Error::NotADivisor(_))));
        assert_eq!(count_constacyclic(14, ring.field()), Err(Error::RepeatedRoots { n: 14, p: 7 }));
    }

    #[test]
    fn counts() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(count_constacyclic(5, &f).unwrap(), BigUint::from(256u32));
        assert_eq!(count_constacyclic(8, &f).unwrap(), BigUint::from(131072u32));
        assert_eq!(factor_counts(2, &f).unwrap(), (2, 1));
        assert_eq!(all_constacyclic_generators(2, &f).unwrap().len(), 32);
        assert_eq!(monic_divisors(5, 1, &f).unwrap().len(), 4);
    }

    #[test]
    fn equivalence_decisions() {
        let f7 = PrimeField::new(7).unwrap();
        assert_eq!(equivalent_to_cyclic(5, &f7).unwrap(), CyclicEquivalence::Substitution);
        assert_eq!(equivalent_to_cyclic(8, &f7).unwrap(), CyclicEquivalence::NotEquivalent);
        assert_eq!(equivalent_to_cyclic(2, &f7).unwrap(), CyclicEquivalence::NotEquivalent);
        let f13 = PrimeField::new(13).unwrap();
        assert_eq!(equivalent_to_cyclic(2, &f13).unwrap(), CyclicEquivalence::Scaling { delta: 5 });
    }

    #[test]
    fn equivalence_maps_constacyclic_to_cyclic() {
        for (p, n) in [(7u64, 5usize), (13, 2), (73, 4), (19, 3)] {
            let ring = Ring::new(PrimeField::new(p).unwrap()).unwrap();
            let eq = equivalent_to_cyclic(n, ring.field()).unwrap();
            let unit = eq.unit(&ring).unwrap();
            assert_eq!(ring.pow(&unit, n as u64), ring.lambda());
            for g in all_constacyclic_generators(n, ring.field()).unwrap().into_iter().take(40) {
                let (c, _) = consta_build(&ring, g, n).unwrap();
                let cyc = eq.to_cyclic(&c).unwrap();
                assert!(cyc.is_cyclic());
                assert_eq!(eq.from_cyclic(&cyc).unwrap(), c);
            }
        }
    }

    #[test]
    fn membership_and_generator_rows() {
        let ring = ring7();
        let (c, gens) = example1(&ring);
        for row in c.generator_rows() {
            assert!(c.contains(&row));
        }
        assert_eq!(RLinearCode::from_rows(&ring, &c.generator_rows(), 5).unwrap(), c);
        assert_eq!(RLinearCode::from_rows(&ring, &c.fp_spanning_set(), 5).unwrap(), c);
        assert!(c.contains(&gens.g_assembled.to_vec(5)));
        let mut bad = vec![RingElement::ZERO; 5];
        bad[0] = RingElement::ONE;
        assert!(!c.contains(&bad));
        assert_eq!(RLinearCode::ideal(&ring, &gens.g_assembled, 5, &ring.lambda()).unwrap(), c);
    }

    #[test]
    fn product_with_coprime_factor_generates_same_code() {
        let ring = ring7();
        let (c, gens) = example1(&ring);
        // f = 3 + x: its components do not vanish at the roots of any h_i.
        let f = RPoly::new(vec![ring.scalar(3), RingElement::ONE]);
        assert_eq!(generated_by_product(&ring, &gens, &f).unwrap(), c);
        let shared =
            RPoly::from_components(&ring, [&gens.h[0], &FpPoly::one(7), &FpPoly::one(7), &FpPoly::one(7)]);
        assert!(generated_by_product(&ring, &gens, &shared).is_err());
    }

    #[test]
    fn codeword_enumeration() {
        let ring = ring7();
        let one = FpPoly::one(7);
        let xn = FpPoly::x_n_minus(7, 2, -1);
        let g = [FpPoly::x_n_minus(7, 2, 1), one, xn.clone(), xn];
        let (c, _) = consta_build(&ring, g, 2).unwrap();
        let words = c.codewords(1 << 20).unwrap();
        assert_eq!(words.len(), 49);
        assert!(words.iter().all(|w| c.contains(w)));
        assert!(matches!(RLinearCode::full(&ring, 3).codewords(1000), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn shift_by_lambda() {
        let ring = ring7();
        let v = vec![ring.element(1, 2, 3, 4), ring.element(0, 0, 0, 1)];
        let s = consta_shift(&ring, &v, &ring.lambda());
        assert_eq!(s[0], ring.mul(&ring.lambda(), &v[1]));
        assert_eq!(s[1], v[0]);
    }
}
