//! Gray maps from `R` to vectors over `F_p`.
//!
//! `phi` sends `a + bu + cu^2 + du^3` to `(-d, 2a + d)` and extends to
//! vectors blockwise: the first `n` coordinates hold the `-d_i`, the last
//! `n` the `2a_i + d_i`. It forgets `b` and `c`, so it is not injective.
//!
//! `psi` multiplies `(a, b, c, d)` by a fixed invertible 4x4 matrix and
//! extends coordinatewise, coordinate `j` landing in positions
//! `4j..4j + 4`. The result is the CRT decomposition of each coordinate,
//! so `psi` is a bijection that carries `R`-duality to `F_p`-duality.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::fpcode::FpLinearCode;
use crate::linalg;
use crate::poly::{poly_gcd, FpPoly, RPoly};
use crate::rcode::{ConstaGenerators, RLinearCode};
use crate::ring::RingElement;

pub fn phi_element(r: &RingElement, f: &PrimeField) -> (u64, u64) {
    let d = f.reduce(r.d);
    (f.neg(d), f.add(f.mul(2, f.reduce(r.a)), d))
}

pub fn phi(v: &[RingElement], f: &PrimeField) -> Vec<u64> {
    let n = v.len();
    let mut out = vec![0u64; 2 * n];
    for (i, r) in v.iter().enumerate() {
        let (x, y) = phi_element(r, f);
        out[i] = x;
        out[n + i] = y;
    }
    out
}

/// `-d(x) + x^n (2a(x) + d(x))` for `f` of degree below `n`.
pub fn phi_poly(poly: &RPoly, n: usize, f: &PrimeField) -> Result<FpPoly> {
    if let Some(deg) = poly.degree() {
        if deg >= n {
            return Err(Error::DegreeOverflow { degree: deg, bound: n });
        }
    }
    Ok(FpPoly::new(f.p(), phi(&poly.to_vec(n), f)))
}

/// Hamming weight of `phi(r)`.
pub fn gray_weight_phi(r: &RingElement, f: &PrimeField) -> usize {
    let (x, y) = phi_element(r, f);
    usize::from(x != 0) + usize::from(y != 0)
}

pub fn gray_weight_phi_vec(v: &[RingElement], f: &PrimeField) -> usize {
    v.iter().map(|r| gray_weight_phi(r, f)).sum()
}

pub fn gray_distance_phi(v: &[RingElement], w: &[RingElement], f: &PrimeField) -> usize {
    v.iter()
        .zip(w)
        .map(|(a, b)| {
            let diff = RingElement::new(f.sub(a.a, b.a), f.sub(a.b, b.b), f.sub(a.c, b.c), f.sub(a.d, b.d));
            gray_weight_phi(&diff, f)
        })
        .sum()
}

/// `phi(C)`: the span of `phi` over an `F_p`-spanning set of `C`.
pub fn phi_image_code(c: &RLinearCode) -> FpLinearCode {
    let f = c.field();
    let rows: Vec<Vec<u64>> = c.fp_spanning_set().iter().map(|v| phi(v, f)).collect();
    FpLinearCode::from_generators(&rows, f, 2 * c.n()).expect("rows have length 2n")
}

/// `g_1 gcd(g_2, g_3, g_4)`, a divisor of `x^{2n} - 1`.
pub fn phi_container_poly(gens: &ConstaGenerators) -> FpPoly {
    let common = poly_gcd(&poly_gcd(&gens.g[1], &gens.g[2]), &gens.g[3]);
    gens.g[0].mul(&common)
}

/// The cyclic code of length `2n` that contains `phi(C)`.
pub fn phi_container_code(gens: &ConstaGenerators, f: &PrimeField) -> Result<FpLinearCode> {
    FpLinearCode::cyclic_from_gpoly(&phi_container_poly(gens), 2 * gens.n, 1, f)
}

/// The matrix `M` with `psi(r) = (a, b, c, d) M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiMatrix {
    field: PrimeField,
    entries: [[u64; 4]; 4],
}

impl PsiMatrix {
    pub fn new(field: &PrimeField) -> Result<Self> {
        let xi = field.xi_or_err()?;
        let xi2 = field.mul(xi, xi);
        let entries = [[1, 1, 1, 1], [0, 1, xi2, xi], [0, 1, xi, xi2], [0, 1, 1, 1]];
        let m = Self { field: *field, entries };
        let expected = field.mul(field.mul(3, xi), field.sub(1, xi));
        let det = m.determinant();
        if det != expected || det == 0 {
            return Err(Error::Invalid(format!("determinant {det}, expected {expected}")));
        }
        Ok(m)
    }

    pub fn entries(&self) -> &[[u64; 4]; 4] {
        &self.entries
    }

    pub fn determinant(&self) -> u64 {
        let rows: Vec<Vec<u64>> = self.entries.iter().map(|r| r.to_vec()).collect();
        linalg::determinant(&rows, &self.field)
    }

    pub fn apply(&self, r: &RingElement) -> [u64; 4] {
        let f = &self.field;
        let v = r.coeffs();
        std::array::from_fn(|col| {
            (0..4).fold(0, |acc, k| f.add(acc, f.mul(f.reduce(v[k]), self.entries[k][col])))
        })
    }
}

/// `psi` applied coordinatewise; coordinate `j` fills positions `4j..4j+4`.
pub fn psi(v: &[RingElement], m: &PsiMatrix) -> Vec<u64> {
    v.iter().flat_map(|r| m.apply(r)).collect()
}

/// `psi(C)`, of length `4n` and dimension `log_p |C|`.
pub fn psi_image_code(c: &RLinearCode, m: &PsiMatrix) -> FpLinearCode {
    let rows: Vec<Vec<u64>> = c.fp_spanning_set().iter().map(|v| psi(v, m)).collect();
    FpLinearCode::from_generators(&rows, c.field(), 4 * c.n()).expect("rows have length 4n")
}
