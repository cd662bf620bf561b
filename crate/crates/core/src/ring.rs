//! The ring `R = F_p[u]/(u^4 - u)` for `p ≡ 1 (mod 3)`.
//!
//! `u^4 - u = u (u - 1)(u - xi^2)(u - xi)` splits over `F_p`, so `R` is
//! isomorphic to `F_p^4`. The primitive idempotents
//!
//! ```text
//! eta1 = 1 - u^3
//! eta2 = 3^-1 (u + u^2 + u^3)
//! eta3 = 3^-1 (xi u + xi^2 u^2 + u^3)
//! eta4 = 3^-1 (xi^2 u + xi u^2 + u^3)
//! ```
//!
//! pick out the evaluations at `u = 0, 1, xi^2, xi` respectively, which is
//! what [`Ring::decompose`] computes.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::PrimeField;

/// `a + b u + c u^2 + d u^3` with coefficients in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct RingElement {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
}

impl RingElement {
    pub const ZERO: Self = Self { a: 0, b: 0, c: 0, d: 0 };
    pub const ONE: Self = Self { a: 1, b: 0, c: 0, d: 0 };

    pub const fn new(a: u64, b: u64, c: u64, d: u64) -> Self {
        Self { a, b, c, d }
    }

    pub fn coeffs(&self) -> [u64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn from_coeffs(c: [u64; 4]) -> Self {
        Self::new(c[0], c[1], c[2], c[3])
    }

    pub fn is_zero(&self) -> bool {
        *self == Self::ZERO
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}*u+{}*u^2+{}*u^3", self.a, self.b, self.c, self.d)
    }
}

/// The four primitive idempotents in basis form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdempotentSet {
    pub eta1: RingElement,
    pub eta2: RingElement,
    pub eta3: RingElement,
    pub eta4: RingElement,
}

impl IdempotentSet {
    pub fn as_array(&self) -> [RingElement; 4] {
        [self.eta1, self.eta2, self.eta3, self.eta4]
    }
}

/// Arithmetic context for `R` over a fixed prime field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ring {
    field: PrimeField,
    idempotents: IdempotentSet,
    /// Row `i` holds the powers `1, t, t^2, t^3` of the evaluation point of
    /// component `i`, so component `i` of `r` is `row_i . (a, b, c, d)`.
    eval_points: [u64; 4],
    /// Column `i` is `eta_i` in basis form.
    compose: [[u64; 4]; 4],
}

impl Ring {
    pub fn new(field: PrimeField) -> Result<Self> {
        let xi = field.xi_or_err()?;
        let idempotents = idempotents(&field)?;
        let mut compose = [[0u64; 4]; 4];
        for (i, eta) in idempotents.as_array().iter().enumerate() {
            for (k, c) in eta.coeffs().into_iter().enumerate() {
                compose[k][i] = c;
            }
        }
        Ok(Self { field, idempotents, eval_points: [0, 1, field.mul(xi, xi), xi], compose })
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn p(&self) -> u64 {
        self.field.p()
    }

    pub fn idempotents(&self) -> &IdempotentSet {
        &self.idempotents
    }

    pub fn eta(&self, i: usize) -> RingElement {
        self.idempotents.as_array()[i]
    }

    /// The unit `1 - 2u^3`.
    pub fn lambda(&self) -> RingElement {
        RingElement::new(1, 0, 0, self.field.from_i64(-2))
    }

    pub fn scalar(&self, c: u64) -> RingElement {
        RingElement::new(self.field.reduce(c), 0, 0, 0)
    }

    pub fn element(&self, a: i64, b: i64, c: i64, d: i64) -> RingElement {
        let f = &self.field;
        RingElement::new(f.from_i64(a), f.from_i64(b), f.from_i64(c), f.from_i64(d))
    }

    pub fn add(&self, x: &RingElement, y: &RingElement) -> RingElement {
        let f = &self.field;
        RingElement::new(f.add(x.a, y.a), f.add(x.b, y.b), f.add(x.c, y.c), f.add(x.d, y.d))
    }

    pub fn sub(&self, x: &RingElement, y: &RingElement) -> RingElement {
        let f = &self.field;
        RingElement::new(f.sub(x.a, y.a), f.sub(x.b, y.b), f.sub(x.c, y.c), f.sub(x.d, y.d))
    }

    pub fn neg(&self, x: &RingElement) -> RingElement {
        self.sub(&RingElement::ZERO, x)
    }

    pub fn scale(&self, s: u64, x: &RingElement) -> RingElement {
        let f = &self.field;
        RingElement::new(f.mul(s, x.a), f.mul(s, x.b), f.mul(s, x.c), f.mul(s, x.d))
    }

    /// Product reduced with `u^4 = u`, `u^5 = u^2`, `u^6 = u^3`.
    pub fn mul(&self, x: &RingElement, y: &RingElement) -> RingElement {
        let p = self.field.p();
        let xs = x.coeffs();
        let ys = y.coeffs();
        let mut acc = [0u64; 4];
        for (i, &xi) in xs.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in ys.iter().enumerate() {
                let e = i + j;
                let slot = if e >= 4 { e - 3 } else { e };
                acc[slot] = (acc[slot] + xi * yj) % p;
            }
        }
        RingElement::from_coeffs(acc)
    }

    pub fn pow(&self, x: &RingElement, mut e: u64) -> RingElement {
        let mut acc = RingElement::ONE;
        let mut base = *x;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Coordinates `(x1, x2, x3, x4)` with `r = sum eta_i x_i`.
    pub fn decompose(&self, r: &RingElement) -> [u64; 4] {
        let f = &self.field;
        self.eval_points.map(|t| {
            let t2 = f.mul(t, t);
            let t3 = f.mul(t2, t);
            let v = r.a + f.mul(r.b, t) + f.mul(r.c, t2) + f.mul(r.d, t3);
            v % f.p()
        })
    }

    /// Inverse of [`Ring::decompose`].
    pub fn compose(&self, x: [u64; 4]) -> RingElement {
        let f = &self.field;
        let mut out = [0u64; 4];
        for (k, row) in self.compose.iter().enumerate() {
            let mut s = 0u64;
            for (i, &c) in row.iter().enumerate() {
                s = f.add(s, f.mul(c, f.reduce(x[i])));
            }
            out[k] = s;
        }
        RingElement::from_coeffs(out)
    }

    /// `eta_i * c` for a field scalar `c`.
    pub fn embed_component(&self, i: usize, c: u64) -> RingElement {
        let mut x = [0u64; 4];
        x[i] = c;
        self.compose(x)
    }

    pub fn is_unit(&self, r: &RingElement) -> bool {
        self.decompose(r).iter().all(|&x| x != 0)
    }

    pub fn inverse(&self, r: &RingElement) -> Result<RingElement> {
        let comps = self.decompose(r);
        let mut inv = [0u64; 4];
        for (slot, &x) in inv.iter_mut().zip(&comps) {
            *slot = self.field.inv(x)?;
        }
        Ok(self.compose(inv))
    }

    /// Parses `a+b*u+c*u^2+d*u^3`. Terms may appear in any order, be
    /// omitted, carry a leading sign, or repeat (repeats add up).
    pub fn parse(&self, s: &str) -> Result<RingElement> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty ring element".into()));
        }
        let mut acc = [0i64; 4];
        let mut term = String::new();
        let flush = |term: &str, acc: &mut [i64; 4]| -> Result<()> {
            if term.is_empty() {
                return Ok(());
            }
            let (sign, body) = match term.as_bytes()[0] {
                b'-' => (-1i64, &term[1..]),
                b'+' => (1, &term[1..]),
                _ => (1, term),
            };
            let (coef, power) = match body.split_once('u') {
                None => (body, 0usize),
                Some((c, rest)) => {
                    let c = c.strip_suffix('*').unwrap_or(c);
                    let power = match rest {
                        "" => 1,
                        r => r
                            .strip_prefix('^')
                            .and_then(|e| e.parse::<usize>().ok())
                            .filter(|&e| (1..=3).contains(&e))
                            .ok_or_else(|| Error::Parse(format!("bad power in {term:?}")))?,
                    };
                    (c, power)
                }
            };
            let coef: i64 = if coef.is_empty() {
                1
            } else {
                coef.parse().map_err(|_| Error::Parse(format!("bad coefficient in {term:?}")))?
            };
            acc[power] += sign * coef;
            Ok(())
        };
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && !term.is_empty() && !term.ends_with('^') {
                flush(&term, &mut acc)?;
                term.clear();
            }
            term.push(ch);
        }
        flush(&term, &mut acc)?;
        Ok(self.element(acc[0], acc[1], acc[2], acc[3]))
    }
}

/// The idempotents `eta1..eta4` for `F_p`; requires `p ≡ 1 (mod 3)`.
pub fn idempotents(field: &PrimeField) -> Result<IdempotentSet> {
    let xi = field.xi_or_err()?;
    let f = field;
    let third = f.inv(3)?;
    let xi2 = f.mul(xi, xi);
    let mk = |b: u64, c: u64| RingElement::new(0, f.mul(third, b), f.mul(third, c), third);
    Ok(IdempotentSet {
        eta1: RingElement::new(1, 0, 0, f.neg(1)),
        eta2: mk(1, 1),
        eta3: mk(xi, xi2),
        eta4: mk(xi2, xi),
    })
}
