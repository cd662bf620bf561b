//! Quadratic residue codes over `R` and their extensions.
//!
//! For primes `p ≡ 1 (mod 3)` and odd `q` with `p` a square mod `q`, the
//! cyclic QR codes of length `q` over `F_p` have idempotents `e_1`, `e_2`
//! (the codes `<r(x)>`, `<n(x)>`) and `et_1`, `et_2` (their even-like
//! subcodes). A code over `R` picks, for each CRT component, either the
//! residue or the non-residue idempotent; a [`QRMask`] records which
//! components take the non-residue one. That gives 14 codes per family.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{gaussian_sum, gaussian_sum_square, is_prime, legendre, quadratic_residues, PrimeField};
use crate::fpcode::{FpLinearCode, MonomialMap};
use crate::gray::{psi_image_code, PsiMatrix};
use crate::poly::{FpPoly, RPoly};
use crate::rcode::RLinearCode;
use crate::ring::{Ring, RingElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    /// Generated by `e_1`/`e_2` in each component.
    Q,
    /// Generated by `et_1`/`et_2` in each component.
    S,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Self::Q => 'Q',
            Self::S => 'S',
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "Q" | "q" => Ok(Self::Q),
            "S" | "s" => Ok(Self::S),
            other => Err(Error::Parse(format!("family must be Q or S, got {other:?}"))),
        }
    }
}

/// Nonempty proper subset of the components `{1, 2, 3, 4}`; bit `i - 1` is
/// set when component `i` uses the non-residue idempotent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QRMask(u8);

impl QRMask {
    pub fn new(bits: u8) -> Result<Self> {
        if bits == 0 || bits >= 15 {
            return Err(Error::BadMask(format!("{bits:#06b}")));
        }
        Ok(Self(bits))
    }

    /// From 1-based component indices.
    pub fn from_components(components: &[usize]) -> Result<Self> {
        let mut bits = 0u8;
        for &i in components {
            if !(1..=4).contains(&i) {
                return Err(Error::BadMask(format!("{components:?}")));
            }
            bits |= 1 << (i - 1);
        }
        Self::new(bits).map_err(|_| Error::BadMask(format!("{components:?}")))
    }

    /// All 14 masks in increasing bit order.
    pub fn all() -> impl Iterator<Item = Self> {
        (1u8..15).map(Self)
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn contains(self, component: usize) -> bool {
        (1..=4).contains(&component) && self.0 & (1 << (component - 1)) != 0
    }

    pub fn complement(self) -> Self {
        Self(!self.0 & 0b1111)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn components(self) -> Vec<usize> {
        (1..=4).filter(|&i| self.contains(i)).collect()
    }
}

impl std::fmt::Display for QRMask {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.components().iter().map(usize::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl std::str::FromStr for QRMask {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let cleaned = s.trim().trim_start_matches('{').trim_end_matches('}');
        let comps = cleaned
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::BadMask(s.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Self::from_components(&comps)
    }
}

impl Serialize for QRMask {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.components())
    }
}

/// Masks of the two-element labels 9..=14, per family.
const Q_PAIR_MASKS: [u8; 6] = [0b1100, 0b1010, 0b0110, 0b0011, 0b0101, 0b1001];
const S_PAIR_MASKS: [u8; 6] = [0b1100, 0b0110, 0b1010, 0b0011, 0b1001, 0b0101];

/// Numeric label `1..=14` to mask. Labels 1..4 take `{i}`, 5..8 take the
/// complement of `{i - 4}`; 9..14 follow each family's own ordering.
pub fn label_to_mask(label: usize, family: Family) -> Result<QRMask> {
    let bits = match label {
        1..=4 => 1u8 << (label - 1),
        5..=8 => !(1u8 << (label - 5)) & 0b1111,
        9..=14 => match family {
            Family::Q => Q_PAIR_MASKS[label - 9],
            Family::S => S_PAIR_MASKS[label - 9],
        },
        _ => return Err(Error::BadLabel(format!("{}{label}", family.letter()))),
    };
    QRMask::new(bits)
}

pub fn mask_to_label(mask: QRMask, family: Family) -> usize {
    (1..=14).find(|&l| label_to_mask(l, family).ok() == Some(mask)).expect("every mask has a label")
}

/// Parses labels such as `Q1` or `s14`.
pub fn parse_label(s: &str) -> Result<(Family, QRMask)> {
    let s = s.trim();
    let bad = || Error::BadLabel(s.to_string());
    let mut chars = s.chars();
    let family: Family = chars.next().ok_or_else(bad)?.to_string().parse().map_err(|_| bad())?;
    let n: usize = chars.as_str().parse().map_err(|_| bad())?;
    Ok((family, label_to_mask(n, family).map_err(|_| bad())?))
}

pub fn label_string(mask: QRMask, family: Family) -> String {
    format!("{}{}", family.letter(), mask_to_label(mask, family))
}

/// Residue data and the four idempotents for a pair `(p, q)`.
#[derive(Debug, Clone)]
pub struct QRSystem {
    ring: Ring,
    q: usize,
    residues: Vec<u64>,
    nonresidues: Vec<u64>,
    j1: FpPoly,
    j2: FpPoly,
    h: FpPoly,
    theta: u64,
    qinv: u64,
    e1: FpPoly,
    e2: FpPoly,
    et1: FpPoly,
    et2: FpPoly,
}

impl QRSystem {
    /// `theta` overrides the default Gaussian sum; it must square to `-q`
    /// (`q ≡ 3 mod 4`) or `q` (`q ≡ 1 mod 4`).
    pub fn new(p: u64, q: u64, theta: Option<u64>) -> Result<Self> {
        let field = PrimeField::new(p)?;
        if q < 3 || !is_prime(q) {
            return Err(Error::NonPrime(q));
        }
        if q == p {
            return Err(Error::Invalid(format!("q = {q} must differ from p")));
        }
        let ring = Ring::new(field)?;
        if legendre(p as i64, q) != 1 {
            return Err(Error::NotResidue { p, q });
        }
        let expected = gaussian_sum_square(q, &field);
        let theta = match theta {
            Some(t) => {
                let t = field.reduce(t);
                if t == 0 || field.mul(t, t) != expected {
                    return Err(Error::BadTheta { theta: t, expected, p });
                }
                t
            }
            None => gaussian_sum(p, q, &field)?,
        };
        let (residues, nonresidues) = quadratic_residues(q);
        let indicator = |set: &[u64]| {
            let mut v = vec![0u64; q as usize];
            for &i in set {
                v[i as usize] = 1;
            }
            FpPoly::new(p, v)
        };
        let j1 = indicator(&residues);
        let j2 = indicator(&nonresidues);
        let h = FpPoly::new(p, vec![1; q as usize]);

        let f = &field;
        let half = f.inv(2)?;
        let qinv = f.inv(f.reduce(q))?;
        let tinv = f.inv(theta)?;
        let plus = f.mul(half, f.add(qinv, tinv));
        let minus = f.mul(half, f.sub(qinv, tinv));
        let combo = |c0: u64, c1: u64, c2: u64| FpPoly::constant(p, c0).add(&j1.scale(c1)).add(&j2.scale(c2));
        let e0 = f.mul(half, f.add(1, qinv));
        let et0 = f.mul(half, f.sub(1, qinv));
        let e1 = combo(e0, minus, plus);
        let e2 = combo(e0, plus, minus);
        let et1 = combo(et0, f.neg(plus), f.neg(minus));
        let et2 = combo(et0, f.neg(minus), f.neg(plus));

        let sys =
            Self { ring, q: q as usize, residues, nonresidues, j1, j2, h, theta, qinv, e1, e2, et1, et2 };
        for (name, e) in [("e1", &sys.e1), ("e2", &sys.e2), ("et1", &sys.et1), ("et2", &sys.et2)] {
            if !sys.is_idempotent(e) {
                return Err(Error::Invalid(format!("{name} is not idempotent")));
            }
        }
        Ok(sys)
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

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn residues(&self) -> &[u64] {
        &self.residues
    }

    pub fn nonresidues(&self) -> &[u64] {
        &self.nonresidues
    }

    pub fn j1(&self) -> &FpPoly {
        &self.j1
    }

    pub fn j2(&self) -> &FpPoly {
        &self.j2
    }

    pub fn h(&self) -> &FpPoly {
        &self.h
    }

    pub fn theta(&self) -> u64 {
        self.theta
    }

    pub fn qinv(&self) -> u64 {
        self.qinv
    }

    pub fn e1(&self) -> &FpPoly {
        &self.e1
    }

    pub fn e2(&self) -> &FpPoly {
        &self.e2
    }

    pub fn et1(&self) -> &FpPoly {
        &self.et1
    }

    pub fn et2(&self) -> &FpPoly {
        &self.et2
    }

    /// `q ≡ 3 (mod 4)`.
    pub fn is_q3(&self) -> bool {
        self.q % 4 == 3
    }

    /// Smallest quadratic non-residue mod `q`.
    pub fn nonresidue(&self) -> u64 {
        self.nonresidues[0]
    }

    /// `(1/q) h`, the idempotent of the repetition code.
    pub fn rep_idempotent(&self) -> FpPoly {
        self.h.scale(self.qinv)
    }

    fn mul_q(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        a.mul_mod_xn(b, self.q, 1)
    }

    fn is_idempotent(&self, e: &FpPoly) -> bool {
        self.mul_q(e, e) == e.reduce_mod_xn(self.q, 1)
    }

    /// The residue-side and non-residue-side idempotents of a family.
    pub fn family_idempotents(&self, family: Family) -> (&FpPoly, &FpPoly) {
        match family {
            Family::Q => (&self.e1, &self.e2),
            Family::S => (&self.et1, &self.et2),
        }
    }

    /// Per-component idempotents selected by `mask`.
    pub fn component_idempotents(&self, mask: QRMask, family: Family) -> [FpPoly; 4] {
        let (res, non) = self.family_idempotents(family);
        std::array::from_fn(|i| if mask.contains(i + 1) { non.clone() } else { res.clone() })
    }

    /// `sum_i eta_i E_i` over `R`.
    pub fn idempotent(&self, mask: QRMask, family: Family) -> RPoly {
        let e = self.component_idempotents(mask, family);
        RPoly::from_components(&self.ring, [&e[0], &e[1], &e[2], &e[3]])
    }

    /// The `R`-idempotent of the code squares to itself in `R[x]/(x^q - 1)`.
    pub fn idempotent_squares_to_itself(&self, mask: QRMask, family: Family) -> bool {
        let e = self.idempotent(mask, family);
        e.mul_mod_xn(&self.ring, &e, self.q, &RingElement::ONE) == e
    }

    /// The QR code over `R` for `mask` in `family`.
    pub fn code(&self, mask: QRMask, family: Family) -> Result<RLinearCode> {
        if !self.idempotent_squares_to_itself(mask, family) {
            return Err(Error::NotIdempotent(self.q));
        }
        let e = self.component_idempotents(mask, family);
        let mut comps = Vec::with_capacity(4);
        for ei in &e {
            comps.push(FpLinearCode::from_idempotent(ei, self.q, self.field())?);
        }
        RLinearCode::from_components(&self.ring, comps.try_into().expect("four components"))
    }

    fn uniform_code(&self, e: &FpPoly) -> Result<RLinearCode> {
        let c = FpLinearCode::from_idempotent(e, self.q, self.field())?;
        RLinearCode::from_components(&self.ring, std::array::from_fn(|_| c.clone()))
    }

    /// `<(1/q) h>` over `R`.
    pub fn repetition_code(&self) -> Result<RLinearCode> {
        self.uniform_code(&self.rep_idempotent())
    }

    /// `<1 - (1/q) h>` over `R`.
    pub fn even_code(&self) -> Result<RLinearCode> {
        self.uniform_code(&FpPoly::one(self.p()).sub(&self.rep_idempotent()))
    }

    /// Family and mask of the dual: `Q(M)^perp = S(M)` when `q ≡ 3 (mod 4)`
    /// and `S(M^c)` when `q ≡ 1 (mod 4)`; symmetrically for `S`.
    pub fn dual_of(&self, mask: QRMask, family: Family) -> (Family, QRMask) {
        let m = if self.is_q3() { mask } else { mask.complement() };
        let other = match family {
            Family::Q => Family::S,
            Family::S => Family::Q,
        };
        (other, m)
    }

    /// Border entry `r` of the extended code for `mask`. For `q ≡ 3 (mod 4)`
    /// it is the smaller root of `r^2 = -q`; for `q ≡ 1 (mod 4)` it is `1` or
    /// `-q`, chosen so that `r(M) r(M^c) = -q`: singletons and two-element
    /// masks avoiding component 1 get `1`.
    pub fn border(&self, mask: QRMask) -> Result<u64> {
        let f = self.field();
        let minus_q = f.neg(f.reduce(self.q as u64));
        if self.is_q3() {
            return f
                .sqrt(minus_q)
                .map(|(r, _)| r)
                .ok_or_else(|| Error::Invalid(format!("-{} is not a square mod {}", self.q, f.p())));
        }
        Ok(match mask.len() {
            1 => 1,
            2 if !mask.contains(1) => 1,
            _ => minus_q,
        })
    }

    /// Extended QR code of length `q + 1`: the `S(M)` rows shifted right by
    /// one, plus the border row `(r, 1, ..., 1)`. Position 0 is infinity.
    pub fn extended_code(&self, mask: QRMask) -> Result<RLinearCode> {
        let s = self.code(mask, Family::S)?;
        extend(&s, self.border(mask)?)
    }

    /// Monomial map taking the extended code of `mask` to that of its
    /// complement: the multiplier by the smallest non-residue on the finite
    /// positions, infinity fixed and scaled by `r(M^c) / r(M)`.
    pub fn extension_equivalence(&self, mask: QRMask) -> Result<MonomialMap> {
        let f = self.field();
        let q = self.q;
        let s = self.nonresidue() as usize;
        let mut perm = vec![0usize; q + 1];
        for i in 0..q {
            perm[i + 1] = 1 + (i * s) % q;
        }
        let mut scalars = vec![1u64; q + 1];
        scalars[0] = f.div(self.border(mask.complement())?, self.border(mask)?)?;
        MonomialMap::new(perm, scalars, f)
    }
}

/// Adjoins the infinity column and the border row `(r, 1, ..., 1)` to every
/// component of `c`.
pub fn extend(c: &RLinearCode, border: u64) -> Result<RLinearCode> {
    let n = c.n();
    let f = c.field();
    let mut comps = Vec::with_capacity(4);
    for comp in c.comps() {
        let mut rows: Vec<Vec<u64>> =
            comp.basis().iter().map(|row| std::iter::once(0).chain(row.iter().copied()).collect()).collect();
        rows.push(std::iter::once(f.reduce(border)).chain(std::iter::repeat(1).take(n)).collect());
        comps.push(FpLinearCode::from_generators(&rows, f, n + 1)?);
    }
    RLinearCode::from_components(c.ring(), comps.try_into().expect("four components"))
}

/// Lifts a monomial map on `R`-coordinates with `F_p` scalars to the
/// `4n` coordinates of the `psi` image.
pub fn lift_to_psi(m: &MonomialMap, field: &PrimeField) -> Result<MonomialMap> {
    let perm = m.perm().iter().flat_map(|&t| (0..4).map(move |k| 4 * t + k)).collect();
    let scalars = m.scalars().iter().flat_map(|&s| [s; 4]).collect();
    MonomialMap::new(perm, scalars, field)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    fn new(name: &str, passed: bool) -> Self {
        Self { name: name.to_string(), passed, detail: None }
    }

    fn with_detail(name: &str, passed: bool, detail: String) -> Self {
        Self { name: name.to_string(), passed, detail: Some(detail) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaskReport {
    pub mask: QRMask,
    pub q_label: String,
    pub s_label: String,
    pub checks: Vec<Check>,
}

impl MaskReport {
    fn new(mask: QRMask) -> Self {
        Self {
            mask,
            q_label: label_string(mask, Family::Q),
            s_label: label_string(mask, Family::S),
            checks: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub p: u64,
    pub q: usize,
    pub theta: u64,
    pub passed: bool,
    pub checks: Vec<Check>,
    pub masks: Vec<MaskReport>,
    pub notes: Vec<String>,
}

impl Report {
    fn new(sys: &QRSystem, suite: &str) -> Self {
        Self {
            suite: suite.to_string(),
            p: sys.p(),
            q: sys.q(),
            theta: sys.theta(),
            passed: false,
            checks: Vec::new(),
            masks: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn finish(mut self) -> Self {
        self.passed = self.checks.iter().all(|c| c.passed) && self.masks.iter().all(MaskReport::passed);
        self
    }

    /// Name of the first failing check, if any.
    pub fn first_failure(&self) -> Option<String> {
        self.checks.iter().find(|c| !c.passed).map(|c| c.name.clone()).or_else(|| {
            self.masks
                .iter()
                .find_map(|m| m.checks.iter().find(|c| !c.passed).map(|c| format!("{}: {}", m.mask, c.name)))
        })
    }
}

/// Idempotency of `e_1, e_2, et_1, et_2` and the six identities linking
/// them with `(1/q) h`, all modulo `x^q - 1`.
pub fn verify_identities(sys: &QRSystem) -> Report {
    let mut r = Report::new(sys, "identities");
    let p = sys.p();
    let one = FpPoly::one(p);
    let rep = sys.rep_idempotent();
    let red = |f: FpPoly| f.reduce_mod_xn(sys.q, 1);
    for (name, e) in [("e1", &sys.e1), ("e2", &sys.e2), ("et1", &sys.et1), ("et2", &sys.et2)] {
        r.checks.push(Check::new(&format!("{name}^2 = {name}"), sys.is_idempotent(e)));
    }
    let identities = [
        ("e1 + e2 = 1 + h/q", red(sys.e1.add(&sys.e2)), red(one.add(&rep))),
        ("et1 + et2 = 1 - h/q", red(sys.et1.add(&sys.et2)), red(one.sub(&rep))),
        ("e1 - et1 = h/q", red(sys.e1.sub(&sys.et1)), red(rep.clone())),
        ("e2 - et2 = h/q", red(sys.e2.sub(&sys.et2)), red(rep.clone())),
        ("e1 e2 = h/q", sys.mul_q(&sys.e1, &sys.e2), red(rep.clone())),
        ("et1 et2 = 0", sys.mul_q(&sys.et1, &sys.et2), FpPoly::zero(p)),
    ];
    for (name, lhs, rhs) in identities {
        let ok = lhs == rhs;
        r.checks.push(if ok {
            Check::new(name, true)
        } else {
            Check::with_detail(name, false, format!("{lhs} != {rhs}"))
        });
    }
    r.finish()
}

/// Multiplier action, intersections, sums and sizes of the QR codes for
/// every mask.
pub fn verify_lattice(sys: &QRSystem) -> Result<Report> {
    let mut r = Report::new(sys, "lattice");
    let q = sys.q;
    let n = sys.nonresidue() as i64;
    let mu = MonomialMap::multiplier(n, q)?;
    let rep = sys.repetition_code()?;
    let even = sys.even_code()?;
    let full = RLinearCode::full(sys.ring(), q);
    let zero = RLinearCode::zero(sys.ring(), q);
    r.notes.push(format!("multiplier uses the non-residue {n}"));
    for mask in QRMask::all() {
        let mut m = MaskReport::new(mask);
        let qm = sys.code(mask, Family::Q)?;
        let qc = sys.code(mask.complement(), Family::Q)?;
        let sm = sys.code(mask, Family::S)?;
        let sc = sys.code(mask.complement(), Family::S)?;
        m.checks.push(Check::new("mu(Q(M)) = Q(M^c)", qm.apply_monomial(&mu)? == qc));
        m.checks.push(Check::new("mu(S(M)) = S(M^c)", sm.apply_monomial(&mu)? == sc));
        m.checks.push(Check::new("Q(M) ∩ Q(M^c) = <h/q>", qm.intersect(&qc)? == rep));
        m.checks.push(Check::new("Q(M) + Q(M^c) = R^q", qm.sum(&qc)? == full));
        m.checks.push(Check::new("S(M) ∩ S(M^c) = 0", sm.intersect(&sc)? == zero));
        m.checks.push(Check::new("S(M) + S(M^c) = <1 - h/q>", sm.sum(&sc)? == even));
        m.checks.push(Check::new("S(M) ∩ <h/q> = 0", sm.intersect(&rep)? == zero));
        m.checks.push(Check::new("S(M) + <h/q> = Q(M)", sm.sum(&rep)? == qm));
        m.checks.push(Check::with_detail(
            "|Q(M)| = p^(2(q+1))",
            qm.log_size() == 2 * (q + 1),
            format!("log_p |Q(M)| = {}", qm.log_size()),
        ));
        m.checks.push(Check::with_detail(
            "|S(M)| = p^(2(q-1))",
            sm.log_size() == 2 * (q - 1),
            format!("log_p |S(M)| = {}", sm.log_size()),
        ));
        r.masks.push(m);
    }
    Ok(r.finish())
}

/// Dual pairs among the QR codes: `Q(M)^perp = S(M)` with `S(M)`
/// self-orthogonal when `q ≡ 3 (mod 4)`, `Q(M)^perp = S(M^c)` when
/// `q ≡ 1 (mod 4)`.
pub fn verify_duality(sys: &QRSystem) -> Result<Report> {
    let mut r = Report::new(sys, "duality");
    for mask in QRMask::all() {
        let mut m = MaskReport::new(mask);
        let qm = sys.code(mask, Family::Q)?;
        let (fam, dm) = sys.dual_of(mask, Family::Q);
        let expected = sys.code(dm, fam)?;
        let name = if sys.is_q3() { "Q(M)^perp = S(M)" } else { "Q(M)^perp = S(M^c)" };
        m.checks.push(Check::with_detail(
            name,
            qm.dual() == expected,
            format!("dual is {}", label_string(dm, fam)),
        ));
        let sm = sys.code(mask, Family::S)?;
        let sdual = sys.dual_of(mask, Family::S);
        m.checks.push(Check::new("S-family dual rule", sm.dual() == sys.code(sdual.1, sdual.0)?));
        if sys.is_q3() {
            m.checks.push(Check::new("S(M) ⊆ S(M)^perp", sm.is_self_orthogonal()));
        }
        r.masks.push(m);
    }
    if !sys.is_q3() {
        // Numeric labels pair Q_j with S_{j+3} for j = 9..11; the S-family
        // orders its two-element labels differently, so report where the
        // mask-level duality lands.
        for j in 9..=11 {
            let mask = label_to_mask(j, Family::Q)?;
            let (fam, dm) = sys.dual_of(mask, Family::Q);
            let got = mask_to_label(dm, fam);
            if got != j + 3 {
                r.notes.push(format!("Q{j}^perp = S{got}, not S{}", j + 3));
            }
        }
    }
    Ok(r.finish())
}

/// Extended QR codes. For `q ≡ 3 (mod 4)` every extension is self-dual and
/// so is its `psi` image; for `q ≡ 1 (mod 4)` the extensions of `M` and
/// `M^c` are duals of each other and monomially equivalent, so the `psi`
/// images are formally self-dual.
pub fn verify_extended(sys: &QRSystem) -> Result<Report> {
    let mut r = Report::new(sys, "extended");
    let q = sys.q;
    let psi = PsiMatrix::new(sys.field())?;
    for mask in QRMask::all() {
        let mut m = MaskReport::new(mask);
        let ext = sys.extended_code(mask)?;
        let border = sys.border(mask)?;
        m.checks.push(Check::with_detail(
            "|ext| = p^(2(q+1))",
            ext.log_size() == 2 * (q + 1),
            format!("border r = {border}"),
        ));
        let image = psi_image_code(&ext, &psi);
        if sys.is_q3() {
            let f = sys.field();
            m.checks.push(Check::new("r^2 = -q", f.mul(border, border) == f.neg(f.reduce(q as u64))));
            m.checks.push(Check::new("extension self-dual over R", ext.is_self_dual()));
            m.checks.push(Check::with_detail(
                "psi image self-dual",
                image.is_self_dual(),
                format!("[{}, {}]", image.n(), image.dim()),
            ));
        } else {
            let comp = sys.extended_code(mask.complement())?;
            m.checks.push(Check::new("ext(M)^perp = ext(M^c)", ext.dual() == comp));
            let eq = sys.extension_equivalence(mask)?;
            m.checks.push(Check::new("ext(M) ~ ext(M^c) by monomial map", ext.apply_monomial(&eq)? == comp));
            let lifted = lift_to_psi(&eq, sys.field())?;
            m.checks.push(Check::new(
                "psi images equivalent to their duals",
                image.apply_monomial(&lifted)? == image.dual(),
            ));
        }
        r.masks.push(m);
    }
    Ok(r.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels() {
        assert_eq!(label_to_mask(5, Family::Q).unwrap(), QRMask::from_components(&[2, 3, 4]).unwrap());
        assert_eq!(label_to_mask(12, Family::Q).unwrap(), QRMask::from_components(&[1, 2]).unwrap());
        assert_eq!(label_to_mask(10, Family::S).unwrap(), QRMask::from_components(&[2, 3]).unwrap());
        assert_eq!(label_to_mask(14, Family::Q).unwrap(), QRMask::from_components(&[1, 4]).unwrap());
        assert!(label_to_mask(0, Family::Q).is_err());
        assert!(label_to_mask(15, Family::S).is_err());
        for fam in [Family::Q, Family::S] {
            let mut seen: Vec<QRMask> = (1..=14).map(|l| label_to_mask(l, fam).unwrap()).collect();
            seen.sort();
            seen.dedup();
            assert_eq!(seen.len(), 14);
            for mask in QRMask::all() {
                assert_eq!(label_to_mask(mask_to_label(mask, fam), fam).unwrap(), mask);
            }
        }
        for i in 1..=4 {
            let m = label_to_mask(i, Family::Q).unwrap();
            assert_eq!(m.complement(), label_to_mask(i + 4, Family::Q).unwrap());
        }
        assert_eq!(parse_label("S10").unwrap(), (Family::S, QRMask::from_components(&[2, 3]).unwrap()));
        assert!(parse_label("X1").is_err());
        assert!(parse_label("Q").is_err());
    }

    #[test]
    fn masks() {
        assert_eq!(QRMask::all().count(), 14);
        assert!(QRMask::new(0).is_err());
        assert!(QRMask::new(15).is_err());
        assert!(QRMask::from_components(&[1, 2, 3, 4]).is_err());
        assert!(QRMask::from_components(&[5]).is_err());
        let m: QRMask = "1,3".parse().unwrap();
        assert_eq!(m.to_string(), "{1,3}");
        assert_eq!(m.complement().components(), vec![2, 4]);
        assert_eq!(serde_json::to_string(&m).unwrap(), "[1,3]");
    }

    #[test]
    fn idempotents_at_length_19() {
        let sys = QRSystem::new(7, 19, Some(4)).unwrap();
        let combo = |a: i64, b: i64, c: i64| {
            FpPoly::from_i64(7, &[a]).add(&sys.j1().scale(b as u64)).add(&sys.j2().scale(c as u64))
        };
        assert_eq!(sys.e1(), &combo(2, 4, 6));
        assert_eq!(sys.e2(), &combo(2, 6, 4));
        assert_eq!(sys.et1(), &combo(6, 1, 3));
        assert_eq!(sys.residues(), &[1, 4, 5, 6, 7, 9, 11, 16, 17]);
        assert_eq!(sys.border(QRMask::new(1).unwrap()).unwrap(), 3);
    }

    #[test]
    fn theta_choices() {
        let other = QRSystem::new(7, 19, Some(3)).unwrap();
        let pinned = QRSystem::new(7, 19, Some(4)).unwrap();
        assert_eq!(other.e1(), pinned.e2());
        assert_eq!(other.et1(), pinned.et2());
        assert!(matches!(QRSystem::new(7, 19, Some(2)), Err(Error::BadTheta { .. })));
        assert_eq!(QRSystem::new(7, 5, None).unwrap_err(), Error::NotResidue { p: 7, q: 5 });
        assert_eq!(QRSystem::new(5, 19, None).unwrap_err(), Error::NoCubeRoot(5));
        assert!(QRSystem::new(7, 9, None).is_err());
    }

    #[test]
    fn identities_hold() {
        for (p, q) in [(7, 3), (13, 3), (19, 5), (7, 19)] {
            let sys = QRSystem::new(p, q, None).unwrap();
            let r = verify_identities(&sys);
            assert!(r.passed, "{p},{q}: {:?}", r.first_failure());
        }
    }

    #[test]
    fn borders_multiply_to_minus_q() {
        let sys = QRSystem::new(19, 5, None).unwrap();
        let f = sys.field();
        for m in QRMask::all() {
            let prod = f.mul(sys.border(m).unwrap(), sys.border(m.complement()).unwrap());
            assert_eq!(prod, f.from_i64(-5));
        }
        assert_eq!(sys.border(QRMask::from_components(&[2]).unwrap()).unwrap(), 1);
        assert_eq!(sys.border(QRMask::from_components(&[2, 3, 4]).unwrap()).unwrap(), 14);
    }

    #[test]
    fn small_system_suites() {
        let sys = QRSystem::new(7, 3, None).unwrap();
        for report in
            [verify_lattice(&sys).unwrap(), verify_duality(&sys).unwrap(), verify_extended(&sys).unwrap()]
        {
            assert!(report.passed, "{}: {:?}", report.suite, report.first_failure());
        }
    }

    #[test]
    fn extend_adds_border_row() {
        let sys = QRSystem::new(7, 3, None).unwrap();
        let m = QRMask::new(1).unwrap();
        let ext = sys.extended_code(m).unwrap();
        assert_eq!(ext.n(), 4);
        let border = sys.border(m).unwrap();
        assert_eq!(border, 2);
        let row: Vec<RingElement> = std::iter::once(sys.ring().scalar(border))
            .chain(std::iter::repeat(RingElement::ONE).take(3))
            .collect();
        assert!(ext.contains(&row));
    }
}
