use constaring::fpcode::{gen_poly_from_idempotent, macwilliams_transform, DEFAULT_CAP};
use constaring::poly::factor_xn_pm1;
use constaring::{FpLinearCode, FpPoly, MonomialMap, PrimeField, QRSystem};
use proptest::prelude::*;

fn small_code() -> impl Strategy<Value = (u64, usize, Vec<Vec<u64>>)> {
    (prop::sample::select(vec![3u64, 5, 7]), 1usize..7).prop_flat_map(|(p, n)| {
        let rows = prop::collection::vec(prop::collection::vec(0..p, n), 0..4);
        (Just(p), Just(n), rows)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn duals_are_involutions((p, n, rows) in small_code()) {
        let f = PrimeField::new(p).unwrap();
        let c = FpLinearCode::from_generators(&rows, &f, n).unwrap();
        let d = c.dual();
        prop_assert_eq!(c.dim() + d.dim(), n);
        prop_assert_eq!(d.dual(), c.clone());
        for a in c.basis() {
            for b in d.basis() {
                let dot: u64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
                prop_assert_eq!(dot % p, 0);
            }
        }
        for r in &rows {
            prop_assert!(c.contains(r));
        }
    }

    #[test]
    fn macwilliams_identity((p, n, rows) in small_code()) {
        let f = PrimeField::new(p).unwrap();
        let c = FpLinearCode::from_generators(&rows, &f, n).unwrap();
        let w = c.weight_enumerator(DEFAULT_CAP).unwrap();
        prop_assert_eq!(w.iter().sum::<u128>(), (p as u128).pow(c.dim() as u32));
        let wd = c.dual().weight_enumerator(DEFAULT_CAP).unwrap();
        prop_assert_eq!(macwilliams_transform(&w, p).unwrap(), wd);
    }

    #[test]
    fn monomial_maps_preserve_weights(
        (p, n, rows) in small_code(),
        seed in any::<u64>(),
    ) {
        let f = PrimeField::new(p).unwrap();
        let c = FpLinearCode::from_generators(&rows, &f, n).unwrap();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let scalars: Vec<u64> = (0..n).map(|i| 1 + (seed >> (i % 60)) % (p - 1)).collect();
        let m = MonomialMap::new(perm, scalars, &f).unwrap();
        let image = c.apply_monomial(&m).unwrap();
        prop_assert_eq!(image.dim(), c.dim());
        prop_assert_eq!(
            image.weight_enumerator(DEFAULT_CAP).unwrap(),
            c.weight_enumerator(DEFAULT_CAP).unwrap()
        );
    }
}

#[test]
fn cyclic_duals_use_reciprocal_check_polynomials() {
    for (p, n) in [(7u64, 8usize), (7, 5), (13, 6), (19, 9)] {
        let f = PrimeField::new(p).unwrap();
        let factors = factor_xn_pm1(n, 1, &f).unwrap();
        for mask in 0u32..(1 << factors.len()) {
            let g = factors
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .fold(FpPoly::one(p), |acc, (_, f)| acc.mul(f));
            let c = FpLinearCode::cyclic_from_gpoly(&g, n, 1, &f).unwrap();
            assert_eq!(c.dim(), n - g.degree().unwrap());
            assert_eq!(c.generator_polynomial(1), g);
            let h = FpPoly::x_n_minus(p, n, 1).divmod(&g).unwrap().0;
            let expected =
                FpLinearCode::cyclic_from_gpoly(&h.reciprocal().unwrap().monic(), n, 1, &f).unwrap();
            assert_eq!(c.dual(), expected);
        }
    }
}

#[test]
fn idempotent_duals_and_lattice() {
    for (p, q) in [(7u64, 3u64), (7, 19), (19, 5)] {
        let sys = QRSystem::new(p, q, None).unwrap();
        let f = *sys.field();
        let q = q as usize;
        let one = FpPoly::one(p);
        let es = [sys.e1(), sys.e2(), sys.et1(), sys.et2()];
        for e in es {
            let code = FpLinearCode::from_idempotent(e, q, &f).unwrap();
            let complement = one.sub(&e.inverse_variable(q));
            assert_eq!(FpLinearCode::from_idempotent(&complement, q, &f).unwrap(), code.dual());
            for row in code.basis() {
                let word = FpPoly::new(p, row.clone());
                assert_eq!(word.mul_mod_xn(e, q, 1), word);
            }
        }
        for a in es {
            for b in es {
                let ca = FpLinearCode::from_idempotent(a, q, &f).unwrap();
                let cb = FpLinearCode::from_idempotent(b, q, &f).unwrap();
                let prod = a.mul_mod_xn(b, q, 1);
                let union = a.add(b).sub(&prod);
                assert_eq!(ca.intersect(&cb).unwrap(), FpLinearCode::from_idempotent(&prod, q, &f).unwrap());
                assert_eq!(ca.sum(&cb).unwrap(), FpLinearCode::from_idempotent(&union, q, &f).unwrap());
            }
        }
    }
}

#[test]
fn length19_idempotent_codes() {
    let sys = QRSystem::new(7, 19, Some(4)).unwrap();
    let f = *sys.field();
    let c1 = FpLinearCode::from_idempotent(sys.e1(), 19, &f).unwrap();
    let c2 = FpLinearCode::from_idempotent(sys.e2(), 19, &f).unwrap();
    assert_eq!(c1.dim(), 10);
    let r = gen_poly_from_idempotent(sys.e1(), 19, &f).unwrap();
    assert_eq!(r.degree(), Some(9));
    assert!(r.divides(&FpPoly::x_n_minus(7, 19, 1)));
    assert_eq!(FpLinearCode::cyclic_from_gpoly(&r, 19, 1, &f).unwrap(), c1);
    let rep = FpLinearCode::from_idempotent(&sys.rep_idempotent(), 19, &f).unwrap();
    assert_eq!(c1.intersect(&c2).unwrap(), rep);
    assert_eq!(rep.dim(), 1);
    let t1 = FpLinearCode::from_idempotent(sys.et1(), 19, &f).unwrap();
    let t2 = FpLinearCode::from_idempotent(sys.et2(), 19, &f).unwrap();
    assert!(t1.intersect(&t2).unwrap().is_zero());
    let n = sys.nonresidue() as i64;
    assert_eq!(c1.multiplier(n, 19).unwrap(), c2);
    assert_eq!(c1.multiplier(1, 19).unwrap(), c1);
    let j1 = FpPoly::new(7, MonomialMap::multiplier(n, 19).unwrap().apply(&sys.j1().to_vec(19), &f));
    assert_eq!(&j1, sys.j2());
    let small = QRSystem::new(7, 3, None).unwrap();
    assert_eq!(
        gen_poly_from_idempotent(&small.rep_idempotent(), 3, &f).unwrap(),
        FpPoly::from_i64(7, &[1, 1, 1])
    );
}

#[test]
fn negacyclic_codes_scale_to_cyclic_codes() {
    // x^8 + 1 over F_97: delta^8 = -1 exists since 97 ≡ 1 mod 16.
    let f = PrimeField::new(97).unwrap();
    let delta = (2..97).find(|&d| f.pow(d, 8) == 96).unwrap();
    let dinv = f.inv(delta).unwrap();
    let factors = factor_xn_pm1(8, -1, &f).unwrap();
    assert_eq!(factors.len(), 8);
    assert!(!FpPoly::from_i64(97, &[1, 1]).divides(&FpPoly::x_n_minus(97, 8, -1)));
    let scaling = MonomialMap::scaling((0..8).map(|i| f.pow(dinv, i)).collect(), &f).unwrap();
    for g in factors.iter().chain([&factors[0].mul(&factors[3])]) {
        let nega = FpLinearCode::cyclic_from_gpoly(g, 8, -1, &f).unwrap();
        assert!(nega.is_negacyclic());
        let cyc = nega.apply_monomial(&scaling).unwrap();
        assert!(cyc.is_cyclic());
        assert_eq!(cyc.generator_polynomial(1), g.substitute_scale(dinv).unwrap().monic());
    }
}
