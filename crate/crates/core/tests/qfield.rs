use proptest::prelude::*;
use satake::qfield::*;
use satake::Error;

fn t(e: i32) -> CoefRing {
    CoefRing::t_pow(e)
}

fn poly(terms: &[(i32, CoefRing)]) -> ZPoly {
    ZPoly::from_terms(terms.iter().cloned())
}

fn one_minus(c: CoefRing, k: i32) -> ZPoly {
    poly(&[(0, CoefRing::one()), (k, -c)])
}

fn ratio(n: ZPoly, d: ZPoly) -> RatFun {
    RatFun::new(n, d).unwrap()
}

#[test]
fn zeta_examples() {
    assert_eq!(zeta_local(AffineExponent::new(1, 0)).unwrap(), ratio(ZPoly::one(), one_minus(t(0), 1)));
    assert_eq!(zeta_local(AffineExponent::new(2, 2)).unwrap(), ratio(ZPoly::one(), one_minus(t(-2), 2)));
    assert_eq!(zeta_local(AffineExponent::new(1, 3)).unwrap(), ratio(ZPoly::one(), one_minus(t(-3), 1)));
}

#[test]
fn zeta_constant_argument() {
    let z = zeta_local(AffineExponent::constant(2)).unwrap();
    let expected = ratio(ZPoly::one(), ZPoly::constant(&CoefRing::one() - &t(-2)));
    assert_eq!(z, expected);
    assert!(z.as_constant().is_none(), "1/(1 - q^-1) is not a Laurent polynomial in t");
}

#[test]
fn zeta_pole_at_zero() {
    assert!(matches!(zeta_local(AffineExponent::constant(0)), Err(Error::Pole(_))));
    assert!(matches!(gamma_local(AffineExponent::constant(2)), Err(Error::Pole(_))));
}

#[test]
fn gamma_at_s_hand_expansion() {
    // zeta(1-s) = 1/(1 - t^-2 z^-1), so gamma(s) = (1-z)/(1 - t^-2 z^-1) = -t^2 z (1-z)/(1 - t^2 z).
    let g = gamma_local(AffineExponent::new(1, 0)).unwrap();
    let lhs = g.mul(&RatFun::from_poly(one_minus(t(2), 1)));
    let rhs = poly(&[(1, -t(2)), (2, t(2))]);
    assert_eq!(lhs, RatFun::from_poly(rhs));
}

#[test]
fn gamma_at_2s_plus_1_hand_expansion() {
    // zeta(-2s)/zeta(2s+1) = (1 - t^-2 z^2)/(1 - z^-2) = -z^2 (1 - t^-2 z^2)/(1 - z^2).
    let g = gamma_local(AffineExponent::new(2, 2)).unwrap();
    let num = one_minus(t(-2), 2).mul(&ZPoly::monomial(CoefRing::from_int(-1), 2));
    assert_eq!(g, ratio(num, one_minus(t(0), 2)));
}

#[test]
fn gamma_functional_equation_grid() {
    for a in -4..=4 {
        if a == 0 {
            continue;
        }
        for b2 in -8..=8 {
            let e = AffineExponent::new(a, b2);
            let p = gamma_local(e).unwrap().mul(&gamma_local(e.one_minus()).unwrap());
            assert!(p.is_one(), "gamma({e}) gamma(1-({e})) = {p}");
        }
    }
}

#[test]
fn gamma_with_quadratic_character() {
    let chi = UnramifiedChar::quadratic();
    let e = AffineExponent::new(1, 1);
    let p = gamma_local_char(e, chi).unwrap().mul(&gamma_local_char(e.one_minus(), chi.inverse()).unwrap());
    assert!(p.is_one());
    // L(s, eta) = 1/(1 + q^-s)
    assert_eq!(l_factor(AffineExponent::new(1, 0), chi).unwrap(), ratio(ZPoly::one(), poly(&[(0, t(0)), (1, t(0))])));
}

#[test]
fn negate_s_twice_is_identity() {
    let f = gamma_local(AffineExponent::new(2, -3)).unwrap().mul(&zeta_local(AffineExponent::new(1, 5)).unwrap());
    assert_eq!(f.negate_s().negate_s(), f);
    assert_ne!(f.negate_s(), f);
}

#[test]
fn shift_matches_exponent_bookkeeping() {
    let e = AffineExponent::new(2, -1);
    for c2 in -3..=3 {
        assert_eq!(zeta_local(e).unwrap().shift_s(c2), zeta_local(e.shift_s(c2)).unwrap());
        assert_eq!(gamma_local(e).unwrap().shift_s(c2), gamma_local(e.shift_s(c2)).unwrap());
    }
}

#[test]
fn symplectic_dh_negated() {
    let dh = zeta_product(&[AffineExponent::new(1, 3), AffineExponent::new(2, 2)]).unwrap();
    let expected = zeta_product(&[AffineExponent::new(-1, 3), AffineExponent::new(-2, 2)]).unwrap();
    assert_eq!(dh.negate_s(), expected);
}

#[test]
fn evaluation_and_poles() {
    let f = zeta_local(AffineExponent::new(1, 0)).unwrap();
    assert!(matches!(f.evaluate_s(0), Err(Error::Pole(_))));
    // zeta(s) at s = 1: 1/(1 - q^-1)
    assert_eq!(f.evaluate_s(2).unwrap(), zeta_local(AffineExponent::constant(2)).unwrap());
}

#[test]
fn division_by_zero() {
    assert_eq!(RatFun::zero().inv(), Err(Error::DivisionByZero));
    assert_eq!(RatFun::new(ZPoly::one(), ZPoly::zero()), Err(Error::DivisionByZero));
}

#[test]
fn canonical_form_normalizes_units() {
    let n = poly(&[(3, t(5)), (4, CoefRing::from_int(7))]);
    let d = poly(&[(2, CoefRing::monomial(rat(-3, 2), 4)), (5, t(1))]);
    let f = ratio(n.clone(), d.clone());
    let g = ratio(n.scale(&CoefRing::monomial(rat(2, 9), -3)).shift(4), d.scale(&CoefRing::monomial(rat(2, 9), -3)).shift(4));
    assert_eq!(f, g);
    assert!(f.den().coeff(0).is_one());
    assert_eq!(f.den().min_deg(), Some(0));
}

#[test]
fn series_of_geometric_factor() {
    let f = zeta_local(AffineExponent::new(2, 1)).unwrap();
    let s = f.series(7).unwrap();
    for d in 0..=7 {
        let expected = if d % 2 == 0 { t(-(d / 2)) } else { CoefRing::zero() };
        assert_eq!(s.coeff(d), expected, "degree {d}");
    }
    assert_eq!(zeta_local(AffineExponent::constant(2)).unwrap().series(3), Err(Error::NonUnitConstant));
}

#[test]
fn json_round_trip_is_bit_exact() {
    let f = gamma_local(AffineExponent::new(2, -3))
        .unwrap()
        .mul(&RatFun::constant(CoefRing::monomial(rat(-5, 7), 3)));
    let s = f.to_json();
    let g = RatFun::from_json(&s).unwrap();
    assert_eq!(f, g);
    assert_eq!(g.to_json(), s);
    assert!(s.starts_with("{\"num\":[["));
    assert!(RatFun::from_json("{\"num\":[[0,[[0,\"1/0\"]]]],\"den\":[[0,[[0,\"1\"]]]]}").is_err());
}

#[test]
fn json_accepts_integers_and_canonicalizes() {
    let f = RatFun::from_json("{\"num\":[[1,[[0,\"2\"]]]],\"den\":[[1,[[0,\"4\"]]]]}").unwrap();
    assert_eq!(f, RatFun::constant(CoefRing::from_rational(rat(1, 2))));
}

// Shell integrals of the additive character.

#[test]
fn shell_values() {
    assert_eq!(shell_integral(0), &CoefRing::one() - &t(-2));
    assert_eq!(shell_integral(3), &t(-6) - &t(-8));
    assert_eq!(shell_integral(-1), CoefRing::from_int(-1));
    for n in -6..=-2 {
        assert!(shell_integral(n).is_zero());
    }
}

/// Sum of `exp(2 pi i u / p^m)` over units `u` mod `p^m`, computed numerically.
fn character_sum_over_units(p: u64, m: u32) -> i64 {
    let modulus = p.pow(m);
    let mut re = 0.0f64;
    for u in 0..modulus {
        if u % p != 0 {
            re += (2.0 * std::f64::consts::PI * u as f64 / modulus as f64).cos();
        }
    }
    re.round() as i64
}

#[test]
fn negative_shells_match_character_sums() {
    // The shell {v(x) = -m} is a union of unit-volume cosets u p^-m + O with u a unit mod p^m.
    for p in [2u64, 3, 5, 7] {
        for m in 1..=3u32 {
            let expected = CoefRing::from_int(character_sum_over_units(p, m));
            assert_eq!(shell_integral(-(m as i32)), expected, "p = {p}, m = {m}");
        }
    }
}

#[test]
fn tate_series_collapses_to_gamma() {
    for s0_2 in -2..=2 {
        let series = tate_shell_series(s0_2, 12);
        let closed = series.collapse();
        let expected = gamma_local(AffineExponent::new(-1, -s0_2)).unwrap();
        assert_eq!(closed, expected, "2 s0 = {s0_2}");
        let expansion = closed.series(12).unwrap();
        assert_eq!(expansion.first_difference(&series.as_series()), None, "2 s0 = {s0_2}");
    }
}

#[test]
fn tate_series_orientation() {
    // With z^n weighting the shell |x| = q^-n, the sum is zeta(1+s)/zeta(-s), not zeta(1-s)/zeta(s).
    let closed = tate_shell_series(0, 4).collapse();
    let at_minus_s = zeta_local(AffineExponent::new(1, 2)).unwrap().div(&zeta_local(AffineExponent::new(-1, 0)).unwrap()).unwrap();
    assert_eq!(closed, at_minus_s);
    assert_ne!(closed, gamma_local(AffineExponent::new(1, 0)).unwrap());
    assert_eq!(closed.negate_s(), gamma_local(AffineExponent::new(1, 0)).unwrap());
}

#[test]
fn tate_series_shells() {
    let s = tate_shell_series(0, 5);
    assert_eq!(s.shells.get(&-1), Some(&CoefRing::from_int(-1)));
    assert!(!s.shells.contains_key(&-2));
    assert_eq!(s.shells.get(&0), Some(&(&CoefRing::one() - &t(-2))));
}

// Randomized algebra.

fn arb_coef() -> impl Strategy<Value = CoefRing> {
    prop::collection::vec((-2i32..=2, -3i64..=3), 1..=2)
        .prop_map(|v| CoefRing::from_terms(v.into_iter().map(|(e, c)| (e, rat(c, 1)))))
}

fn arb_poly() -> impl Strategy<Value = ZPoly> {
    prop::collection::vec((-1i32..=2, arb_coef()), 1..=3).prop_map(ZPoly::from_terms)
}

fn arb_nonzero_poly() -> impl Strategy<Value = ZPoly> {
    arb_poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn arb_ratfun() -> impl Strategy<Value = RatFun> {
    (arb_poly(), arb_nonzero_poly()).prop_map(|(n, d)| RatFun::new(n, d).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_axioms(a in arb_ratfun(), b in arb_ratfun(), c in arb_ratfun()) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn canonical_equality_is_a_congruence(n in arb_poly(), d in arb_nonzero_poly(), h in arb_nonzero_poly(), k in arb_ratfun()) {
        let f = RatFun::new(n.clone(), d.clone()).unwrap();
        let g = RatFun::new(n.mul(&h), d.mul(&h)).unwrap();
        prop_assert_eq!(&f, &g);
        prop_assert_eq!(f.add(&k), g.add(&k));
        prop_assert_eq!(f.mul(&k), g.mul(&k));
    }

    #[test]
    fn json_round_trip(f in arb_ratfun()) {
        let s = f.to_json();
        let g = RatFun::from_json(&s).unwrap();
        prop_assert_eq!(g.to_json(), s);
        prop_assert_eq!(g, f);
    }

    #[test]
    fn substitutions_are_ring_maps(a in arb_ratfun(), b in arb_ratfun(), c2 in -3i32..=3) {
        prop_assert_eq!(a.mul(&b).negate_s(), a.negate_s().mul(&b.negate_s()));
        prop_assert_eq!(a.add(&b).shift_s(c2), a.shift_s(c2).add(&b.shift_s(c2)));
        prop_assert_eq!(a.shift_s(c2).shift_s(-c2), a.clone());
        prop_assert_eq!(a.negate_s().negate_s(), a);
    }
}
