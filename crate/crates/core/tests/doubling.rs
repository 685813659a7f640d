use satake::doubling::*;
use satake::qfield::*;
use satake::rootdata::{build_root_datum, CartanType};
use satake::Error;

use DoublingKind::*;

fn case(kind: DoublingKind, n: usize) -> DoublingCase {
    DoublingCase::new(kind, n).unwrap()
}

/// `zeta(a s + b2 / 2)` products, built directly.
fn z(args: &[(i32, i32)]) -> RatFun {
    zeta_product(&args.iter().map(|(a, b2)| AffineExponent::new(*a, *b2)).collect::<Vec<_>>()).unwrap()
}

fn g(args: &[(i32, i32)]) -> RatFun {
    gamma_product(&args.iter().map(|(a, b2)| AffineExponent::new(*a, *b2)).collect::<Vec<_>>()).unwrap()
}

fn cases(n_max: usize) -> Vec<DoublingCase> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for kind in [Symplectic, OrthogonalEven, OrthogonalOdd] {
            if let Ok(c) = DoublingCase::new(kind, n) {
                out.push(c);
            }
        }
    }
    out
}

#[test]
fn d_h_examples() {
    // zeta(s + 3/2) zeta(2s + 1)
    assert_eq!(d_h(&case(Symplectic, 2)).unwrap(), z(&[(1, 3), (2, 2)]));
    assert_eq!(d_h(&case(OrthogonalOdd, 3)).unwrap(), z(&[(2, 4)]));
    assert_eq!(d_h(&case(OrthogonalEven, 2)).unwrap(), z(&[(2, 2)]));
    assert_eq!(d_h(&case(OrthogonalOdd, 1)).unwrap(), RatFun::one());
}

#[test]
fn d_h_with_character() {
    let chi = UnramifiedChar::abs_power(1);
    let c = DoublingCase::with_char(Symplectic, 2, chi).unwrap();
    let expected = l_factor(AffineExponent::new(1, 3), chi)
        .unwrap()
        .mul(&l_factor(AffineExponent::new(2, 2), chi.pow(2)).unwrap());
    assert_eq!(d_h(&c).unwrap(), expected);
    // |.|^(1/2) is a shift of s by 1/2 in the first factor
    assert_eq!(l_factor(AffineExponent::new(1, 3), chi).unwrap(), zeta_local(AffineExponent::new(1, 4)).unwrap());
    assert!(a_h(&c).is_err());
}

#[test]
fn d_h_hermitian() {
    let q = UnramifiedChar::quadratic();
    let c = case(HermitianUnramified, 2);
    let expected = l_factor(AffineExponent::new(2, 2), q).unwrap().mul(&zeta_local(AffineExponent::new(2, 4)).unwrap());
    assert_eq!(d_h(&c).unwrap(), expected);
    let c3 = case(HermitianUnramified, 3);
    let expected = zeta_local(AffineExponent::new(2, 2))
        .unwrap()
        .mul(&l_factor(AffineExponent::new(2, 4), q).unwrap())
        .mul(&zeta_local(AffineExponent::new(2, 6)).unwrap());
    assert_eq!(d_h(&c3).unwrap(), expected);
    assert!(matches!(eta_factor(&c), Err(Error::Unsupported(_))));
}

#[test]
fn parity_is_enforced() {
    assert!(matches!(DoublingCase::new(Symplectic, 3), Err(Error::InvalidParity(_))));
    assert!(matches!(DoublingCase::new(OrthogonalEven, 3), Err(Error::InvalidParity(_))));
    assert!(matches!(DoublingCase::new(OrthogonalOdd, 4), Err(Error::InvalidParity(_))));
    assert!(DoublingCase::new(Symplectic, 0).is_err());
    assert_eq!(DoublingKind::parse("o", 3).unwrap(), OrthogonalOdd);
    assert_eq!(DoublingKind::parse("o", 4).unwrap(), OrthogonalEven);
    assert_eq!(DoublingKind::parse("sp", 4).unwrap(), Symplectic);
    assert!(DoublingKind::parse("gl", 4).is_err());
}

#[test]
fn a_h_examples() {
    // zeta(2s) zeta(s - 1/2)
    assert_eq!(a_h(&case(Symplectic, 2)).unwrap(), z(&[(2, 0), (1, -1)]));
    assert_eq!(a_h(&case(OrthogonalEven, 2)).unwrap(), z(&[(2, 0)]));
    // zeta(2s - 2) zeta(2s) zeta(s - 3/2)
    assert_eq!(a_h(&case(Symplectic, 4)).unwrap(), z(&[(2, -4), (2, 0), (1, -3)]));
}

#[test]
fn a_h_is_shifted_d_h_in_even_orthogonal_case() {
    for n in (2..=8).step_by(2) {
        let c = case(OrthogonalEven, n);
        assert_eq!(a_h(&c).unwrap(), a_h_shift(&c).unwrap(), "n = {n}");
    }
}

#[test]
fn a_h_shift_does_not_hold_for_symplectic() {
    // d_H(s - (n+1)/2) has a zeta(s) factor that a_H lacks
    for n in (2..=8).step_by(2) {
        let c = case(Symplectic, n);
        assert_ne!(a_h(&c).unwrap(), a_h_shift(&c).unwrap(), "n = {n}");
    }
}

#[test]
fn m_examples() {
    let sp2 = m_scalar(&case(Symplectic, 2)).unwrap();
    assert_eq!(sp2, z(&[(2, 0), (1, -1)]).div(&z(&[(2, 2), (1, 3)])).unwrap());
    let o2 = m_scalar(&case(OrthogonalEven, 2)).unwrap();
    assert_eq!(o2, z(&[(2, 0)]).div(&z(&[(2, 2)])).unwrap());
}

#[test]
fn eta_examples() {
    assert_eq!(eta_factor(&case(Symplectic, 2)).unwrap(), g(&[(2, 0), (1, -1)]));
    assert_eq!(eta_factor(&case(OrthogonalEven, 2)).unwrap(), g(&[(2, 0)]));
}

#[test]
fn ratio_and_product_forms_agree() {
    for c in cases(8) {
        let m_ratio = a_h(&c).unwrap().div(&d_h(&c).unwrap()).unwrap();
        assert_eq!(m_ratio, m_product(&c).unwrap(), "{c:?}");
        let eta_ratio = d_h(&c).unwrap().negate_s().div(&a_h(&c).unwrap()).unwrap();
        assert_eq!(eta_ratio, eta_gamma_product(&c).unwrap(), "{c:?}");
        assert!(m_scalar(&c).is_ok() && eta_factor(&c).is_ok());
    }
}

#[test]
fn normalization_identity() {
    for c in cases(8) {
        assert!(normalization_product(&c).unwrap().is_one(), "{c:?}");
        // eta(s) m(s) eta(-s) m(-s) = 1
        let em = eta_factor(&c).unwrap().mul(&m_scalar(&c).unwrap());
        assert!(em.mul(&em.negate_s()).is_one(), "{c:?}");
    }
}

#[test]
fn fixed_point_examples() {
    let sp2 = doubling_basic_and_fixedpoint(&case(Symplectic, 2)).unwrap();
    // zeta(2 - s) zeta(2 - 2s)
    assert_eq!(sp2.rhs, z(&[(-1, 4), (-2, 4)]));
    assert_eq!(sp2.lhs, sp2.rhs);
    let o2 = doubling_basic_and_fixedpoint(&case(OrthogonalEven, 2)).unwrap();
    assert_eq!(o2.rhs, z(&[(-2, 4)]));
    for c in cases(8) {
        let r = doubling_basic_and_fixedpoint(&c).unwrap();
        assert!(r.fixed_point && r.duality, "{c:?}");
        // at s = 1/2 both sides are d_H(0)
        let d0 = d_h(&c).unwrap().evaluate_s(0).unwrap();
        assert_eq!(r.lhs.evaluate_s(1).unwrap(), d0);
        assert_eq!(r.rhs.evaluate_s(1).unwrap(), d0);
    }
}

#[test]
fn gamma_of_empty_parameter_is_one() {
    let p = SatakeParamStd { eigenvalues: vec![] };
    assert!(standard_gamma(&p).unwrap().is_one());
}

fn params(kind: CartanType, rank: usize, values: &[(i8, i32)]) -> SatakeParamStd {
    let d = build_root_datum(kind, rank).unwrap();
    let v: Vec<CoefRing> = values.iter().map(|(s, e)| CoefRing::signed_t_pow(*s, *e)).collect();
    SatakeParamStd::from_datum(&d, &v).unwrap()
}

#[test]
fn self_dual_gamma() {
    // standard of SO(3) (dual of Sp(2)) and of Sp(4) (dual of odd orthogonal)
    for p in [params(CartanType::B, 1, &[(1, 1)]), params(CartanType::C, 2, &[(-1, 1), (1, 3)])] {
        let gm = standard_gamma(&p).unwrap();
        let reflected = gm.negate_s().shift_s(-2);
        assert!(gm.mul(&reflected).is_one());
    }
}

#[test]
fn gamma_chain() {
    let p = params(CartanType::B, 1, &[(1, 1)]);
    let r = unramified_gamma_std(&p, &case(Symplectic, 2)).unwrap();
    let eta = eta_factor(&case(Symplectic, 2)).unwrap();
    assert_eq!(r.doubling_gamma.mul(&eta.shift_s(-1)), r.gamma);
    let p = params(CartanType::C, 2, &[(1, 2), (-1, -1)]);
    for c in [case(OrthogonalOdd, 5), case(OrthogonalEven, 4), case(Symplectic, 4)] {
        assert!(unramified_gamma_std(&p, &c).is_ok());
    }
}

#[test]
fn satake_eigenvalues_of_so3() {
    let p = params(CartanType::B, 1, &[(1, 2)]);
    let mut e = p.eigenvalues.clone();
    e.sort();
    let mut want = vec![CoefRing::t_pow(2), CoefRing::one(), CoefRing::t_pow(-2)];
    want.sort();
    assert_eq!(e, want);
}
