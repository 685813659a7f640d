use num_rational::BigRational;
use satake::rootdata::*;
use satake::vinberg::*;

fn datum(ty: CartanType, r: usize) -> RootDatum {
    build_root_datum(ty, r).unwrap()
}

fn group(f: &[i64]) -> FiniteAbelianGroup {
    FiniteAbelianGroup { invariant_factors: f.to_vec() }
}

fn r(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn sym_lambda(n: i32) -> Weight {
    Weight::x(2, 1).scale(n).with_grading(1)
}

#[test]
fn centers() {
    assert_eq!(center_of_simply_connected(&datum(CartanType::A, 1)), group(&[2]));
    for n in 1..=7 {
        assert_eq!(center_of_simply_connected(&datum(CartanType::A, n)), group(&[n as i64 + 1]));
        assert_eq!(center_of_simply_connected(&datum(CartanType::B, n)), group(&[2]));
        assert_eq!(center_of_simply_connected(&datum(CartanType::C, n)), group(&[2]));
    }
    for n in 2..=7 {
        let expected = if n % 2 == 0 { group(&[2, 2]) } else { group(&[4]) };
        assert_eq!(center_of_simply_connected(&datum(CartanType::D, n)), expected, "D{n}");
    }
}

#[test]
fn center_order_is_cartan_determinant() {
    for ty in [CartanType::A, CartanType::B, CartanType::C, CartanType::D] {
        for n in 2..=6 {
            let d = datum(ty, n);
            let det = LatticeMap::new(d.cartan_matrix()).determinant();
            assert_eq!(center_of_simply_connected(&d).order(), det.abs());
        }
    }
}

#[test]
fn sym_power_dichotomy() {
    let a1 = datum(CartanType::A, 1);
    for n in 1..=10 {
        let desc = unit_group_dual(&a1, &sym_lambda(n)).unwrap();
        if n % 2 == 0 {
            assert_eq!(desc.kernel_subgroup, group(&[2]));
            assert_eq!(desc.resulting_isomorphism_label, "GL1 x SL2");
        } else {
            assert!(desc.kernel_subgroup.is_trivial());
            assert_eq!(desc.resulting_isomorphism_label, "GL2");
        }
        assert_eq!(desc.omega_order * desc.kernel_subgroup.order(), desc.center.order());
    }
}

#[test]
fn catalogue_labels() {
    let c3 = datum(CartanType::C, 3);
    let std = Weight::x(3, 1).with_grading(1);
    assert_eq!(unit_group_dual(&c3, &std).unwrap().resulting_isomorphism_label, "GSpin7");
    let b2 = datum(CartanType::B, 2);
    let spin = Weight::from_doubled(&[1, 1]).with_grading(1);
    assert_eq!(unit_group_dual(&b2, &spin).unwrap().resulting_isomorphism_label, "GSp4");
    assert_eq!(
        unit_group_dual(&b2, &Weight::x(2, 1).with_grading(1)).unwrap().resulting_isomorphism_label,
        "GL1 x Sp4"
    );
    let a3 = datum(CartanType::A, 3);
    let w2 = Weight::from_ints(&[1, 1, 0, 0]).with_grading(1);
    let desc = unit_group_dual(&a3, &w2).unwrap();
    assert_eq!(desc.kernel_subgroup, group(&[2]));
    assert_eq!(desc.omega_order, 2);
}

#[test]
fn rejects_bad_lambda() {
    let a1 = datum(CartanType::A, 1);
    assert!(matches!(
        unit_group_dual(&a1, &Weight::from_ints(&[0, 1]).with_grading(1)),
        Err(satake::Error::NotDominant(_))
    ));
    assert!(unit_group_dual(&a1, &Weight::x(2, 1)).is_err());
}

#[test]
fn kernel_depends_only_on_class() {
    for (ty, rank) in [(CartanType::A, 2), (CartanType::B, 2), (CartanType::C, 3), (CartanType::D, 4)] {
        let d = datum(ty, rank);
        let roots: Vec<Weight> = d.simple.iter().map(|i| d.roots[*i].clone()).collect();
        for labels in [[0u32, 1, 0, 0], [1, 0, 0, 0], [1, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]] {
            let l = &labels[..rank];
            if l.iter().all(|x| *x == 0) {
                continue;
            }
            let lambda = d.from_dynkin_labels(l).unwrap().with_grading(1);
            let base = unit_group_dual(&d, &lambda).unwrap();
            for root in &roots {
                let moved = lambda.add(root);
                if !d.is_dominant(&moved) {
                    continue;
                }
                let other = unit_group_dual(&d, &moved).unwrap();
                assert_eq!(other.kernel_subgroup, base.kernel_subgroup);
                assert_eq!(other.resulting_isomorphism_label, base.resulting_isomorphism_label);
            }
        }
    }
}

#[test]
fn sym_power_monoid_membership() {
    for n in 1..=4 {
        let m = sym_power_monoid(n).unwrap();
        assert!(m.contains(&r(1), &[[r(1), r(0)], [r(0), r(1)]]));
    }
    let m2 = sym_power_monoid(2).unwrap();
    assert!(m2.contains(&r(2), &[[r(2), r(0)], [r(0), r(2)]]));
    assert!(!m2.contains(&r(2), &[[r(1), r(0)], [r(0), r(2)]]));
    assert!(m2.contains(&r(0), &[[r(1), r(1)], [r(1), r(1)]]));
    assert!(!m2.is_unit(&r(0), &[[r(1), r(1)], [r(1), r(1)]]));
    assert_eq!(m2.defining_equation, "a^2 = det(m)");
    assert!(sym_power_monoid(0).is_err());
}

#[test]
fn abelianization_extends_lambda() {
    for n in 1..=6i64 {
        let m = sym_power_monoid(n as u32).unwrap();
        for k0 in -3..=3i64 {
            for k1 in -6..=6i64 {
                let v = [k0, k1, n * k0 - k1];
                assert_eq!(m.torus_equation.apply(&v), vec![0]);
                assert_eq!(m.determinant_map.apply(&v)[0], n * m.abelianization_map.apply(&v)[0]);
            }
        }
    }
}

#[test]
fn doubling_grading() {
    for n in 1..=6 {
        let u = doubling_monoid_units(n, n / 2, CSign::Det).unwrap();
        assert_eq!(u.central_degree(), n as i64);
        let mut g = vec![0i64; n];
        g.extend(vec![1; n / 2]);
        assert_eq!(u.grading.apply(&g), vec![0]);
        let flipped = doubling_monoid_units(n, n / 2, CSign::InverseDet).unwrap();
        assert_eq!(flipped.central_degree(), -(n as i64));
    }
    assert_eq!(CSign::default(), CSign::InverseDet);
    assert_eq!("det".parse::<CSign>().unwrap(), CSign::Det);
}
