use std::collections::BTreeSet;

use proptest::prelude::*;
use satake::qfield::AffineExponent;
use satake::rootdata::*;

const TYPES: [CartanType; 4] = [CartanType::A, CartanType::B, CartanType::C, CartanType::D];

fn datums(max_rank: usize) -> Vec<RootDatum> {
    let mut out = Vec::new();
    for ty in TYPES {
        for r in 1..=max_rank {
            if let Ok(d) = build_root_datum(ty, r) {
                out.push(d);
            }
        }
    }
    out
}

#[test]
fn root_counts() {
    for r in 1..=5 {
        assert_eq!(build_root_datum(CartanType::A, r).unwrap().roots.len(), r * (r + 1));
        assert_eq!(build_root_datum(CartanType::B, r).unwrap().roots.len(), 2 * r * r);
        assert_eq!(build_root_datum(CartanType::C, r).unwrap().roots.len(), 2 * r * r);
        if r >= 2 {
            assert_eq!(build_root_datum(CartanType::D, r).unwrap().roots.len(), 2 * r * (r - 1));
        }
    }
}

#[test]
fn c2_roots_explicit() {
    let d = build_root_datum(CartanType::C, 2).unwrap();
    let got: BTreeSet<Vec<i32>> = d.export().roots.into_iter().collect();
    let expected: BTreeSet<Vec<i32>> =
        [[1, 1], [1, -1], [-1, 1], [-1, -1], [2, 0], [-2, 0], [0, 2], [0, -2]].iter().map(|v| v.to_vec()).collect();
    assert_eq!(got, expected);
}

#[test]
fn d2_roots_explicit() {
    let d = build_root_datum(CartanType::D, 2).unwrap();
    let got: BTreeSet<Vec<i32>> = d.export().roots.into_iter().collect();
    let expected: BTreeSet<Vec<i32>> = [[1, 1], [1, -1], [-1, 1], [-1, -1]].iter().map(|v| v.to_vec()).collect();
    assert_eq!(got, expected);
    let i = d.index_of_root(&Weight::from_ints(&[1, 1])).unwrap();
    assert_eq!(d.pairing(&d.roots[i], i), 2);
}

#[test]
fn unsupported_ranks() {
    assert!(build_root_datum(CartanType::D, 1).is_err());
    assert!(build_root_datum(CartanType::A, 0).is_err());
    assert!("E".parse::<CartanType>().is_err());
}

#[test]
fn coroot_conventions() {
    let c = build_root_datum(CartanType::C, 3).unwrap();
    let i = c.index_of_root(&Weight::from_ints(&[2, 0, 0])).unwrap();
    assert_eq!(c.coroots[i], Weight::from_ints(&[1, 0, 0]));
    let j = c.index_of_root(&Weight::from_ints(&[0, 1, 1])).unwrap();
    assert_eq!(c.coroots[j], Weight::from_ints(&[0, 1, 1]));
    let b = build_root_datum(CartanType::B, 2).unwrap();
    let k = b.index_of_root(&Weight::from_ints(&[0, -1])).unwrap();
    assert_eq!(b.coroots[k], Weight::from_ints(&[0, -2]));
}

#[test]
fn root_datum_axioms() {
    for d in datums(4) {
        for i in 0..d.roots.len() {
            assert_eq!(d.pairing(&d.roots[i], i), 2, "{}", d.label());
        }
        assert_eq!(d.positive.len() * 2, d.roots.len());
        assert_eq!(d.simple.len(), d.rank);
    }
}

#[test]
fn reflection_closure() {
    for d in datums(4) {
        let set: BTreeSet<Weight> = d.roots.iter().cloned().collect();
        for i in 0..d.roots.len() {
            for beta in &d.roots {
                assert!(set.contains(&d.reflect(beta, i)), "{}: s_{} of {beta}", d.label(), d.roots[i]);
            }
        }
        for j in 0..d.rank {
            let image: BTreeSet<Weight> = d.roots.iter().map(|r| d.simple_reflect(r, j)).collect();
            assert_eq!(image, set, "{}", d.label());
        }
    }
}

#[test]
fn positive_roots_lie_in_positive_cone() {
    for d in datums(4) {
        for r in d.positive_roots() {
            assert!(d.in_positive_root_cone(r), "{}: {r}", d.label());
        }
    }
}

#[test]
fn half_sum_pairs_to_one_with_simple_coroots() {
    for d in datums(5) {
        let rho = d.half_sum_positive();
        for i in &d.simple {
            assert_eq!(d.pairing(&rho, *i), 1, "{}", d.label());
        }
    }
}

#[test]
fn half_sum_examples() {
    for n in 1..=6 {
        let c = build_root_datum(CartanType::C, n).unwrap();
        let expected: Vec<i32> = (0..n as i32).map(|i| n as i32 - i).collect();
        assert_eq!(c.half_sum_positive(), Weight::from_ints(&expected));
    }
    let a1 = build_root_datum(CartanType::A, 1).unwrap();
    let alpha = Weight::from_ints(&[1, -1]);
    assert_eq!(a1.half_sum_positive().scale(2), alpha);
    for n in 1..=6 {
        let a = build_root_datum(CartanType::A, n - 1 + usize::from(n == 1)).unwrap();
        if a.dim != n {
            continue;
        }
        let rho = a.half_sum_positive();
        for j in 1..=n {
            assert_eq!(rho.coords2[j - 1], principal_grading2(n, j));
        }
    }
}

#[test]
fn fundamental_weights_are_dual_to_simple_coroots() {
    for d in datums(5) {
        let w = d.fundamental_weights();
        for (i, wi) in w.iter().enumerate() {
            let labels = d.dynkin_labels(wi);
            for (j, l) in labels.iter().enumerate() {
                assert_eq!(*l, i32::from(i == j), "{} omega_{}", d.label(), i + 1);
            }
        }
    }
}

#[test]
fn weyl_orbit_sizes() {
    let b3 = build_root_datum(CartanType::B, 3).unwrap();
    assert_eq!(b3.weyl_orbit(&Weight::x(3, 1)).len(), 6);
    assert_eq!(b3.weyl_orbit(&b3.half_sum_positive()).len(), 48);
    let d4 = build_root_datum(CartanType::D, 4).unwrap();
    assert_eq!(d4.weyl_orbit(&d4.half_sum_positive()).len(), 192);
    let a3 = build_root_datum(CartanType::A, 3).unwrap();
    assert_eq!(a3.weyl_orbit(&a3.half_sum_positive()).len(), 24);
}

#[test]
fn dominant_representative_is_dominant() {
    let c3 = build_root_datum(CartanType::C, 3).unwrap();
    let w = Weight::from_ints(&[-1, 3, -2]);
    let d = c3.dominant_representative(&w);
    assert!(c3.is_dominant(&d));
    assert_eq!(d, Weight::from_ints(&[3, 2, 1]));
}

#[test]
fn chi_s_examples() {
    let x = |n: usize, i: usize| Weight::x(n, i);
    // (s - 1/2) + (s + 1/2)
    assert_eq!(chi_s_pairing(2, &x(2, 1).add(&x(2, 2))).unwrap(), AffineExponent::new(2, 0));
    for n in 1..=8 {
        assert_eq!(chi_s_pairing(n, &x(n, 1)).unwrap(), AffineExponent::new(1, -(n as i32 - 1)));
        let last = chi_s_pairing(n, &x(n, n)).unwrap();
        assert_eq!(last, AffineExponent::new(1, n as i32 - 1));
        assert_eq!(last.one_plus(), AffineExponent::new(1, n as i32 + 1));
    }
    // x_l + x_(l+1) pairs to 2s + 2l - n
    for n in 2..=8 {
        for l in 1..n {
            let e = chi_s_pairing(n, &x(n, l).add(&x(n, l + 1))).unwrap();
            assert_eq!(e, AffineExponent::new(2, 4 * l as i32 - 2 * n as i32));
        }
    }
    assert!(chi_s_pairing(3, &Weight::from_doubled(&[1, 1, 0])).is_err());
    assert!(chi_s_pairing(3, &x(2, 1)).is_err());
}

proptest! {
    #[test]
    fn chi_s_is_linear(n in 1usize..=8, a in prop::collection::vec(-3i32..=3, 8), b in prop::collection::vec(-3i32..=3, 8), k in -3i32..=3) {
        let u = Weight::from_ints(&a[..n]);
        let v = Weight::from_ints(&b[..n]);
        let lhs = chi_s_pairing(n, &u.scale(k).add(&v)).unwrap();
        let rhs = chi_s_pairing(n, &u).unwrap().scale(k) + chi_s_pairing(n, &v).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

// Smith normal form.

fn check_smith(m: &LatticeMap) -> SmithForm {
    let s = smith_normal_form(m);
    assert!(s.u.is_unimodular() && s.v.is_unimodular());
    assert_eq!(s.u.mul(m).mul(&s.v), s.d);
    assert!(s.d.is_diagonal());
    let diag = s.d.diagonal();
    for w in diag.windows(2) {
        assert!(w[0] >= 0);
        if w[0] == 0 {
            assert_eq!(w[1], 0);
        } else {
            assert_eq!(w[1] % w[0], 0, "{diag:?}");
        }
    }
    s
}

/// Gcd of all k-by-k minors, by brute force.
fn determinantal_divisor(m: &LatticeMap, k: usize) -> i64 {
    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        if n < k {
            return vec![];
        }
        let mut out = subsets(n - 1, k);
        for mut s in subsets(n - 1, k - 1) {
            s.push(n - 1);
            out.push(s);
        }
        out
    }
    let mut g = 0i64;
    for rows in subsets(m.rows, k) {
        for cols in subsets(m.cols, k) {
            let sub = LatticeMap::new(rows.iter().map(|i| cols.iter().map(|j| m.entries[*i][*j]).collect()).collect());
            g = gcd(g, sub.determinant().abs());
        }
    }
    g
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn invariant_factors_oracle(m: &LatticeMap) -> Vec<i64> {
    let mut out = Vec::new();
    let mut prev = 1;
    for k in 1..=m.rows.min(m.cols) {
        let dk = determinantal_divisor(m, k);
        if dk == 0 {
            break;
        }
        out.push(dk / prev);
        prev = dk;
    }
    out
}

#[test]
fn smith_examples() {
    assert_eq!(check_smith(&LatticeMap::identity(3)).d, LatticeMap::identity(3));
    assert_eq!(check_smith(&LatticeMap::new(vec![vec![2]])).d, LatticeMap::new(vec![vec![2]]));
    // diag(2, 3) scrambled by unimodular matrices
    let p = LatticeMap::new(vec![vec![2, 1], vec![1, 1]]);
    let q = LatticeMap::new(vec![vec![1, 3], vec![0, 1]]);
    let m = p.mul(&LatticeMap::new(vec![vec![2, 0], vec![0, 3]])).mul(&q);
    let s = check_smith(&m);
    assert_eq!(s.invariant_factors(), vec![1, 6]);
    assert_eq!(invariant_factors_oracle(&m), vec![1, 6]);
}

#[test]
fn cartan_matrix_centers() {
    for n in 1..=6 {
        let a = build_root_datum(CartanType::A, n).unwrap();
        let s = check_smith(&LatticeMap::new(a.cartan_matrix()));
        assert_eq!(s.cokernel(), (0, vec![n as i64 + 1]));
    }
}

fn arb_matrix() -> impl Strategy<Value = LatticeMap> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-6i64..=6, c), r).prop_map(LatticeMap::new)
    })
}

proptest! {
    #[test]
    fn smith_matches_determinantal_divisors(m in arb_matrix()) {
        let s = check_smith(&m);
        prop_assert_eq!(s.invariant_factors(), invariant_factors_oracle(&m));
    }
}
