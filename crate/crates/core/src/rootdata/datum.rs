use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::weight::Weight;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CartanType {
    A,
    B,
    C,
    D,
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CartanType::A => "A",
            CartanType::B => "B",
            CartanType::C => "C",
            CartanType::D => "D",
        };
        write!(f, "{s}")
    }
}

impl std::str::FromStr for CartanType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(CartanType::A),
            "B" => Ok(CartanType::B),
            "C" => Ok(CartanType::C),
            "D" => Ok(CartanType::D),
            _ => Err(Error::UnsupportedDatum(format!("type {s:?}"))),
        }
    }
}

/// Classical root system in Bourbaki coordinates.
///
/// Type `A_r` lives in `Z^(r+1)` (the weight lattice of `GL_(r+1)`); the others in `Z^r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootDatum {
    pub cartan_type: CartanType,
    pub rank: usize,
    pub dim: usize,
    pub roots: Vec<Weight>,
    /// `coroots[i]` is the coroot of `roots[i]`.
    pub coroots: Vec<Weight>,
    /// Indices into `roots`, in Bourbaki order.
    pub simple: Vec<usize>,
    /// Indices into `roots`.
    pub positive: Vec<usize>,
}

fn signed_pair(dim: usize, i: usize, si: i32, j: usize, sj: i32) -> Weight {
    let mut w = Weight::zero(dim);
    w.coords2[i] = 2 * si;
    w.coords2[j] += 2 * sj;
    w
}

fn lex_positive(w: &Weight) -> bool {
    w.coords2.iter().find(|c| **c != 0).is_some_and(|c| *c > 0)
}

/// Builds the root datum of the given type and rank.
pub fn build_root_datum(cartan_type: CartanType, rank: usize) -> Result<RootDatum> {
    let min_rank = if cartan_type == CartanType::D { 2 } else { 1 };
    if rank < min_rank {
        return Err(Error::UnsupportedDatum(format!("{cartan_type}{rank}")));
    }
    let dim = if cartan_type == CartanType::A { rank + 1 } else { rank };
    let mut roots = Vec::new();
    let mut coroots = Vec::new();
    for i in 0..dim {
        for j in (i + 1)..dim {
            let signs: &[(i32, i32)] = match cartan_type {
                CartanType::A => &[(1, -1), (-1, 1)],
                _ => &[(1, -1), (-1, 1), (1, 1), (-1, -1)],
            };
            for &(si, sj) in signs {
                let r = signed_pair(dim, i, si, j, sj);
                coroots.push(r.clone());
                roots.push(r);
            }
        }
        for s in [1, -1] {
            match cartan_type {
                CartanType::B => {
                    let r = Weight::x(dim, i + 1).scale(s);
                    coroots.push(r.scale(2));
                    roots.push(r);
                }
                CartanType::C => {
                    let c = Weight::x(dim, i + 1).scale(s);
                    roots.push(c.scale(2));
                    coroots.push(c);
                }
                _ => {}
            }
        }
    }
    let find = |w: &Weight| roots.iter().position(|r| r == w).expect("simple root present");
    let mut simple = Vec::new();
    for i in 0..dim - 1 {
        simple.push(find(&signed_pair(dim, i, 1, i + 1, -1)));
    }
    match cartan_type {
        CartanType::A => {}
        CartanType::B => simple.push(find(&Weight::x(dim, rank))),
        CartanType::C => simple.push(find(&Weight::x(dim, rank).scale(2))),
        CartanType::D => simple.push(find(&signed_pair(dim, rank - 2, 1, rank - 1, 1))),
    }
    let positive = (0..roots.len()).filter(|i| lex_positive(&roots[*i])).collect();
    Ok(RootDatum { cartan_type, rank, dim, roots, coroots, simple, positive })
}

/// Plain-integer export for inspection.
#[derive(Clone, Debug, Serialize)]
pub struct RootDatumExport {
    pub cartan_type: CartanType,
    pub rank: usize,
    pub roots: Vec<Vec<i32>>,
    pub coroots: Vec<Vec<i32>>,
    pub simple_roots: Vec<Vec<i32>>,
}

impl RootDatum {
    /// `<lambda, alpha^vee>` for the root with index `i`.
    pub fn pairing(&self, lambda: &Weight, i: usize) -> i32 {
        let v = lambda.dot4(&self.coroots[i]);
        assert!(v % 4 == 0, "weight {lambda} is not integral against coroot {}", self.coroots[i]);
        (v / 4) as i32
    }

    /// Reflection `s_alpha` for the root with index `i`; the grading is fixed.
    pub fn reflect(&self, lambda: &Weight, i: usize) -> Weight {
        let k = self.pairing(lambda, i);
        let mut out = lambda.clone();
        for (o, r) in out.coords2.iter_mut().zip(&self.roots[i].coords2) {
            *o -= k * r;
        }
        out
    }

    pub fn simple_reflect(&self, lambda: &Weight, j: usize) -> Weight {
        self.reflect(lambda, self.simple[j])
    }

    pub fn is_dominant(&self, lambda: &Weight) -> bool {
        self.simple.iter().all(|i| self.pairing(lambda, *i) >= 0)
    }

    /// Dynkin labels `<lambda, alpha_j^vee>` over the simple roots.
    pub fn dynkin_labels(&self, lambda: &Weight) -> Vec<i32> {
        self.simple.iter().map(|i| self.pairing(lambda, *i)).collect()
    }

    /// The dominant element of the Weyl orbit.
    pub fn dominant_representative(&self, lambda: &Weight) -> Weight {
        let mut w = lambda.clone();
        'outer: loop {
            for j in 0..self.simple.len() {
                if self.pairing(&w, self.simple[j]) < 0 {
                    w = self.simple_reflect(&w, j);
                    continue 'outer;
                }
            }
            return w;
        }
    }

    /// The Weyl orbit, by closure under simple reflections.
    pub fn weyl_orbit(&self, lambda: &Weight) -> BTreeSet<Weight> {
        let mut seen = BTreeSet::from([lambda.clone()]);
        let mut queue = VecDeque::from([lambda.clone()]);
        while let Some(w) = queue.pop_front() {
            for j in 0..self.simple.len() {
                let r = self.simple_reflect(&w, j);
                if seen.insert(r.clone()) {
                    queue.push_back(r);
                }
            }
        }
        seen
    }

    /// `eta_G = (1/2) sum_{alpha > 0} alpha`.
    pub fn half_sum_positive(&self) -> Weight {
        let mut acc = Weight::zero(self.dim);
        for i in &self.positive {
            for (a, r) in acc.coords2.iter_mut().zip(&self.roots[*i].coords2) {
                *a += r / 2;
            }
        }
        acc
    }

    /// Half the sum of the positive coroots.
    pub fn half_sum_positive_coroots(&self) -> Weight {
        let mut acc = Weight::zero(self.dim);
        for i in &self.positive {
            for (a, r) in acc.coords2.iter_mut().zip(&self.coroots[*i].coords2) {
                *a += r / 2;
            }
        }
        acc
    }

    /// Fundamental weights in Bourbaki coordinates.
    pub fn fundamental_weights(&self) -> Vec<Weight> {
        let (r, d) = (self.rank, self.dim);
        let prefix = |k: usize| {
            let mut w = Weight::zero(d);
            for c in w.coords2.iter_mut().take(k) {
                *c = 2;
            }
            w
        };
        let spin = |last: i32| {
            let mut w = Weight::from_doubled(&vec![1; d]);
            w.coords2[d - 1] = last;
            w
        };
        (1..=r)
            .map(|k| match (self.cartan_type, k) {
                (CartanType::B, k) if k == r => spin(1),
                (CartanType::D, k) if k == r - 1 => spin(-1),
                (CartanType::D, k) if k == r => spin(1),
                _ => prefix(k),
            })
            .collect()
    }

    /// Dominant weight with the given Dynkin labels.
    pub fn from_dynkin_labels(&self, labels: &[u32]) -> Result<Weight> {
        if labels.len() != self.rank {
            return Err(Error::Invalid(format!("expected {} Dynkin labels, got {}", self.rank, labels.len())));
        }
        Ok(self
            .fundamental_weights()
            .iter()
            .zip(labels)
            .fold(Weight::zero(self.dim), |acc, (w, k)| acc.add(&w.scale(*k as i32))))
    }

    /// Highest weight `x_1` of the standard representation.
    pub fn standard_weight(&self) -> Weight {
        Weight::x(self.dim, 1)
    }

    /// Cartan matrix `a_ij = <alpha_j, alpha_i^vee>`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        self.simple
            .iter()
            .map(|i| self.simple.iter().map(|j| self.pairing(&self.roots[*j], *i) as i64).collect())
            .collect()
    }

    /// Coefficients of `v` in the basis of simple roots, if `v` lies in their span.
    pub fn simple_root_coords(&self, v: &Weight) -> Option<Vec<BigRational>> {
        let n = self.simple.len();
        // Rows are coordinates; columns are simple roots, then the right-hand side.
        let mut m: Vec<Vec<BigRational>> = (0..self.dim)
            .map(|row| {
                let mut r: Vec<BigRational> = self
                    .simple
                    .iter()
                    .map(|i| BigRational::new(self.roots[*i].coords2[row].into(), 2.into()))
                    .collect();
                r.push(BigRational::new(v.coords2[row].into(), 2.into()));
                r
            })
            .collect();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..n {
            let Some(p) = (row..m.len()).find(|r| !m[*r][col].is_zero()) else {
                continue;
            };
            m.swap(row, p);
            let inv = m[row][col].recip();
            for x in m[row].iter_mut() {
                *x *= &inv;
            }
            for r in 0..m.len() {
                if r != row && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for c in 0..=n {
                        let delta = &f * &m[row][c];
                        m[r][c] -= delta;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        if m[row..].iter().any(|r| !r[n].is_zero()) {
            return None;
        }
        let mut out = vec![BigRational::zero(); n];
        for (r, c) in pivots.iter().enumerate() {
            out[*c] = m[r][n].clone();
        }
        Some(out)
    }

    /// Whether `v` is a nonnegative integer combination of simple roots.
    pub fn in_positive_root_cone(&self, v: &Weight) -> bool {
        self.simple_root_coords(v)
            .is_some_and(|c| c.iter().all(|x| x.is_integer() && !x.is_negative()))
    }

    /// Whether `v` lies in the root lattice.
    pub fn in_root_lattice(&self, v: &Weight) -> bool {
        self.simple_root_coords(v).is_some_and(|c| c.iter().all(|x| x.is_integer()))
    }

    /// Height of `v` in the root lattice.
    pub fn height(&self, v: &Weight) -> Option<i64> {
        let c = self.simple_root_coords(v)?;
        let mut h = BigRational::zero();
        for x in c {
            if !x.is_integer() {
                return None;
            }
            h += x;
        }
        Some(h.to_integer().try_into().expect("small height"))
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = &Weight> {
        self.positive.iter().map(|i| &self.roots[*i])
    }

    pub fn index_of_root(&self, w: &Weight) -> Option<usize> {
        self.roots.iter().position(|r| r == w)
    }

    pub fn export(&self) -> RootDatumExport {
        let plain = |w: &Weight| w.int_coords().expect("roots are integral");
        RootDatumExport {
            cartan_type: self.cartan_type,
            rank: self.rank,
            roots: self.roots.iter().map(plain).collect(),
            coroots: self.coroots.iter().map(plain).collect(),
            simple_roots: self.simple.iter().map(|i| plain(&self.roots[*i])).collect(),
        }
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.cartan_type, self.rank)
    }
}
