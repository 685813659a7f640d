use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use super::character::CharacterPoly;
use crate::error::{Error, Result};
use crate::rootdata::{RootDatum, Weight};

/// Irreducible representation given by its weight multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepTable {
    pub datum: RootDatum,
    pub highest_weight: Weight,
    pub mult: BTreeMap<Weight, u64>,
    pub dimension: u64,
}

/// Weight table in the CLI format `[coords2, grading, multiplicity]`.
#[derive(Clone, Debug, Serialize)]
pub struct WeightTableJson {
    pub datum: String,
    pub highest_weight2: Vec<i32>,
    pub dimension: u64,
    pub weights: Vec<(Vec<i32>, i32, u64)>,
}

/// All weights of the irreducible module, by closing `{lambda}` under root strings.
fn saturate(datum: &RootDatum, lambda: &Weight) -> BTreeSet<Weight> {
    let mut seen = BTreeSet::from([lambda.clone()]);
    let mut queue = VecDeque::from([lambda.clone()]);
    while let Some(mu) = queue.pop_front() {
        for i in &datum.positive {
            let k = datum.pairing(&mu, *i);
            let step = if k > 0 { datum.roots[*i].neg() } else { datum.roots[*i].clone() };
            let mut nu = mu.clone();
            for _ in 0..k.abs() {
                nu = nu.add(&Weight { coords2: step.coords2.clone(), grading: 0 });
                if seen.insert(nu.clone()) {
                    queue.push_back(nu.clone());
                }
            }
        }
    }
    seen
}

/// Weight multiplicities of the irreducible module with the given highest weight,
/// by Freudenthal's recursion over every weight (no Weyl symmetry is assumed).
pub fn weight_multiplicities(datum: &RootDatum, highest_weight: &Weight) -> Result<RepTable> {
    if highest_weight.dim() != datum.dim {
        return Err(Error::Invalid(format!("weight {highest_weight} is not in {}", datum.label())));
    }
    if !datum.is_dominant(highest_weight) {
        return Err(Error::NotDominant(highest_weight.to_string()));
    }
    let rho = datum.half_sum_positive();
    let rho_check = datum.half_sum_positive_coroots();
    let depth = |mu: &Weight| highest_weight.sub(mu).dot4(&rho_check) / 4;
    let mut weights: Vec<Weight> = saturate(datum, highest_weight).into_iter().collect();
    weights.sort_by_key(|w| (depth(w), w.clone()));
    let lr = highest_weight.add(&rho);
    let norm_top = lr.dot4(&lr);
    let mut mult: BTreeMap<Weight, u64> = BTreeMap::new();
    for mu in &weights {
        if mu == highest_weight {
            mult.insert(mu.clone(), 1);
            continue;
        }
        let mut acc: i64 = 0;
        for i in &datum.positive {
            let alpha = Weight { coords2: datum.roots[*i].coords2.clone(), grading: 0 };
            let mut nu = mu.add(&alpha);
            while let Some(m) = mult.get(&nu) {
                acc += nu.dot4(&alpha) * *m as i64;
                nu = nu.add(&alpha);
            }
        }
        let mr = mu.add(&rho);
        let denom = norm_top - mr.dot4(&mr);
        assert!(denom > 0, "Freudenthal denominator vanishes at {mu}");
        let num = 2 * acc;
        assert!(num % denom == 0, "non-integral multiplicity at {mu}");
        let m = num / denom;
        if m > 0 {
            mult.insert(mu.clone(), m as u64);
        }
    }
    let dimension = mult.values().sum();
    Ok(RepTable { datum: datum.clone(), highest_weight: highest_weight.clone(), mult, dimension })
}

/// Weyl's dimension formula `prod_{alpha > 0} <lambda + rho, alpha^vee> / <rho, alpha^vee>`.
pub fn weyl_dimension(datum: &RootDatum, highest_weight: &Weight) -> u64 {
    let rho = datum.half_sum_positive();
    let lr = highest_weight.add(&rho);
    let mut acc = BigRational::one();
    for i in &datum.positive {
        let c = &datum.coroots[*i];
        acc *= BigRational::new(BigInt::from(lr.dot4(c)), BigInt::from(rho.dot4(c)));
    }
    assert!(acc.is_integer());
    acc.to_integer().try_into().expect("dimension fits in u64")
}

impl RepTable {
    /// Trivial representation.
    pub fn trivial(datum: &RootDatum) -> Self {
        weight_multiplicities(datum, &Weight::zero(datum.dim)).expect("zero is dominant")
    }

    /// Standard representation, highest weight `x_1`.
    pub fn standard(datum: &RootDatum) -> Self {
        weight_multiplicities(datum, &datum.standard_weight()).expect("x_1 is dominant")
    }

    /// The same module with the central coordinate acting with degree `1`.
    pub fn graded(&self) -> Self {
        let regrade = |w: &Weight| w.clone().with_grading(1);
        Self {
            datum: self.datum.clone(),
            highest_weight: regrade(&self.highest_weight),
            mult: self.mult.iter().map(|(w, m)| (regrade(w), *m)).collect(),
            dimension: self.dimension,
        }
    }

    /// Weight basis: each weight repeated by its multiplicity.
    pub fn weight_basis(&self) -> Vec<Weight> {
        self.mult
            .iter()
            .flat_map(|(w, m)| std::iter::repeat_n(w.clone(), *m as usize))
            .collect()
    }

    pub fn character(&self) -> CharacterPoly {
        let mut c = CharacterPoly::zero();
        for (w, m) in &self.mult {
            c.add_term(w.clone(), *m as i64);
        }
        c
    }

    pub fn multiplicity(&self, w: &Weight) -> u64 {
        self.mult.get(w).copied().unwrap_or(0)
    }

    pub fn to_json(&self) -> WeightTableJson {
        WeightTableJson {
            datum: self.datum.label(),
            highest_weight2: self.highest_weight.coords2.clone(),
            dimension: self.dimension,
            weights: self.mult.iter().map(|(w, m)| (w.coords2.clone(), w.grading, *m)).collect(),
        }
    }
}
