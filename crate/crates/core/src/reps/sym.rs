use std::collections::HashMap;

use serde::Serialize;

use super::character::CharacterPoly;
use super::table::RepTable;
use crate::rootdata::Weight;

/// Calls `f` on every non-decreasing index tuple of length `d` drawn from `0..n`.
fn for_each_multiset(n: usize, d: usize, f: &mut impl FnMut(&[usize])) {
    fn go(n: usize, d: usize, start: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == d {
            f(cur);
            return;
        }
        for i in start..n {
            cur.push(i);
            go(n, d, i, cur, f);
            cur.pop();
        }
    }
    go(n, d, 0, &mut Vec::with_capacity(d), f);
}

/// Character of `Sym^d`, by enumerating `d`-element multisets of the weight basis.
pub fn sym_power_trace(rep: &RepTable, d: usize) -> CharacterPoly {
    let basis = rep.weight_basis();
    let mut out = CharacterPoly::zero();
    let zero = Weight::zero(rep.datum.dim);
    for_each_multiset(basis.len(), d, &mut |idx| {
        let w = idx.iter().fold(zero.clone(), |acc, i| acc.add(&basis[*i]));
        out.add_term(w, 1);
    });
    out
}

/// `det(1 - rho(sigma) z)` and the first coefficients of its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LFactor {
    /// Coefficient of `z^k` in `prod_mu (1 - x^mu z)^{m_mu}`.
    pub denominator: Vec<CharacterPoly>,
    /// Coefficient of `z^k` in the inverse, for `k <= truncation`.
    pub series: Vec<CharacterPoly>,
    pub truncation: usize,
}

/// `det(1 - rho(sigma) z)^{-1}` as a product over weights, expanded through degree `truncation`.
pub fn standard_lfactor(rep: &RepTable, truncation: usize) -> LFactor {
    let dim = rep.datum.dim;
    let mut den = vec![CharacterPoly::one(dim)];
    for w in rep.weight_basis() {
        let mut next = den.clone();
        next.push(CharacterPoly::zero());
        let minus = CharacterPoly::monomial(w).scale(-1);
        for (k, c) in den.iter().enumerate() {
            next[k + 1] = next[k + 1].add(&c.mul(&minus));
        }
        den = next;
    }
    let mut series: Vec<CharacterPoly> = vec![CharacterPoly::one(dim)];
    for k in 1..=truncation {
        let mut acc = CharacterPoly::zero();
        for j in 1..=k.min(den.len() - 1) {
            acc = acc.sub(&den[j].mul(&series[k - j]));
        }
        series.push(acc);
    }
    LFactor { denominator: den, series, truncation }
}

impl LFactor {
    /// First degree where the expansion differs from `tr Sym^d(rho)`, if any.
    pub fn matches_sym_traces(&self, rep: &RepTable) -> Option<usize> {
        (0..=self.truncation).find(|d| self.series[*d] != sym_power_trace(rep, *d))
    }
}

/// Number of multisets of size `mu.grading` from `weights` (each of grading 1) summing to `mu`.
pub fn partition_count(weights: &[Weight], mu: &Weight) -> u64 {
    let d = mu.grading;
    if d < 0 || weights.iter().any(|w| w.grading != 1) {
        return 0;
    }
    let mut memo: HashMap<(usize, Weight), u64> = HashMap::new();
    count(weights, 0, mu, &mut memo)
}

fn count(weights: &[Weight], i: usize, mu: &Weight, memo: &mut HashMap<(usize, Weight), u64>) -> u64 {
    if mu.grading == 0 {
        return u64::from(mu.is_zero());
    }
    if i == weights.len() {
        return 0;
    }
    if let Some(v) = memo.get(&(i, mu.clone())) {
        return *v;
    }
    let v = count(weights, i + 1, mu, memo) + count(weights, i, &mu.sub(&weights[i]), memo);
    memo.insert((i, mu.clone()), v);
    v
}

/// Multiplicity of `mu` in `Sym^d` of the graded module, `d = mu.grading`.
pub fn basic_constant_term(rep: &RepTable, mu: &Weight) -> u64 {
    if mu.grading < 0 {
        return 0;
    }
    let graded = if rep.highest_weight.grading == 1 { rep.clone() } else { rep.graded() };
    sym_power_trace(&graded, mu.grading as usize).coeff(mu).max(0) as u64
}
