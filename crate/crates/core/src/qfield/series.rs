use std::collections::BTreeMap;

use super::coef::CoefRing;

/// Truncated Laurent series in `z`, exact through `max_degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZSeries {
    terms: BTreeMap<i32, CoefRing>,
    max_degree: i32,
}

impl ZSeries {
    pub fn new(max_degree: i32) -> Self {
        Self { terms: BTreeMap::new(), max_degree }
    }

    pub fn max_degree(&self) -> i32 {
        self.max_degree
    }

    pub fn terms(&self) -> &BTreeMap<i32, CoefRing> {
        &self.terms
    }

    pub fn coeff(&self, d: i32) -> CoefRing {
        self.terms.get(&d).cloned().unwrap_or_default()
    }

    /// Adds `c z^d`; terms beyond the truncation are discarded.
    pub fn add_term(&mut self, d: i32, c: &CoefRing) {
        if d > self.max_degree || c.is_zero() {
            return;
        }
        let entry = self.terms.entry(d).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&d);
        }
    }

    /// Same series known to a lower precision.
    pub fn truncate(&self, max_degree: i32) -> Self {
        Self {
            terms: self.terms.range(..=max_degree).map(|(k, c)| (*k, c.clone())).collect(),
            max_degree: max_degree.min(self.max_degree),
        }
    }

    /// First degree where the two series differ, comparing through the common precision.
    pub fn first_difference(&self, o: &Self) -> Option<i32> {
        let top = self.max_degree.min(o.max_degree);
        let lo = self.terms.keys().chain(o.terms.keys()).copied().min()?;
        (lo..=top).find(|d| self.coeff(*d) != o.coeff(*d))
    }
}
