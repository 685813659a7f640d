use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use super::coef::CoefRing;
use super::qpoly::{BiPoly, QPoly};

/// Laurent polynomial in `z` with [`CoefRing`] coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZPoly {
    terms: BTreeMap<i32, CoefRing>,
}

impl ZPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(CoefRing::one())
    }

    pub fn constant(c: CoefRing) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * z^k`.
    pub fn monomial(c: CoefRing, k: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        Self { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, CoefRing)>>(it: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in it {
            out.add_term(k, &c);
        }
        out
    }

    pub fn terms(&self) -> &BTreeMap<i32, CoefRing> {
        &self.terms
    }

    pub fn coeff(&self, k: i32) -> CoefRing {
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn min_deg(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_deg(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn add_term(&mut self, k: i32, c: &CoefRing) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(k).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.add_term(*k, c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &o.terms {
                out.add_term(k1 + k2, &(c1 * c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &CoefRing) -> Self {
        let mut out = Self::zero();
        for (k, x) in &self.terms {
            out.add_term(*k, &(x * c));
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiply by `z^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Substitute `z -> u * z^p` for a unit `u` of the coefficient ring.
    pub fn substitute_monomial(&self, u: &CoefRing, p: i32) -> Self {
        let mut out = Self::zero();
        for (k, c) in &self.terms {
            let uk = u.unit_pow(*k).expect("substitution factor must be a unit");
            out.add_term(k * p, &(c * &uk));
        }
        out
    }

    /// Evaluate at `z = u`, `u` a unit.
    pub fn evaluate_unit(&self, u: &CoefRing) -> CoefRing {
        self.substitute_monomial(u, 0).coeff(0)
    }

    /// Smallest `t` and `z` exponents occurring.
    pub(crate) fn monomial_content(&self) -> (i32, i32) {
        let zmin = self.min_deg().unwrap_or(0);
        let tmin = self.terms.values().filter_map(|c| c.min_exp()).min().unwrap_or(0);
        (tmin, zmin)
    }

    /// Dense form after dividing by `t^tmin z^zmin`.
    pub(crate) fn to_bipoly(&self, tmin: i32, zmin: i32) -> BiPoly {
        let Some(zmax) = self.max_deg() else {
            return Vec::new();
        };
        let mut out = vec![QPoly::zero(); (zmax - zmin + 1) as usize];
        for (k, c) in &self.terms {
            let tmax = c.max_exp().unwrap();
            let mut v = vec![BigRational::zero(); (tmax - tmin + 1) as usize];
            for (e, x) in c.terms() {
                v[(e - tmin) as usize] = x.clone();
            }
            out[(k - zmin) as usize] = QPoly(v);
        }
        out
    }

    pub(crate) fn from_bipoly(p: &BiPoly) -> Self {
        let mut out = Self::zero();
        for (k, c) in p.iter().enumerate() {
            let coef = CoefRing::from_terms(c.0.iter().enumerate().map(|(e, x)| (e as i32, x.clone())));
            out.add_term(k as i32, &coef);
        }
        out
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match *k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*z")?,
                _ => write!(f, "({c})*z^{k}")?,
            }
        }
        Ok(())
    }
}
