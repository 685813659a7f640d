use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::qfield::CoefRing;
use crate::rootdata::{RootDatum, Weight};

/// Integer Laurent polynomial in the Satake coordinates, keyed by exponent weight.
///
/// The grading of a key is the exponent of the central coordinate.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CharacterPoly {
    terms: BTreeMap<Weight, i64>,
}

impl CharacterPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one(dim: usize) -> Self {
        Self::monomial(Weight::zero(dim))
    }

    pub fn monomial(w: Weight) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w, 1);
        Self { terms }
    }

    pub fn terms(&self) -> &BTreeMap<Weight, i64> {
        &self.terms
    }

    pub fn coeff(&self, w: &Weight) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Weight, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(w.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), *c);
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(-1))
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c * k);
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                out.add_term(w1.add(w2), c1 * c2);
            }
        }
        out
    }

    /// Value at the identity, i.e. the dimension for a character.
    pub fn value_at_identity(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Value at `x_i = values[i]`, each a unit; the grading is ignored.
    /// `None` when a value is not a unit or an exponent is not integral.
    pub fn evaluate(&self, values: &[CoefRing]) -> Option<CoefRing> {
        let mut acc = CoefRing::zero();
        for (w, c) in &self.terms {
            let mut term = CoefRing::from_int(*c);
            for (e, x) in w.int_coords()?.iter().zip(values) {
                term = &term * &x.unit_pow(*e)?;
            }
            acc = &acc + &term;
        }
        Some(acc)
    }

    /// Invariance under the simple reflections of `datum`.
    pub fn is_weyl_symmetric(&self, datum: &RootDatum) -> bool {
        (0..datum.rank).all(|j| {
            self.terms.iter().all(|(w, c)| self.coeff(&datum.simple_reflect(w, j)) == *c)
        })
    }
}

impl fmt::Display for CharacterPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("{c}*x^{w}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Serialize)]
struct MonomialJson {
    /// Doubled coordinates.
    exponent2: Vec<i32>,
    grading: i32,
    coeff: i64,
}

impl Serialize for CharacterPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<MonomialJson> = self
            .terms
            .iter()
            .map(|(w, c)| MonomialJson { exponent2: w.coords2.clone(), grading: w.grading, coeff: *c })
            .collect();
        v.serialize(s)
    }
}
