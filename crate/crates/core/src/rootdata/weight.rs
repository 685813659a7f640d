use std::fmt;

use serde::{Deserialize, Serialize};

/// Vector in the `x`-basis with half-integer coordinates, stored doubled,
/// plus the grading degree `c` of the central factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight {
    pub coords2: Vec<i32>,
    pub grading: i32,
}

impl Weight {
    pub fn zero(dim: usize) -> Self {
        Self { coords2: vec![0; dim], grading: 0 }
    }

    /// From integer coordinates.
    pub fn from_ints(c: &[i32]) -> Self {
        Self { coords2: c.iter().map(|x| 2 * x).collect(), grading: 0 }
    }

    /// From doubled coordinates.
    pub fn from_doubled(c2: &[i32]) -> Self {
        Self { coords2: c2.to_vec(), grading: 0 }
    }

    /// The basis vector `x_i`, `i` counted from 1.
    pub fn x(dim: usize, i: usize) -> Self {
        let mut w = Self::zero(dim);
        w.coords2[i - 1] = 2;
        w
    }

    pub fn with_grading(mut self, g: i32) -> Self {
        self.grading = g;
        self
    }

    pub fn dim(&self) -> usize {
        self.coords2.len()
    }

    pub fn is_zero(&self) -> bool {
        self.grading == 0 && self.coords2.iter().all(|c| *c == 0)
    }

    /// `Some` integer coordinates when the weight is integral.
    pub fn int_coords(&self) -> Option<Vec<i32>> {
        self.coords2.iter().map(|c| (c % 2 == 0).then_some(c / 2)).collect()
    }

    pub fn add(&self, o: &Self) -> Self {
        Self {
            coords2: self.coords2.iter().zip(&o.coords2).map(|(a, b)| a + b).collect(),
            grading: self.grading + o.grading,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        Self { coords2: self.coords2.iter().map(|a| -a).collect(), grading: -self.grading }
    }

    pub fn scale(&self, k: i32) -> Self {
        Self { coords2: self.coords2.iter().map(|a| a * k).collect(), grading: self.grading * k }
    }

    /// Four times the standard inner product of the coordinate parts.
    pub fn dot4(&self, o: &Self) -> i64 {
        self.coords2.iter().zip(&o.coords2).map(|(a, b)| *a as i64 * *b as i64).sum()
    }

    /// Sum of the coordinates, doubled.
    pub fn coord_sum2(&self) -> i32 {
        self.coords2.iter().sum()
    }
}

pub(crate) fn half_str(v2: i64) -> String {
    if v2 % 2 == 0 {
        (v2 / 2).to_string()
    } else {
        format!("{v2}/2")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords2.iter().map(|c| half_str(*c as i64)).collect();
        write!(f, "({})", parts.join(", "))?;
        if self.grading != 0 {
            write!(f, "[c={}]", self.grading)?;
        }
        Ok(())
    }
}
