use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Laurent polynomial in `t = q^(1/2)` with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoefRing {
    terms: BTreeMap<i32, BigRational>,
}

impl CoefRing {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        Self::monomial(BigRational::from_integer(BigInt::from(c)), 0)
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * t^e`.
    pub fn monomial(c: BigRational, e: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    /// `t^e`.
    pub fn t_pow(e: i32) -> Self {
        Self::monomial(BigRational::one(), e)
    }

    /// `sign * t^e`, the shape of every unramified character value.
    pub fn signed_t_pow(sign: i8, e: i32) -> Self {
        Self::monomial(BigRational::from_integer(BigInt::from(sign)), e)
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, BigRational)>>(it: I) -> Self {
        let mut out = Self::zero();
        for (e, c) in it {
            out.add_term(e, c);
        }
        out
    }

    pub fn terms(&self) -> &BTreeMap<i32, BigRational> {
        &self.terms
    }

    pub fn coeff(&self, e: i32) -> BigRational {
        self.terms.get(&e).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// Lowest term `(exponent, coefficient)`.
    pub fn lowest(&self) -> Option<(i32, &BigRational)> {
        self.terms.iter().next().map(|(e, c)| (*e, c))
    }

    /// `Some((c, e))` when the element is `c t^e` with `c != 0`.
    pub fn as_monomial(&self) -> Option<(BigRational, i32)> {
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            Some((c.clone(), *e))
        } else {
            None
        }
    }

    /// Units of `Q[t, 1/t]` are exactly the nonzero monomials.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn unit_inverse(&self) -> Option<Self> {
        self.as_monomial().map(|(c, e)| Self::monomial(c.recip(), -e))
    }

    pub fn add_term(&mut self, e: i32, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Integer power of a unit; negative exponents use the monomial inverse.
    pub fn unit_pow(&self, k: i32) -> Option<Self> {
        let (c, e) = self.as_monomial()?;
        let ck = if k >= 0 {
            num_traits::pow(c, k as usize)
        } else {
            num_traits::pow(c.recip(), (-k) as usize)
        };
        Some(Self::monomial(ck, e * k))
    }
}

impl From<i64> for CoefRing {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl<'a> Add<&'a CoefRing> for &'a CoefRing {
    type Output = CoefRing;
    fn add(self, rhs: &CoefRing) -> CoefRing {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a CoefRing> for &'a CoefRing {
    type Output = CoefRing;
    fn sub(self, rhs: &CoefRing) -> CoefRing {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a CoefRing> for &'a CoefRing {
    type Output = CoefRing;
    fn mul(self, rhs: &CoefRing) -> CoefRing {
        let mut out = CoefRing::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &CoefRing {
    type Output = CoefRing;
    fn neg(self) -> CoefRing {
        CoefRing {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<CoefRing> for CoefRing {
            type Output = CoefRing;
            fn $m(self, rhs: CoefRing) -> CoefRing {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CoefRing {
    type Output = CoefRing;
    fn neg(self) -> CoefRing {
        -&self
    }
}

impl AddAssign<&CoefRing> for CoefRing {
    fn add_assign(&mut self, rhs: &CoefRing) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl fmt::Display for CoefRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            match (*e, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (_, true) => write!(f, "t^{e}")?,
                (_, false) => write!(f, "{a}*t^{e}")?,
            }
        }
        Ok(())
    }
}
