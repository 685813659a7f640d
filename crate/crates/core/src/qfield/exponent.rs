use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::coef::CoefRing;

/// Affine form `a*s + b` with `b` a half-integer stored as `b2 = 2b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AffineExponent {
    pub a: i32,
    pub b2: i32,
}

impl AffineExponent {
    pub const fn new(a: i32, b2: i32) -> Self {
        Self { a, b2 }
    }

    /// The constant `b2 / 2`.
    pub const fn constant(b2: i32) -> Self {
        Self { a: 0, b2 }
    }

    /// `1 - self`.
    pub fn one_minus(self) -> Self {
        Self { a: -self.a, b2: 2 - self.b2 }
    }

    /// `1 + self`.
    pub fn one_plus(self) -> Self {
        Self { a: self.a, b2: self.b2 + 2 }
    }

    /// The form after substituting `s -> -s`.
    pub fn negate_s(self) -> Self {
        Self { a: -self.a, b2: self.b2 }
    }

    /// The form after substituting `s -> s + c2/2`.
    pub fn shift_s(self, c2: i32) -> Self {
        Self { a: self.a, b2: self.b2 + self.a * c2 }
    }

    pub fn scale(self, k: i32) -> Self {
        Self { a: self.a * k, b2: self.b2 * k }
    }
}

impl Add for AffineExponent {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self { a: self.a + o.a, b2: self.b2 + o.b2 }
    }
}

impl Sub for AffineExponent {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self { a: self.a - o.a, b2: self.b2 - o.b2 }
    }
}

impl Neg for AffineExponent {
    type Output = Self;
    fn neg(self) -> Self {
        Self { a: -self.a, b2: -self.b2 }
    }
}

impl fmt::Display for AffineExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = if self.b2 % 2 == 0 {
            format!("{}", (self.b2 / 2).abs())
        } else {
            format!("{}/2", self.b2.abs())
        };
        match (self.a, self.b2) {
            (0, _) => write!(f, "{}{b}", if self.b2 < 0 { "-" } else { "" }),
            (a, 0) => write!(f, "{}s", coeff_str(a)),
            (a, b2) => write!(f, "{}s {} {b}", coeff_str(a), if b2 < 0 { "-" } else { "+" }),
        }
    }
}

fn coeff_str(a: i32) -> String {
    match a {
        1 => String::new(),
        -1 => "-".into(),
        _ => a.to_string(),
    }
}

/// Unramified character of `F^*`, determined by `chi(uniformizer) = sign * t^t_exp`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UnramifiedChar {
    pub t_exp: i32,
    pub sign: i8,
}

impl Default for UnramifiedChar {
    fn default() -> Self {
        Self::trivial()
    }
}

impl UnramifiedChar {
    pub const fn trivial() -> Self {
        Self { t_exp: 0, sign: 1 }
    }

    /// The unramified quadratic character, `-1` at the uniformizer.
    pub const fn quadratic() -> Self {
        Self { t_exp: 0, sign: -1 }
    }

    /// `|.|^(s0)` with `s0 = s0_2 / 2`.
    pub const fn abs_power(s0_2: i32) -> Self {
        Self { t_exp: -s0_2, sign: 1 }
    }

    pub fn is_trivial(&self) -> bool {
        self.t_exp == 0 && self.sign == 1
    }

    pub fn mul(self, o: Self) -> Self {
        Self { t_exp: self.t_exp + o.t_exp, sign: self.sign * o.sign }
    }

    pub fn inverse(self) -> Self {
        Self { t_exp: -self.t_exp, sign: self.sign }
    }

    pub fn pow(self, k: u32) -> Self {
        Self { t_exp: self.t_exp * k as i32, sign: if k % 2 == 0 { 1 } else { self.sign } }
    }

    /// Value at the uniformizer.
    pub fn at_uniformizer(&self) -> CoefRing {
        CoefRing::signed_t_pow(self.sign, self.t_exp)
    }
}
