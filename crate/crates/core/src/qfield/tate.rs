//! Unramified Tate integral of `chi(x) psi(x)` organised by valuation shells.
//!
//! The additive character `psi` has conductor the ring of integers and the
//! measure is self-dual, so the integers have volume `1`.

use std::collections::BTreeMap;


use super::coef::CoefRing;
use super::ratfun::RatFun;
use super::series::ZSeries;
use super::zpoly::ZPoly;

/// `q^k`.
fn q_pow(k: i32) -> CoefRing {
    CoefRing::t_pow(2 * k)
}

/// Integral of `psi` over the ball `{v(x) >= k}`.
///
/// A character integrates to the volume of the ball when it is trivial there
/// and to zero otherwise; `psi` is trivial on the ball exactly when `k >= 0`.
pub fn ball_integral(k: i32) -> CoefRing {
    if k >= 0 {
        q_pow(-k)
    } else {
        CoefRing::zero()
    }
}

/// Integral of `psi` over the shell `{v(x) = n}`, the difference of two balls.
pub fn shell_integral(n: i32) -> CoefRing {
    &ball_integral(n) - &ball_integral(n + 1)
}

/// The shell series `sum_n z^n * int_{v(x)=n} chi(x) psi(x) dx` for `chi = |.|^(s0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TateSeries {
    /// `2 * s0`.
    pub s0_2: i32,
    /// Shell index to coefficient, through the truncation.
    pub shells: BTreeMap<i32, CoefRing>,
    pub truncation: i32,
}

impl TateSeries {
    /// Lowest shell index with a nonzero contribution.
    pub const LOWEST_SHELL: i32 = -1;

    /// Coefficient of `z^n`: `chi` is `q^(-n s0)` on the shell.
    fn coefficient(s0_2: i32, n: i32) -> CoefRing {
        &shell_integral(n) * &CoefRing::t_pow(-n * s0_2)
    }

    /// The closed form of the shell sum as a rational function of `z = q^(-s)`.
    ///
    /// The finite head below shell `0` is added to the geometric tail `c / (1 - r z)`,
    /// where `c` and `r` are read off the shell values and checked to be geometric.
    pub fn collapse(&self) -> RatFun {
        let mut head = ZPoly::zero();
        for n in (Self::LOWEST_SHELL - 2)..0 {
            head.add_term(n, &Self::coefficient(self.s0_2, n));
        }
        let c0 = Self::coefficient(self.s0_2, 0);
        let c1 = Self::coefficient(self.s0_2, 1);
        let c2 = Self::coefficient(self.s0_2, 2);
        assert!(!c0.is_zero(), "shell 0 has positive volume");
        assert_eq!(&c0 * &c2, &c1 * &c1, "shell values are geometric from shell 0 on");
        let ratio = RatFun::from_poly(ZPoly::constant(c1)).div(&RatFun::from_poly(ZPoly::constant(c0.clone()))).unwrap();
        let r = ratio.as_constant().expect("constant ratio");
        let tail = RatFun::new(ZPoly::constant(c0), ZPoly::one().sub(&ZPoly::monomial(r, 1))).unwrap();
        RatFun::from_poly(head).add(&tail)
    }

    /// Laurent expansion of the shell series.
    pub fn as_series(&self) -> ZSeries {
        let mut out = ZSeries::new(self.truncation);
        for (n, c) in &self.shells {
            out.add_term(*n, c);
        }
        out
    }
}

/// Shell series for `chi = |.|^(s0)` through `z^truncation`.
pub fn tate_shell_series(s0_2: i32, truncation: i32) -> TateSeries {
    let mut shells = BTreeMap::new();
    for n in TateSeries::LOWEST_SHELL..=truncation {
        let c = TateSeries::coefficient(s0_2, n);
        if !c.is_zero() {
            shells.insert(n, c);
        }
    }
    TateSeries { s0_2, shells, truncation }
}
