//! Exact arithmetic over `Q(t)`, `t = q^(1/2)`, in the variable `z = q^(-s)`.
//!
//! [`CoefRing`] holds Laurent polynomials in `t`, [`ZPoly`] Laurent polynomials in `z`
//! over it, and [`RatFun`] their quotients in canonical form.

mod coef;
mod exponent;
mod local;
mod qpoly;
mod ratfun;
mod series;
pub mod tate;
mod zpoly;

pub use coef::CoefRing;
pub use exponent::{AffineExponent, UnramifiedChar};
pub use local::{euler_polynomial, gamma_local, gamma_local_char, gamma_product, l_factor, zeta_local, zeta_product};
pub use ratfun::RatFun;
#[allow(unused_imports)]
pub(crate) use ratfun::{coef_from_json, coef_to_json};
pub use series::ZSeries;
pub use tate::{shell_integral, tate_shell_series, TateSeries};
pub use zpoly::ZPoly;

/// Rational number helper, `n / d`.
pub fn rat(n: i64, d: i64) -> num_rational::BigRational {
    num_rational::BigRational::new(n.into(), d.into())
}
