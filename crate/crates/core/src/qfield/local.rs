use super::coef::CoefRing;
use super::exponent::{AffineExponent, UnramifiedChar};
use super::ratfun::RatFun;
use super::zpoly::ZPoly;
use crate::error::{Error, Result};

/// `1 - chi(uniformizer) q^(-T)` as a polynomial in `z`, for `T = a*s + b`.
pub fn euler_polynomial(e: AffineExponent, chi: UnramifiedChar) -> ZPoly {
    let c = &chi.at_uniformizer() * &CoefRing::t_pow(-e.b2);
    ZPoly::one().sub(&ZPoly::monomial(c, e.a))
}

/// `L(T, chi) = 1 / (1 - chi(uniformizer) q^(-T))`.
pub fn l_factor(e: AffineExponent, chi: UnramifiedChar) -> Result<RatFun> {
    let p = euler_polynomial(e, chi);
    if p.is_zero() {
        return Err(Error::Pole(format!("L({e}) with chi(uniformizer) = {}", chi.at_uniformizer())));
    }
    RatFun::new(ZPoly::one(), p)
}

/// The local zeta factor `1 / (1 - q^(-T))`.
pub fn zeta_local(e: AffineExponent) -> Result<RatFun> {
    l_factor(e, UnramifiedChar::trivial())
}

/// `gamma(T, chi) = L(1 - T, chi^-1) / L(T, chi)`.
pub fn gamma_local_char(e: AffineExponent, chi: UnramifiedChar) -> Result<RatFun> {
    let num = l_factor(e.one_minus(), chi.inverse())?;
    let den = l_factor(e, chi)?;
    num.div(&den)
}

/// `gamma(T) = zeta(1 - T) / zeta(T)`.
pub fn gamma_local(e: AffineExponent) -> Result<RatFun> {
    gamma_local_char(e, UnramifiedChar::trivial())
}

/// Product of `zeta` over a list of arguments.
pub fn zeta_product(args: &[AffineExponent]) -> Result<RatFun> {
    args.iter().try_fold(RatFun::one(), |acc, e| Ok(acc.mul(&zeta_local(*e)?)))
}

/// Product of `gamma` over a list of arguments.
pub fn gamma_product(args: &[AffineExponent]) -> Result<RatFun> {
    args.iter().try_fold(RatFun::one(), |acc, e| Ok(acc.mul(&gamma_local(*e)?)))
}
