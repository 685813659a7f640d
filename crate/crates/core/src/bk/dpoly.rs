use serde::{Deserialize, Serialize};

use super::nilpotent::{highest_weight_vectors, lowest_weight_vectors, BkCase, HwvSet};
use crate::doubling::{d_h, eta_factor, DoublingCase, DoublingKind};
use crate::error::{Error, Result};
use crate::qfield::{gamma_product, AffineExponent, CoefRing, RatFun, ZPoly};

/// The doubling case whose Siegel Levi is `GL_n`.
pub fn doubling_case(n: usize, case: BkCase) -> Result<DoublingCase> {
    let kind = match case {
        BkCase::Sp => DoublingKind::Symplectic,
        BkCase::O if n % 2 == 0 => DoublingKind::OrthogonalEven,
        BkCase::O => DoublingKind::OrthogonalOdd,
    };
    DoublingCase::new(kind, n)
}

/// `prod (1 - t^{-2 - h} w^a)` over the lines, `w` written as `z`.
fn det_polynomial(set: &HwvSet) -> ZPoly {
    set.lines.iter().fold(ZPoly::one(), |acc, l| {
        let factor = ZPoly::one().sub(&ZPoly::monomial(CoefRing::t_pow(-2 - l.h2), l.z_weight));
        acc.mul(&factor)
    })
}

/// `d_P(w) = det(1 - q^{-1} H_q^{-1} w | (u_p)^e)`.
pub fn d_p_polynomial(n: usize, case: BkCase) -> Result<ZPoly> {
    Ok(det_polynomial(&highest_weight_vectors(n, case)?))
}

/// `d_Pbar(w)`, from the lowest-weight lines.
pub fn d_pbar_polynomial(n: usize, case: BkCase) -> Result<ZPoly> {
    Ok(det_polynomial(&lowest_weight_vectors(n, case)?))
}

/// Both sides of `d_P(q^s)^{-1} = d_H(-s)` and `d_Pbar(q^{-s})^{-1} = d_H(s)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DpCheck {
    pub d_p_inverse: RatFun,
    pub d_h_minus: RatFun,
    pub d_pbar_inverse: RatFun,
    pub d_h: RatFun,
    pub part_a: bool,
    pub part_b: bool,
}

pub fn dp_identities(n: usize, case: BkCase) -> Result<DpCheck> {
    let dc = doubling_case(n, case)?;
    let dh = d_h(&dc)?;
    let dp = RatFun::from_poly(d_p_polynomial(n, case)?).negate_s().inv()?;
    let dpbar = RatFun::from_poly(d_pbar_polynomial(n, case)?).inv()?;
    let dh_minus = dh.negate_s();
    Ok(DpCheck {
        part_a: dp == dh_minus,
        part_b: dpbar == dh,
        d_p_inverse: dp,
        d_h_minus: dh_minus,
        d_pbar_inverse: dpbar,
        d_h: dh,
    })
}

/// Sign of the `h`-eigenvalue entering each gamma factor.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NormalizerSign {
    /// `gamma(a s - s_i)` on a line with half-eigenvalue `s_i`.
    #[default]
    Eigenvalue,
    /// `gamma(a s + s_i)`, the labels read literally as `x_{n-i} + x_{n-i+1}`.
    Literal,
}

/// `prod gamma` over the highest-weight lines, checked against `eta(s)`.
pub fn gamma_product_normalizer(n: usize, case: BkCase) -> Result<RatFun> {
    gamma_product_with(n, case, NormalizerSign::Eigenvalue)
}

pub fn gamma_product_with(n: usize, case: BkCase, sign: NormalizerSign) -> Result<RatFun> {
    let set = highest_weight_vectors(n, case)?;
    let args: Vec<AffineExponent> = set
        .lines
        .iter()
        .map(|l| {
            let b2 = match sign {
                NormalizerSign::Eigenvalue => -l.h2,
                NormalizerSign::Literal => l.h2,
            };
            AffineExponent::new(l.z_weight, b2)
        })
        .collect();
    let g = gamma_product(&args)?;
    let eta = eta_factor(&doubling_case(n, case)?)?;
    if g != eta {
        return Err(Error::Consistency(format!("gamma product {g} differs from eta(s) = {eta}")));
    }
    Ok(g)
}
