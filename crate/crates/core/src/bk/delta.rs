use std::collections::BTreeMap;

use serde::Serialize;

use super::dpoly::{d_p_polynomial, d_pbar_polynomial, doubling_case};
use super::nilpotent::BkCase;
use crate::doubling::d_h;
use crate::error::{Error, Result};
use crate::qfield::{CoefRing, ZPoly, ZSeries};

/// Which parabolic a delta series lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    P,
    PBar,
}

/// `sum_gamma c_gamma delta_{P, gamma}` over `gamma >= 0`, exact through `truncation`.
///
/// `gamma` is the degree of `c`, so the support grows toward the boundary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeltaSeries {
    pub side: Side,
    /// `2 <1, rho_P>`: the unit cocharacter scales by `t^modulus`.
    pub modulus: i32,
    pub truncation: u32,
    pub coeffs: BTreeMap<u32, CoefRing>,
}

impl DeltaSeries {
    pub fn zero(side: Side, modulus: i32, truncation: u32) -> Self {
        Self { side, modulus, truncation, coeffs: BTreeMap::new() }
    }

    /// `delta_{P, gamma}`.
    pub fn basis(side: Side, modulus: i32, truncation: u32, gamma: u32) -> Self {
        let mut s = Self::zero(side, modulus, truncation);
        s.add_term(gamma, &CoefRing::one());
        s
    }

    pub fn coeff(&self, gamma: u32) -> CoefRing {
        self.coeffs.get(&gamma).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, gamma: u32, c: &CoefRing) {
        if gamma > self.truncation || c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(gamma).or_default();
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&gamma);
        }
    }

    fn same_shape(&self, side: Side) -> Self {
        Self::zero(side, self.modulus, self.truncation)
    }
}

/// `mu(delta_gamma) = q^{<mu, rho_P>} delta_{gamma + mu}`.
pub fn lattice_action(mu: i32, series: &DeltaSeries) -> Result<DeltaSeries> {
    let mut out = series.same_shape(series.side);
    for (g, c) in &series.coeffs {
        let target = *g as i64 + mu as i64;
        if target < 0 {
            return Err(Error::Invalid(format!("delta index {target} is outside the monoid")));
        }
        out.add_term(target as u32, &(c * &CoefRing::t_pow(mu * series.modulus)));
    }
    Ok(out)
}

/// Power series `sum r_k mu_1^k` in the generator of the lattice action.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OpSeries {
    pub coeffs: Vec<CoefRing>,
}

impl OpSeries {
    /// Polynomial in the generator, truncated.
    pub fn from_poly(p: &ZPoly, truncation: u32) -> Result<Self> {
        if p.min_deg().is_some_and(|d| d < 0) {
            return Err(Error::Invalid("operator polynomial has negative degree".into()));
        }
        Ok(Self { coeffs: (0..=truncation as i32).map(|k| p.coeff(k)).collect() })
    }

    /// `p^{-1}` as a power series, for `p(0) = 1`.
    pub fn inverse_of(p: &ZPoly, truncation: u32) -> Result<Self> {
        let p = Self::from_poly(p, truncation)?;
        if !p.coeffs[0].is_one() {
            return Err(Error::NonUnitConstant);
        }
        let mut inv: Vec<CoefRing> = vec![CoefRing::one()];
        for k in 1..p.coeffs.len() {
            let mut acc = CoefRing::zero();
            for j in 1..=k {
                acc = &acc - &(&p.coeffs[j] * &inv[k - j]);
            }
            inv.push(acc);
        }
        Ok(Self { coeffs: inv })
    }

    pub fn compose(&self, o: &Self) -> Self {
        let len = self.coeffs.len().min(o.coeffs.len());
        let mut out = vec![CoefRing::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            for (j, b) in o.coeffs.iter().enumerate().take(len - i) {
                out[i + j] += &(a * b);
            }
        }
        Self { coeffs: out }
    }

    /// Applies the operator, landing on `side`.
    pub fn apply(&self, series: &DeltaSeries, side: Side) -> DeltaSeries {
        let mut out = series.same_shape(side);
        for (g, c) in &series.coeffs {
            for (k, r) in self.coeffs.iter().enumerate() {
                let k = k as u32;
                if g + k > series.truncation {
                    break;
                }
                out.add_term(g + k, &(&(c * r) * &CoefRing::t_pow(k as i32 * series.modulus)));
            }
        }
        out
    }
}

fn modulus(n: usize, case: BkCase) -> Result<i32> {
    Ok(doubling_case(n, case)?.modulus_exponent())
}

/// `xi0_P = d_Pbar^{-1}(delta_{P,0})`.
pub fn xi0_series(n: usize, case: BkCase, truncation: u32) -> Result<DeltaSeries> {
    let op = OpSeries::inverse_of(&d_pbar_polynomial(n, case)?, truncation)?;
    Ok(op.apply(&DeltaSeries::basis(Side::P, modulus(n, case)?, truncation, 0), Side::P))
}

/// `xi0_Pbar = d_P^{-1}(delta_{Pbar,0})`.
pub fn xi0_series_pbar(n: usize, case: BkCase, truncation: u32) -> Result<DeltaSeries> {
    let op = OpSeries::inverse_of(&d_p_polynomial(n, case)?, truncation)?;
    Ok(op.apply(&DeltaSeries::basis(Side::PBar, modulus(n, case)?, truncation, 0), Side::PBar))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MellinReport {
    pub n: usize,
    pub case: BkCase,
    pub truncation: u32,
    pub pass: bool,
    pub first_mismatch: Option<i32>,
}

/// Mellin transform of `xi0_P`: coefficient `gamma` weighted by
/// `delta_P^{-1/2} |c|^{-s} = t^{-gamma modulus} z^gamma`, against `d_H(s)`.
pub fn mellin_check(n: usize, case: BkCase, truncation: u32) -> Result<MellinReport> {
    let xi = xi0_series(n, case, truncation)?;
    let mut mellin = ZSeries::new(truncation as i32);
    for (g, c) in &xi.coeffs {
        mellin.add_term(*g as i32, &(c * &CoefRing::t_pow(-(*g as i32) * xi.modulus)));
    }
    let target = d_h(&doubling_case(n, case)?)?.series(truncation as i32)?;
    let first_mismatch = mellin.first_difference(&target);
    Ok(MellinReport { n, case, truncation, pass: first_mismatch.is_none(), first_mismatch })
}

/// `F_{Pbar|P}` with explicit `d_P`, `d_Pbar`: `delta_{P,gamma} -> (d_Pbar / d_P) delta_{Pbar,gamma}`.
pub fn fourier_with(d_p: &ZPoly, d_pbar: &ZPoly, series: &DeltaSeries) -> Result<DeltaSeries> {
    let (num, den, side) = match series.side {
        Side::P => (d_pbar, d_p, Side::PBar),
        Side::PBar => (d_p, d_pbar, Side::P),
    };
    let op = OpSeries::from_poly(num, series.truncation)?.compose(&OpSeries::inverse_of(den, series.truncation)?);
    Ok(op.apply(series, side))
}

/// `F_{Pbar|P}` on a series on `P`, or `F_{P|Pbar}` on a series on `Pbar`.
pub fn fourier(n: usize, case: BkCase, series: &DeltaSeries) -> Result<DeltaSeries> {
    fourier_with(&d_p_polynomial(n, case)?, &d_pbar_polynomial(n, case)?, series)
}

/// `F_{Pbar|P}(delta_{P, gamma})`.
pub fn fourier_on_basis(n: usize, case: BkCase, gamma: u32, truncation: u32) -> Result<DeltaSeries> {
    fourier(n, case, &DeltaSeries::basis(Side::P, modulus(n, case)?, truncation, gamma))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FourierReport {
    pub n: usize,
    pub case: BkCase,
    pub truncation: u32,
    /// `F_{Pbar|P}(xi0_P) = xi0_Pbar`.
    pub fixed_point: bool,
    /// `F_{P|Pbar} F_{Pbar|P} = id` on every `delta_{P,gamma}` within the truncation.
    pub involution_basis: bool,
    pub involution_xi0: bool,
}

impl FourierReport {
    pub fn pass(&self) -> bool {
        self.fixed_point && self.involution_basis && self.involution_xi0
    }
}

pub fn fourier_check(n: usize, case: BkCase, truncation: u32) -> Result<FourierReport> {
    let xi = xi0_series(n, case, truncation)?;
    let fxi = fourier(n, case, &xi)?;
    let fixed_point = fxi == xi0_series_pbar(n, case, truncation)?;
    let involution_xi0 = fourier(n, case, &fxi)? == xi;
    let mut involution_basis = true;
    for g in 0..=truncation {
        let b = DeltaSeries::basis(Side::P, xi.modulus, truncation, g);
        involution_basis &= fourier(n, case, &fourier(n, case, &b)?)? == b;
    }
    Ok(FourierReport { n, case, truncation, fixed_point, involution_basis, involution_xi0 })
}
