//! Scalar calculus of the doubling method: the denominators `d_H`, `a_H`,
//! the intertwining scalar `m(s)`, the normalizing factor `eta(s)` and the
//! fixed-point identity of the doubling basic function.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qfield::{gamma_product, l_factor, zeta_product, AffineExponent, CoefRing, RatFun, UnramifiedChar, ZPoly};
use crate::reps::RepTable;
use crate::rootdata::{chi_s_pairing, RootDatum, Weight};

/// Type of the form `h` on the doubled space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DoublingKind {
    Symplectic,
    OrthogonalEven,
    OrthogonalOdd,
    HermitianUnramified,
}

impl DoublingKind {
    /// Parses `sp`, `o`, `hermitian` or a full kind name; `o` picks the parity of `n`.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "sp" | "symplectic" => Ok(Self::Symplectic),
            "o" | "orthogonal" if n % 2 == 0 => Ok(Self::OrthogonalEven),
            "o" | "orthogonal" => Ok(Self::OrthogonalOdd),
            "orthogonal_even" | "o_even" => Ok(Self::OrthogonalEven),
            "orthogonal_odd" | "o_odd" => Ok(Self::OrthogonalOdd),
            "u" | "hermitian" | "hermitian_unramified" => Ok(Self::HermitianUnramified),
            _ => Err(Error::Parse(format!("case {s:?}"))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Symplectic => "symplectic",
            Self::OrthogonalEven => "orthogonal_even",
            Self::OrthogonalOdd => "orthogonal_odd",
            Self::HermitianUnramified => "hermitian_unramified",
        }
    }
}

/// A doubling datum: the kind of form, the Siegel Levi size `n` and an unramified `chi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DoublingCase {
    pub kind: DoublingKind,
    pub n: usize,
    pub chi: UnramifiedChar,
}

impl DoublingCase {
    pub fn new(kind: DoublingKind, n: usize) -> Result<Self> {
        Self::with_char(kind, n, UnramifiedChar::trivial())
    }

    pub fn with_char(kind: DoublingKind, n: usize, chi: UnramifiedChar) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("n must be positive".into()));
        }
        let ok = match kind {
            DoublingKind::Symplectic | DoublingKind::OrthogonalEven => n % 2 == 0,
            DoublingKind::OrthogonalOdd => n % 2 == 1,
            DoublingKind::HermitianUnramified => true,
        };
        if !ok {
            return Err(Error::InvalidParity(format!("{} needs the other parity than n = {n}", kind.name())));
        }
        Ok(Self { kind, n, chi })
    }

    fn require_trivial_char(&self) -> Result<()> {
        if !self.chi.is_trivial() {
            return Err(Error::Invalid("defined for trivial chi only".into()));
        }
        if self.kind == DoublingKind::HermitianUnramified {
            return Err(Error::Unsupported("only d_H is available in the hermitian case".into()));
        }
        Ok(())
    }

    /// `<2 rho, e_1>`: `n + 1` for symplectic, `n - 1` for orthogonal.
    pub fn modulus_exponent(&self) -> i32 {
        match self.kind {
            DoublingKind::Symplectic => self.n as i32 + 1,
            _ => self.n as i32 - 1,
        }
    }

    fn is_sp(&self) -> bool {
        self.kind == DoublingKind::Symplectic
    }

    fn x(&self, i: usize) -> Weight {
        Weight::x(self.n, i)
    }

    fn pairing(&self, coroot: &Weight) -> AffineExponent {
        chi_s_pairing(self.n, coroot).expect("integral coroot of the right size")
    }
}

/// `d_H(s, chi)`.
pub fn d_h(case: &DoublingCase) -> Result<RatFun> {
    let n = case.n as i32;
    let chi = case.chi;
    let mut factors: Vec<(AffineExponent, UnramifiedChar)> = Vec::new();
    match case.kind {
        DoublingKind::Symplectic => {
            factors.push((AffineExponent::new(1, n + 1), chi));
            factors.extend((1..=n / 2).map(|j| (AffineExponent::new(2, 4 * j - 2), chi.pow(2))));
        }
        DoublingKind::OrthogonalEven => {
            factors.extend((1..=n / 2).map(|j| (AffineExponent::new(2, 4 * j - 2), chi.pow(2))));
        }
        DoublingKind::OrthogonalOdd => {
            factors.extend((1..=(n - 1) / 2).map(|j| (AffineExponent::new(2, 4 * j), chi.pow(2))));
        }
        DoublingKind::HermitianUnramified => {
            let eta = UnramifiedChar::quadratic();
            factors.extend((1..=n).map(|j| (AffineExponent::new(2, 2 * j), chi.mul(eta.pow((n - j) as u32)))));
        }
    }
    factors.iter().try_fold(RatFun::one(), |acc, (e, c)| Ok(acc.mul(&l_factor(*e, *c)?)))
}

/// Arguments `(chi_s, x_l + x_(l+1))` for `l <= n/2`, then `(chi_s, x_1)` for symplectic.
fn a_h_arguments(case: &DoublingCase) -> Vec<AffineExponent> {
    let mut args: Vec<AffineExponent> =
        (1..=case.n / 2).map(|l| case.pairing(&case.x(l).add(&case.x(l + 1)))).collect();
    if case.is_sp() {
        args.push(case.pairing(&case.x(1)));
    }
    args
}

/// `a_H(s)` as a product of `zeta` at the `chi_s` pairings.
pub fn a_h(case: &DoublingCase) -> Result<RatFun> {
    case.require_trivial_char()?;
    zeta_product(&a_h_arguments(case))
}

/// `d_H(s - <rho, e_1>)`; agrees with `a_H` in the even orthogonal case.
pub fn a_h_shift(case: &DoublingCase) -> Result<RatFun> {
    case.require_trivial_char()?;
    Ok(d_h(case)?.shift_s(-case.modulus_exponent()))
}

/// `m(s)` as a product of `zeta` ratios over root pairings.
pub fn m_product(case: &DoublingCase) -> Result<RatFun> {
    case.require_trivial_char()?;
    let n = case.n;
    let num = zeta_product(&a_h_arguments(case))?;
    let mut den_args: Vec<AffineExponent> = (1..n)
        .filter(|l| l % 2 == (n - 1) % 2)
        .map(|l| case.pairing(&case.x(l).add(&case.x(n))).one_plus())
        .collect();
    if case.is_sp() {
        den_args.push(case.pairing(&case.x(n)).one_plus());
    }
    num.div(&zeta_product(&den_args)?)
}

/// `m(s) = a_H(s) / d_H(s)`, checked against [`m_product`].
pub fn m_scalar(case: &DoublingCase) -> Result<RatFun> {
    let ratio = a_h(case)?.div(&d_h(case)?)?;
    let product = m_product(case)?;
    if ratio != product {
        return Err(Error::Consistency(format!("m(s) for {} n = {}: ratio and product differ", case.kind.name(), case.n)));
    }
    Ok(ratio)
}

/// `eta(s)` as the product of `gamma` at the `a_H` arguments.
pub fn eta_gamma_product(case: &DoublingCase) -> Result<RatFun> {
    case.require_trivial_char()?;
    gamma_product(&a_h_arguments(case))
}

/// `eta(s) = d_H(-s) / a_H(s)`, checked against [`eta_gamma_product`].
pub fn eta_factor(case: &DoublingCase) -> Result<RatFun> {
    let ratio = d_h(case)?.negate_s().div(&a_h(case)?)?;
    let product = eta_gamma_product(case)?;
    if ratio != product {
        return Err(Error::Consistency(format!("eta(s) for {} n = {}: ratio and product differ", case.kind.name(), case.n)));
    }
    Ok(ratio)
}

/// `m(s) eta(s) d_H(s) / d_H(-s)` from the product forms; equal to 1.
pub fn normalization_product(case: &DoublingCase) -> Result<RatFun> {
    let d = d_h(case)?;
    m_product(case)?.mul(&eta_gamma_product(case)?).mul(&d).div(&d.negate_s())
}

/// Eigenvalues of the Satake parameter in the standard representation of the dual group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SatakeParamStd {
    pub eigenvalues: Vec<CoefRing>,
}

impl SatakeParamStd {
    /// Eigenvalues `x^mu` over the standard weights of `datum`, at `x_i = values[i]`.
    pub fn from_datum(datum: &RootDatum, values: &[CoefRing]) -> Result<Self> {
        if values.len() != datum.dim || values.iter().any(|v| !v.is_unit()) {
            return Err(Error::Invalid(format!("need {} unit Satake coordinates", datum.dim)));
        }
        let rep = RepTable::standard(datum);
        let eigenvalues = rep
            .weight_basis()
            .into_iter()
            .map(|w| crate::reps::CharacterPoly::monomial(w).evaluate(values))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Invalid("non-integral standard weight".into()))?;
        Ok(Self { eigenvalues })
    }

    pub fn contragredient(&self) -> Self {
        Self { eigenvalues: self.eigenvalues.iter().map(|e| e.unit_inverse().expect("unit")).collect() }
    }

    /// `L(s, pi) = det(1 - sigma q^(-s))^(-1)`.
    pub fn l_function(&self) -> Result<RatFun> {
        let den = self
            .eigenvalues
            .iter()
            .fold(ZPoly::one(), |acc, e| acc.mul(&ZPoly::one().sub(&ZPoly::monomial(e.clone(), 1))));
        if den.is_zero() {
            return Err(Error::Pole("L(s, pi)".into()));
        }
        RatFun::new(ZPoly::one(), den)
    }
}

/// The unramified `gamma(s, pi)` and the doubling factor `Gamma(s - 1/2, pi, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnramifiedGamma {
    pub gamma: RatFun,
    /// `Gamma(s - 1/2, pi, 1) = gamma(s, pi) / eta(s - 1/2)`.
    pub doubling_gamma: RatFun,
}

/// `gamma(s, pi) = L(1 - s, pi~) / L(s, pi)`.
pub fn standard_gamma(params: &SatakeParamStd) -> Result<RatFun> {
    let l = params.l_function()?;
    let l_dual = params.contragredient().l_function()?;
    l_dual.negate_s().shift_s(-2).div(&l)
}

/// `gamma(s, pi)` together with `Gamma(s - 1/2, pi, 1)`, checked against the zeta-integral relation
/// `m(s) L(1/2 - s, pi~) / d_H(-s) = Gamma(s, pi, 1) L(s + 1/2, pi) / d_H(s)`.
pub fn unramified_gamma_std(params: &SatakeParamStd, case: &DoublingCase) -> Result<UnramifiedGamma> {
    let gamma = standard_gamma(params)?;
    let eta = eta_factor(case)?;
    let doubling_gamma = gamma.div(&eta.shift_s(-1))?;
    let d = d_h(case)?;
    let l_half = params.l_function()?.shift_s(1);
    let l_dual_half = params.contragredient().l_function()?.negate_s().shift_s(-1);
    let from_zeta = m_scalar(case)?.mul(&l_dual_half).mul(&d).div(&d.negate_s())?.div(&l_half)?;
    if from_zeta.shift_s(-1) != doubling_gamma {
        return Err(Error::Consistency("Gamma(s, pi, 1) disagrees with the zeta-integral relation".into()));
    }
    Ok(UnramifiedGamma { gamma, doubling_gamma })
}

/// Scalar form of the doubling basic function and its Fourier fixed point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedPointReport {
    /// `d_H(s - 1/2)`, the coefficient of the normalized spherical section.
    pub basic_coefficient: RatFun,
    /// `eta(s - 1/2) m(s - 1/2) d_H(s - 1/2)`.
    pub lhs: RatFun,
    /// `d_H(1/2 - s)`.
    pub rhs: RatFun,
    /// `dbar_H(s - 1/2)` with `dbar_H(t) = d_H(-t)`.
    pub opposite: RatFun,
    pub fixed_point: bool,
    pub duality: bool,
}

/// The basic function `d_H(s - 1/2) f^0_(s - 1/2)` is fixed by the normalized Fourier transform.
pub fn doubling_basic_and_fixedpoint(case: &DoublingCase) -> Result<FixedPointReport> {
    let d = d_h(case)?;
    let basic_coefficient = d.shift_s(-1);
    let lhs = eta_factor(case)?.shift_s(-1).mul(&m_scalar(case)?.shift_s(-1)).mul(&basic_coefficient);
    let rhs = d.negate_s().shift_s(-1);
    let dbar = d.negate_s();
    let opposite = dbar.shift_s(-1);
    let fixed_point = lhs == rhs;
    let duality = opposite == rhs && dbar.negate_s() == d;
    if !fixed_point {
        return Err(Error::Consistency(format!("fixed point fails for {} n = {}", case.kind.name(), case.n)));
    }
    Ok(FixedPointReport { basic_coefficient, lhs, rhs, opposite, fixed_point, duality })
}
