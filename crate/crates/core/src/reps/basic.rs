use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::character::CharacterPoly;
use super::sym::sym_power_trace;
use super::table::RepTable;
use crate::qfield::CoefRing;
use crate::rootdata::{RootDatum, Weight};

/// One graded layer of a basic function: `scale * tr Sym^d(rho)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasicLayer {
    pub degree: usize,
    pub scale: CoefRing,
    pub character: CharacterPoly,
}

/// Graded layers of the basic function `L^rho(s)`, truncated at a degree.
///
/// Layer `d` lives where `|c| = q^{-d}`, so `|c|^s` contributes `t^{-2 s d}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasicFunction {
    /// Doubled value of `s`.
    pub s2: i32,
    pub layers: Vec<BasicLayer>,
}

/// `t^{-s2 * d}` on layer `d`.
fn layer_scale(s2: i32, d: usize) -> CoefRing {
    CoefRing::t_pow(-s2 * d as i32)
}

/// Layers `0..=truncation` of `L^rho(s)` for the graded module.
pub fn basic_function(rep: &RepTable, s2: i32, truncation: usize) -> BasicFunction {
    let graded = if rep.highest_weight.grading == 1 { rep.clone() } else { rep.graded() };
    let layers = (0..=truncation)
        .map(|d| BasicLayer { degree: d, scale: layer_scale(s2, d), character: sym_power_trace(&graded, d) })
        .collect();
    BasicFunction { s2, layers }
}

/// `L^rho(s) -> L^rho(s + shift)`, i.e. multiplication by `|c|^shift` layer by layer.
pub fn basic_shift_bookkeeping(f: &BasicFunction, shift2: i32) -> BasicFunction {
    BasicFunction {
        s2: f.s2 + shift2,
        layers: f
            .layers
            .iter()
            .map(|l| BasicLayer { degree: l.degree, scale: &l.scale * &layer_scale(shift2, l.degree), character: l.character.clone() })
            .collect(),
    }
}

/// `<rho^vee, lambda>`, the pairing of the half-sum of positive coroots with a weight.
pub fn eta_pairing(datum: &RootDatum, lambda: &Weight) -> BigRational {
    let rho_check = datum.half_sum_positive_coroots();
    BigRational::new(BigInt::from(rho_check.dot4(lambda)), BigInt::from(4))
}
