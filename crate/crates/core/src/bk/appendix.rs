use num_rational::BigRational;
use serde::{Serialize, Serializer};

use crate::doubling::{DoublingCase, DoublingKind};
use crate::error::{Error, Result};
use crate::reps::{basic_function, basic_shift_bookkeeping, eta_pairing, RepTable};
use crate::rootdata::{build_root_datum, CartanType, Weight};
use crate::vinberg::CSign;

/// Exponent bookkeeping for `rho = id x std` of `(G_m x Sp(2m))^`, whose dual is `B_m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AppendixReport {
    pub m: usize,
    pub truncation: usize,
    pub c_sign: CSign,
    /// `<eta, lambda>` from the half-sum of positive roots of `C_m` against `e_1`.
    #[serde(serialize_with = "rational_str")]
    pub eta_from_roots: BigRational,
    /// The same pairing from the positive coroots of `B_m` against `x_1`.
    #[serde(serialize_with = "rational_str")]
    pub eta_from_coroots: BigRational,
    pub eta_pass: bool,
    /// `L(s + t) = |c|^t L(s)` layer by layer, for every tested `(s, t)`.
    pub shift_pass: bool,
    /// `L^std_P(1/2) = |c|^{m + 1/2} L^rho(-m)`.
    pub basic_vector_pass: bool,
    /// Exponent of `delta_P` in `|det|`, and in `|c|` under `c_sign`.
    pub delta_p_det_exponent: i64,
    pub delta_p_c_exponent: i64,
    /// Modulus exponent of the Siegel parabolic of `Sp(4m)` with Levi `GL_{2m}`.
    pub modulus_exponent: i64,
    pub modulus_pass: bool,
}

fn rational_str<S: Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

impl AppendixReport {
    pub fn pass(&self) -> bool {
        self.eta_pass && self.shift_pass && self.basic_vector_pass && self.modulus_pass
    }
}

pub fn appendix_shift_check(m: usize, truncation: usize, c_sign: CSign) -> Result<AppendixReport> {
    if m == 0 {
        return Err(Error::Invalid("rank must be positive".into()));
    }
    let c_m = build_root_datum(CartanType::C, m)?;
    let b_m = build_root_datum(CartanType::B, m)?;
    let rho = c_m.half_sum_positive();
    let e1 = Weight::x(m, 1);
    let eta_from_roots = BigRational::new(rho.dot4(&e1).into(), 4.into());
    let eta_from_coroots = eta_pairing(&b_m, &e1);
    let eta_pass = eta_from_roots == BigRational::from_integer((m as i64).into()) && eta_from_coroots == eta_from_roots;

    let rep = RepTable::standard(&b_m).graded();
    let mut shift_pass = true;
    for s2 in -2 * m as i32 - 1..=2 {
        let base = basic_function(&rep, s2, truncation);
        for t2 in -2..=2 * m as i32 + 1 {
            shift_pass &= basic_shift_bookkeeping(&base, t2) == basic_function(&rep, s2 + t2, truncation);
        }
    }
    let c_p = basic_function(&rep, -2 * m as i32, truncation);
    let basic_vector_pass = basic_function(&rep, 1, truncation) == basic_shift_bookkeeping(&c_p, 2 * m as i32 + 1);

    let delta_p_det_exponent = -(2 * m as i64 + 1);
    // |det| = |c|^{sign}
    let delta_p_c_exponent = c_sign.sign() * delta_p_det_exponent;
    let modulus_exponent = i64::from(DoublingCase::new(DoublingKind::Symplectic, 2 * m)?.modulus_exponent());
    Ok(AppendixReport {
        m,
        truncation,
        c_sign,
        eta_from_roots,
        eta_from_coroots,
        eta_pass,
        shift_pass,
        basic_vector_pass,
        delta_p_det_exponent,
        delta_p_c_exponent,
        modulus_exponent,
        modulus_pass: -delta_p_det_exponent == modulus_exponent,
    })
}
