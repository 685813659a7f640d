//! Highest-weight lines of the principal nilpotent on `u_p`, the polynomials `d_P`
//! and `d_Pbar`, the gamma-product normalizer, the delta basis with its lattice
//! action, the basic vector `xi0_P`, the Fourier transform and the shift checks.

mod appendix;
mod delta;
mod dpoly;
mod nilpotent;

pub use appendix::{appendix_shift_check, AppendixReport};
pub use delta::{
    fourier, fourier_check, fourier_on_basis, fourier_with, lattice_action, mellin_check, xi0_series, xi0_series_pbar,
    DeltaSeries, FourierReport, MellinReport, OpSeries, Side,
};
pub use dpoly::{
    doubling_case, d_p_polynomial, d_pbar_polynomial, gamma_product_normalizer, gamma_product_with, dp_identities, DpCheck,
    NormalizerSign,
};
pub use nilpotent::{highest_weight_vectors, lowest_weight_vectors, BkCase, HwvSet, NilpotentAction, Summand, WeightLine};
