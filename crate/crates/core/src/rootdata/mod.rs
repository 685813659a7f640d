//! Classical root data in coordinates, Weyl group actions and integer lattice algebra.

mod datum;
mod lattice;
mod weight;

pub use datum::{build_root_datum, CartanType, RootDatum, RootDatumExport};
pub use lattice::{smith_normal_form, LatticeMap, SmithForm};
#[allow(unused_imports)]
pub(crate) use weight::half_str;
pub use weight::Weight;

use crate::error::{Error, Result};
use crate::qfield::AffineExponent;

/// Doubled principal grading `2 s_j = n + 1 - 2j` on `x_j`, `j` counted from 1.
pub fn principal_grading2(n: usize, j: usize) -> i32 {
    n as i32 + 1 - 2 * j as i32
}

/// The pairing `(chi_s, coroot)` with `chi_s = sum_i (s - s_i) x_i` and `s_i = (n+1)/2 - i`.
pub fn chi_s_pairing(n: usize, coroot: &Weight) -> Result<AffineExponent> {
    if coroot.dim() != n {
        return Err(Error::Invalid(format!("coroot {coroot} is not in rank {n}")));
    }
    let c = coroot
        .int_coords()
        .ok_or_else(|| Error::Invalid(format!("coroot {coroot} must have integer coordinates")))?;
    let a = c.iter().sum();
    let b2 = -c.iter().enumerate().map(|(i, ci)| ci * principal_grading2(n, i + 1)).sum::<i32>();
    Ok(AffineExponent::new(a, b2))
}
