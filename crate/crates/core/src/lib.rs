//! Exact symbolic calculus for unramified local data of classical groups.
//!
//! Everything lives over `Q(t)` with `t = q^(1/2)` and `z = q^(-s)`:
//!
//! - [`qfield`]: coefficients, rational functions in `z`, local zeta and gamma factors.
//! - [`rootdata`]: classical root data, Weyl group actions, Smith normal form.
//! - [`reps`]: weight multiplicities, symmetric powers, standard L-factors, basic functions.
//! - [`vinberg`]: unit groups of Vinberg monoids from lattice data.
//! - [`doubling`]: normalizing factors of the doubling method.
//! - [`bk`]: highest weight lines, the polynomials `d_P`, the delta basis and the Fourier transform.
//! - [`verify`]: the identity suites behind the command-line `verify` subcommand.

pub mod bk;
pub mod doubling;
pub mod error;
pub mod qfield;
pub mod reps;
pub mod rootdata;
pub mod verify;
pub mod vinberg;

pub use error::{Error, Result};
