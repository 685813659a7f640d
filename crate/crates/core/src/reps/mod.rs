//! Highest-weight modules of the dual groups: weight tables, symmetric powers,
//! standard L-factors and the combinatorics of basic functions.

mod basic;
mod character;
mod sym;
mod table;

pub use basic::{basic_function, basic_shift_bookkeeping, eta_pairing, BasicFunction, BasicLayer};
pub use character::CharacterPoly;
pub use sym::{basic_constant_term, partition_count, standard_lfactor, sym_power_trace, LFactor};
pub use table::{weight_multiplicities, weyl_dimension, RepTable, WeightTableJson};
