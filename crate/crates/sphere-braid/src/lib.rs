//! Braid groups of the 2-sphere: rewriting into pure generators, complete
//! normal forms for pure sphere braids, and detection of the Dirac braid.

pub mod artin;
pub mod braid;
pub mod comb;
pub mod dirac;
pub mod error;
pub mod pure;
pub mod word;

pub use braid::{BraidWord, Permutation};
pub use comb::{comb, CombedForm};
pub use dirac::{dirac_class, DiracClass};
pub use error::BraidError;
pub use pure::{to_pure_generators, PureLetter, PureWord};
