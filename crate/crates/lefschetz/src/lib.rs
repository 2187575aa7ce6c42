//! Monodromy factorizations of hyperelliptic Lefschetz fibrations.

pub mod alphabet;
pub mod chart;
pub mod corpus;
pub mod derivation;
pub mod error;
pub mod hurwitz;
pub mod io;
pub mod mcg;
pub mod relators;
pub mod symplectic;

pub use alphabet::{AlphabetKind, Genus};
pub use error::LefschetzError;
