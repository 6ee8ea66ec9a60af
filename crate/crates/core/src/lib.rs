//! Pfaffian ideals of symmetric ladders: ladder specs and their
//! normalization, closed multiplicity formulas, a biliaison recursion for
//! h-vectors, and an exact Groebner-basis oracle that checks both.

pub mod error;
pub mod invariants;
pub mod ladder;
pub mod oracle;

pub use error::{Error, Result};
