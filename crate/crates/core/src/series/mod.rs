//! Commutative polynomials in named coordinate slots, with Jackson calculus,
//! dilations and series conjugation.

mod cpoly;
mod index;
mod parse;
pub mod random;

pub use cpoly::CPoly;
pub use index::{Axis, Exps, Slot, Triple, NSLOTS, NVARS};
pub use parse::{parse_cpoly, parse_scalar, ParseError};

#[cfg(test)]
mod tests;
