//! Quantum Tanner codes on quadripartite left-right Cayley complexes, their
//! mismatch decoder, and the lifted product reduction.

pub mod error;
pub mod gf2;
pub mod local_codes;

pub use error::{CodeError, ComplexError, GroupError, LiftError, ParseError, QTannerError};
pub use gf2::{BitMatrix, BitVector, SparseBitMatrix};
pub mod complex;
pub mod group;
pub mod qtanner;
pub mod decoder;
pub mod lifted;
