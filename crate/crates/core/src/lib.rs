//! Exact determinant identities for n-step Fibonacci numbers.
//!
//! The crate builds the banded matrices `P` and `Q`, column extensions of a
//! square matrix and their signed minors, and checks the Cassini,
//! d'Ocagne, Vajda and Catalan determinants for n-step Fibonacci numbers
//! with exact integer arithmetic.

pub mod cli;
pub mod construction;
pub mod error;
pub mod identities;
pub mod linalg;
pub mod report;
pub mod seq;
pub mod sign;
pub mod sweep;

pub use error::{Error, Result};
pub use linalg::IntMatrix;
pub use seq::{NStepSequence, SeqConvention};
pub use sign::Sign;
