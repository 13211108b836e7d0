//! Exact computation of central Delannoy and Schröder numbers, their
//! polynomial analogues, and mechanical verification of identities,
//! congruences and telescoping certificates involving them.
//!
//! All arithmetic is exact: [`num_bigint::BigInt`] for sequence values,
//! [`poly::Rational`] for certificate coefficients, dense [`poly::Poly`]
//! for `Z[x]` and `Q[x]`.

pub mod cli;
pub mod error;
pub mod families;
pub mod modular;
pub mod poly;
pub mod sequences;
pub mod verify;

pub use error::{Error, Result};
pub use poly::{IntPoly, RatPoly, Rational};
pub use sequences::{SequenceKind, SequenceTable};
pub use verify::{Counterexample, Status, VerificationReport};
