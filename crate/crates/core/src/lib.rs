//! Exact crossing counts for drawings of the augmented cube AQ_n.
//!
//! The crate builds AQ_n, lifts vertex sets along the cube's recursive
//! structure, realizes the inductive arc-diagram drawing and the black
//! sub-drawing, counts their crossings by brute force, and evaluates the
//! closed forms for every crossing component with exact rationals.

pub mod aqcube;
pub mod arcdiagram;
pub mod blacklayout;
pub mod error;
pub mod formulas;
pub mod partition;
pub mod render;
pub mod report;
pub mod scalar;
pub mod seqtables;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::ExactScalar;

/// Arbitrary-precision exact rational.
pub type Exact = num_rational::BigRational;

/// Fixed-width exact rational, usable while `4^n` fits in `i128`.
pub type Exact128 = num_rational::Ratio<i128>;
