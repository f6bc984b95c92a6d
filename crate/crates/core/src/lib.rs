//! Explicit witnesses that an integer is the index of a klt Calabi-Yau pair
//! with standard coefficients, and an independent checker for them.
//!
//! The witnesses are trees of log pairs on weighted projective spaces,
//! elliptic factors and products. Every geometric claim a leaf makes (zero
//! degree of `K_X + B`, its index, kltness through an snc reduction on the
//! affine cone) is re-derived in exact rational arithmetic.

pub mod certify;
pub mod error;
pub mod linalg;
pub mod numtheory;
pub mod poly;
pub mod selftest;
pub mod snc;
pub mod wps;

pub use error::{Error, Result};

/// Arbitrary precision rational number.
pub type Rational = num_rational::BigRational;
