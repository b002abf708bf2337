//! Exact-arithmetic construction of simultaneous rational approximations to
//! polylogarithm values.
//!
//! Three families of rational functions `R_n(t)` are decomposed into partial
//! fractions over `Q`; summing `z^ν R_n(ν)` (and its derivatives) over
//! `ν ≥ 1` turns each decomposition into a linear form `a_n Li_s(z) - b_n`
//! with exact rational coefficients. The coefficient sequences satisfy
//! third-order polynomial recurrences, encoded in [`recur`], and the
//! arbitrary-precision machinery in [`numerics`] measures the remainders.
//!
//! - [`arith`]: rationals, `D_n`, the prime product `Φ̃_n`, binomials and
//!   integer-valued polynomial bases.
//! - [`ratdecomp`]: the rational functions and their partial fractions.
//! - [`linforms`]: linear-form coefficients `a_n, b_n, b̃_n, b̃̃_n`.
//! - [`recur`]: recurrences, sequence extension and characteristic roots.
//! - [`numerics`]: multiprecision floats, polylogarithms, constants,
//!   remainders, direct series and the double integral.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod arith;
mod error;
pub mod linforms;
pub mod numerics;
pub mod ratdecomp;
pub mod recur;

pub use arith::{BigRat, RatPoly};
pub use error::Error;

pub use error::Result;
pub use linforms::LinearFormCoeffs;
pub use numerics::BigFloat;
pub use ratdecomp::{ConstructionId, PartialFraction};
pub use recur::{Builtin, Recurrence};

