//! Exact integer and rational arithmetic.

mod numtheory;
pub(crate) mod poly;
mod rational;

pub use numtheory::{binom, is_prime, lcm_upto, phi_tilde, primes_upto, Sieve};
pub use poly::{BasisAnchor, RatPoly};
pub use rational::{
    borrow_int, denominator_of, int, is_integer, parse_rational, pow_rat, rat, ratio, BigRat,
};
