//! Mathematical constants by fast rational series, summed in fixed point.

use core::str::FromStr;

use alloc::string::ToString;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::bigfloat::{bits_for_digits, BigFloat};
use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constant {
    Log2,
    Pi,
    Zeta2,
    Zeta3,
}

impl FromStr for Constant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "log2" => Ok(Constant::Log2),
            "pi" => Ok(Constant::Pi),
            "zeta2" => Ok(Constant::Zeta2),
            "zeta3" => Ok(Constant::Zeta3),
            _ => Err(Error::Unknown(s.to_string())),
        }
    }
}

/// `name` to `digits` correct decimal digits.
pub fn constant(name: Constant, digits: u32) -> BigFloat {
    constant_bits(name, bits_for_digits(digits.max(1)))
}

pub fn constant_bits(name: Constant, prec: u32) -> BigFloat {
    match name {
        Constant::Log2 => log2(prec),
        Constant::Pi => pi(prec),
        Constant::Zeta2 => {
            let p = pi(prec + 8);
            (&(&p * &p) / &BigFloat::from_i64(6, prec + 8)).with_prec(prec)
        }
        Constant::Zeta3 => zeta3(prec),
    }
}

/// Working precision for a fixed-point series with about `terms` terms.
fn guard(prec: u32) -> u32 {
    prec + 32
}

/// `Σ_{k≥0} (-1)^k / ((2k+1) x^{2k+1})` scaled by `2^bits`.
fn atan_inv_fixed(x: u64, bits: u32, alternating: bool) -> BigInt {
    let x2 = BigInt::from(x) * BigInt::from(x);
    let mut power = (BigInt::one() << bits as usize) / BigInt::from(x);
    let mut acc = BigInt::zero();
    let mut k: u64 = 0;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * k + 1);
        if alternating && k % 2 == 1 {
            acc -= term;
        } else {
            acc += term;
        }
        power /= &x2;
        k += 1;
    }
    acc
}

/// Machin: `π = 16 atan(1/5) - 4 atan(1/239)`.
fn pi(prec: u32) -> BigFloat {
    let w = guard(prec);
    let v = atan_inv_fixed(5, w, true) * 16 - atan_inv_fixed(239, w, true) * 4;
    BigFloat::from_parts(v, -(w as i64), prec)
}

/// `log 2 = 2 atanh(1/3)`.
fn log2(prec: u32) -> BigFloat {
    let w = guard(prec);
    let v = atan_inv_fixed(3, w, false) * 2;
    BigFloat::from_parts(v, -(w as i64), prec)
}

/// `ζ(3) = (5/2) Σ_{k≥1} (-1)^{k-1} / (k³ binom(2k, k))`.
fn zeta3(prec: u32) -> BigFloat {
    let w = guard(prec);
    let one = BigInt::one() << w as usize;
    let mut central = BigInt::one();
    let mut acc = BigInt::zero();
    let mut k: u64 = 1;
    loop {
        // binom(2k, k) = binom(2k-2, k-1) · 2(2k-1)/k.
        central = central * BigInt::from(2 * (2 * k - 1)) / BigInt::from(k);
        let den = &central * BigInt::from(k).pow(3);
        let term = &one / den;
        if term.is_zero() {
            break;
        }
        if k % 2 == 1 {
            acc += term;
        } else {
            acc -= term;
        }
        k += 1;
    }
    BigFloat::from_parts(acc * 5, -(w as i64) - 1, prec)
}
