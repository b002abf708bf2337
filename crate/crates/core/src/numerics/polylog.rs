use alloc::format;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::bigfloat::{bits_for_digits, BigFloat};
use super::constants::{constant_bits, Constant};
use crate::arith::{rat, BigRat};
use crate::error::{Error, Result};

/// `Li_s(z) = Σ_{k≥1} z^k / k^s` for `s ∈ {1, 2, 3}` and rational `|z| ≤ 1`.
pub fn polylog(s: u32, z: &BigRat, digits: u32) -> Result<BigFloat> {
    polylog_bits(s, z, bits_for_digits(digits.max(1)))
}

pub fn polylog_bits(s: u32, z: &BigRat, prec: u32) -> Result<BigFloat> {
    if !(1..=3).contains(&s) {
        return Err(Error::Domain(format!("Li_{s} is not provided")));
    }
    if z.abs() > BigRat::one() {
        return Err(Error::Domain(format!("|z| > 1 for z = {z}")));
    }
    if z.is_zero() {
        return Ok(BigFloat::zero(prec));
    }
    let wp = prec + 8;
    if z.is_one() {
        return match s {
            1 => Err(Error::Divergent("Li_1(1)".into())),
            2 => Ok(constant_bits(Constant::Zeta2, prec)),
            _ => Ok(constant_bits(Constant::Zeta3, prec)),
        };
    }
    if z == &rat(-1) {
        // Li_s(-1) = -(1 - 2^{1-s}) ζ(s), with Li_1(-1) = -log 2.
        let v = match s {
            1 => -constant_bits(Constant::Log2, wp),
            2 => -(constant_bits(Constant::Zeta2, wp) / BigFloat::from_i64(2, wp)),
            _ => -(constant_bits(Constant::Zeta3, wp).mul_rat(&BigRat::new(3.into(), 4.into()))),
        };
        return Ok(v.with_prec(prec));
    }
    Ok(series(s, z, prec))
}

/// Direct summation in fixed point. The tail after the last term is bounded
/// by `|z|^{k+1} / (1 - |z|)`, which stops the loop below one unit.
fn series(s: u32, z: &BigRat, prec: u32) -> BigFloat {
    let num = z.numer().clone();
    let den = z.denom().clone();
    let num_abs = num.abs();
    let margin = &den - &num_abs;
    // Guard bits cover one truncation per term over about
    // prec / log2(1/|z|) terms.
    let ratio = z.abs().to_f64().unwrap_or(0.5);
    let terms = prec as f64 / -libm::log2(ratio);
    let w = prec + 16 + libm::ceil(libm::log2(terms + 2.0)) as u32;
    let mut power = BigInt::one() << w as usize;
    let mut acc = BigInt::zero();
    let mut k: u64 = 1;
    loop {
        power = power * &num / &den;
        if power.is_zero() {
            break;
        }
        let ks = BigInt::from(k).pow(s);
        acc += &power / ks;
        // Tail ≤ |power|·|z|/(1-|z|) < 1 ulp.
        if &power.abs() * &num_abs < margin {
            break;
        }
        k += 1;
    }
    BigFloat::from_parts(acc, -(w as i64), prec)
}
