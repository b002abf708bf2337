use alloc::string::{String, ToString};
use alloc::format;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::BigRat;

const LOG2_10: f64 = core::f64::consts::LOG2_10;

/// Bits needed to carry `digits` decimal digits, plus a few guard bits.
pub fn bits_for_digits(digits: u32) -> u32 {
    libm::ceil(digits as f64 * LOG2_10) as u32 + 8
}

/// Binary floating-point number `mantissa · 2^exponent`.
///
/// The mantissa is kept to at most `prec` bits; every operation truncates
/// toward negative infinity, so a single operation is off by at most one
/// unit in the last place. Binary operations run at the larger of the two
/// operand precisions.
#[derive(Clone, Debug)]
pub struct BigFloat {
    mant: BigInt,
    exp: i64,
    prec: u32,
}

impl BigFloat {
    pub fn zero(prec: u32) -> Self {
        BigFloat {
            mant: BigInt::zero(),
            exp: 0,
            prec,
        }
    }

    pub fn from_parts(mant: BigInt, exp: i64, prec: u32) -> Self {
        let mut x = BigFloat { mant, exp, prec };
        x.normalize();
        x
    }

    pub fn from_int(n: &BigInt, prec: u32) -> Self {
        Self::from_parts(n.clone(), 0, prec)
    }

    pub fn from_i64(n: i64, prec: u32) -> Self {
        Self::from_parts(BigInt::from(n), 0, prec)
    }

    pub fn from_rat(q: &BigRat, prec: u32) -> Self {
        if q.is_zero() {
            return Self::zero(prec);
        }
        let (num, den) = (q.numer(), q.denom());
        let shift = prec as i64 + den.bits() as i64 - num.bits() as i64 + 2;
        let shift = shift.max(0);
        let mant = (num << shift as usize) / den;
        Self::from_parts(mant, -shift, prec)
    }

    pub fn from_f64(x: f64, prec: u32) -> Self {
        if x == 0.0 || !x.is_finite() {
            return Self::zero(prec);
        }
        let (m, e) = libm::frexp(x);
        let mant = libm::ldexp(m, 53) as i64;
        Self::from_parts(BigInt::from(mant), e as i64 - 53, prec)
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn with_prec(&self, prec: u32) -> Self {
        Self::from_parts(self.mant.clone(), self.exp, prec)
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn abs(&self) -> Self {
        BigFloat {
            mant: self.mant.abs(),
            exp: self.exp,
            prec: self.prec,
        }
    }

    fn normalize(&mut self) {
        let bits = self.mant.bits();
        if bits > self.prec as u64 {
            let shift = bits - self.prec as u64;
            self.mant >>= shift as usize;
            self.exp += shift as i64;
        }
        if self.mant.is_zero() {
            self.exp = 0;
        }
    }

    /// Position of the leading bit: `|x| ∈ [2^(m-1), 2^m)`. Zero reports a
    /// very negative magnitude.
    pub fn magnitude(&self) -> i64 {
        if self.mant.is_zero() {
            return i64::MIN / 4;
        }
        self.mant.bits() as i64 + self.exp
    }

    pub fn sqrt(&self) -> Self {
        assert!(!self.is_negative(), "square root of a negative number");
        if self.is_zero() {
            return self.clone();
        }
        let want = 2 * self.prec as i64 + 4;
        let mut shift = (want - self.mant.bits() as i64).max(0);
        if (self.exp - shift) % 2 != 0 {
            shift += 1;
        }
        let m = (&self.mant << shift as usize).sqrt();
        Self::from_parts(m, (self.exp - shift) / 2, self.prec)
    }

    pub fn mul_rat(&self, q: &BigRat) -> Self {
        self * &Self::from_rat(q, self.prec)
    }

    /// `ln|x|` in double precision, valid far outside the `f64` range.
    pub fn ln_abs(&self) -> f64 {
        self.log2_abs() * core::f64::consts::LN_2
    }

    pub fn log10_abs(&self) -> f64 {
        self.log2_abs() / LOG2_10
    }

    pub fn log2_abs(&self) -> f64 {
        if self.is_zero() {
            return f64::NEG_INFINITY;
        }
        let bits = self.mant.bits() as i64;
        let drop = (bits - 60).max(0);
        let top = (self.mant.abs() >> drop as usize).to_f64().unwrap_or(f64::MAX);
        libm::log2(top) + (drop + self.exp) as f64
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.mant.bits() as i64;
        let drop = (bits - 60).max(0);
        let top = (&self.mant >> drop as usize).to_f64().unwrap_or(f64::MAX);
        let e = drop + self.exp;
        libm::ldexp(top, e.clamp(-1_100, 1_100) as i32)
    }

    /// `round(|x| · 10^k)` as an integer.
    fn scaled_decimal(&self, k: i64) -> BigInt {
        let mut num = self.mant.abs();
        let mut den = BigInt::one();
        let ten = BigInt::from(10);
        if k >= 0 {
            num *= ten.pow(k as u32);
        } else {
            den *= ten.pow((-k) as u32);
        }
        if self.exp >= 0 {
            num <<= self.exp as usize;
        } else {
            den <<= (-self.exp) as usize;
        }
        (num * 2 + &den) / (den * 2)
    }

    /// Scientific notation with `digits` significant digits, e.g. `-3.42e-2`.
    pub fn to_sci_string(&self, digits: u32) -> String {
        let digits = digits.max(1);
        if self.is_zero() {
            return String::from("0");
        }
        let mut e10 = libm::floor(self.log10_abs()) as i64;
        let lower = BigInt::from(10).pow(digits - 1);
        let upper = BigInt::from(10).pow(digits);
        let mut m = self.scaled_decimal(digits as i64 - 1 - e10);
        if m >= upper {
            e10 += 1;
            m = self.scaled_decimal(digits as i64 - 1 - e10);
        } else if m < lower {
            e10 -= 1;
            m = self.scaled_decimal(digits as i64 - 1 - e10);
        }
        if m >= upper {
            // Rounded up to the next power of ten.
            e10 += 1;
            m = lower.clone();
        }
        let s = m.to_string();
        let sign = if self.is_negative() { "-" } else { "" };
        let (head, tail) = s.split_at(1);
        if tail.is_empty() {
            format!("{sign}{head}e{e10}")
        } else {
            format!("{sign}{head}.{tail}e{e10}")
        }
    }

    /// Fixed-point notation with `frac_digits` digits after the point.
    pub fn to_fixed_string(&self, frac_digits: u32) -> String {
        let m = self.scaled_decimal(frac_digits as i64).to_string();
        let sign = if self.is_negative() && m.chars().any(|c| c != '0') {
            "-"
        } else {
            ""
        };
        let fd = frac_digits as usize;
        let padded = if m.len() <= fd {
            format!("{}{}", "0".repeat(fd + 1 - m.len()), m)
        } else {
            m
        };
        let (int_part, frac) = padded.split_at(padded.len() - fd);
        if fd == 0 {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{frac}")
        }
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f
            .precision()
            .map(|p| p as u32)
            .unwrap_or_else(|| (self.prec as f64 / LOG2_10) as u32);
        f.write_str(&self.to_sci_string(digits.max(1)))
    }
}

fn aligned_sum(a: &BigFloat, b: &BigFloat, negate_b: bool) -> BigFloat {
    let prec = a.prec.max(b.prec);
    let bm = if negate_b { -&b.mant } else { b.mant.clone() };
    if a.is_zero() {
        return BigFloat::from_parts(bm, b.exp, prec);
    }
    if b.is_zero() {
        return BigFloat::from_parts(a.mant.clone(), a.exp, prec);
    }
    // An addend entirely below the result's last place only perturbs the
    // truncation; keep a sticky trace of it two bits under the precision.
    let gap = prec as i64 + 4;
    if a.magnitude() - b.magnitude() > gap {
        let sticky = if bm.is_negative() { -1 } else { 1 };
        let low = a.magnitude() - gap;
        let am = &a.mant << (a.exp - low) as usize;
        return BigFloat::from_parts(am + sticky, low, prec);
    }
    if b.magnitude() - a.magnitude() > gap {
        let sticky = if a.mant.is_negative() { -1 } else { 1 };
        let low = b.magnitude() - gap;
        let bmm = &bm << (b.exp - low) as usize;
        return BigFloat::from_parts(bmm + sticky, low, prec);
    }
    let exp = a.exp.min(b.exp);
    let am = &a.mant << (a.exp - exp) as usize;
    let bs = bm << (b.exp - exp) as usize;
    BigFloat::from_parts(am + bs, exp, prec)
}

impl Add for &BigFloat {
    type Output = BigFloat;
    fn add(self, rhs: &BigFloat) -> BigFloat {
        aligned_sum(self, rhs, false)
    }
}

impl Sub for &BigFloat {
    type Output = BigFloat;
    fn sub(self, rhs: &BigFloat) -> BigFloat {
        aligned_sum(self, rhs, true)
    }
}

impl Mul for &BigFloat {
    type Output = BigFloat;
    fn mul(self, rhs: &BigFloat) -> BigFloat {
        BigFloat::from_parts(
            &self.mant * &rhs.mant,
            self.exp + rhs.exp,
            self.prec.max(rhs.prec),
        )
    }
}

impl Div for &BigFloat {
    type Output = BigFloat;
    fn div(self, rhs: &BigFloat) -> BigFloat {
        assert!(!rhs.is_zero(), "division by zero");
        let prec = self.prec.max(rhs.prec);
        let shift = (prec as i64 + rhs.mant.bits() as i64 - self.mant.bits() as i64 + 2).max(0);
        let q = (&self.mant << shift as usize) / &rhs.mant;
        BigFloat::from_parts(q, self.exp - shift - rhs.exp, prec)
    }
}

impl Neg for &BigFloat {
    type Output = BigFloat;
    fn neg(self) -> BigFloat {
        BigFloat {
            mant: -&self.mant,
            exp: self.exp,
            prec: self.prec,
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr<BigFloat> for BigFloat {
            type Output = BigFloat;
            fn $f(self, rhs: BigFloat) -> BigFloat { (&self).$f(&rhs) }
        }
        impl $tr<&BigFloat> for BigFloat {
            type Output = BigFloat;
            fn $f(self, rhs: &BigFloat) -> BigFloat { (&self).$f(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for BigFloat {
    type Output = BigFloat;
    fn neg(self) -> BigFloat {
        -&self
    }
}

impl PartialEq for BigFloat {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_value(other) == Ordering::Equal
    }
}

impl PartialOrd for BigFloat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_value(other))
    }
}

impl BigFloat {
    /// Exact comparison of the represented values.
    pub fn cmp_value(&self, other: &Self) -> Ordering {
        let exp = self.exp.min(other.exp);
        let a = &self.mant << (self.exp - exp) as usize;
        let b = &other.mant << (other.exp - exp) as usize;
        a.cmp(&b)
    }

    pub fn sign(&self) -> Sign {
        self.mant.sign()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;

    #[test]
    fn rational_round_trip_to_f64() {
        let x = BigFloat::from_rat(&ratio(-7, 3), 200);
        assert!((x.to_f64() + 7.0 / 3.0).abs() < 1e-15);
        assert_eq!(BigFloat::from_f64(0.375, 64).to_f64(), 0.375);
    }

    #[test]
    fn arithmetic_identities() {
        let p = 300;
        let a = BigFloat::from_rat(&ratio(1, 7), p);
        let b = BigFloat::from_rat(&ratio(2, 7), p);
        let diff = &(&a + &a) - &b;
        assert!(diff.is_zero() || diff.magnitude() < -(p as i64) + 4);
        let q = &b / &a;
        assert!((&q - &BigFloat::from_i64(2, p)).abs().magnitude() < -(p as i64) + 6);
        let s = BigFloat::from_i64(2, p).sqrt();
        let sq = &s * &s;
        assert!((&sq - &BigFloat::from_i64(2, p)).abs().magnitude() < -(p as i64) + 6);
    }

    #[test]
    fn tiny_addends_respect_truncation() {
        let big = BigFloat::from_i64(1, 64);
        let tiny = BigFloat::from_parts(BigInt::from(1), -500, 64);
        assert!(&big - &tiny < big);
        assert!(&big + &tiny >= big);
        assert!(&tiny - &big >= -&big);
    }

    #[test]
    fn decimal_formatting() {
        let p = bits_for_digits(30);
        let x = BigFloat::from_rat(&ratio(1, 3), p);
        assert_eq!(x.to_sci_string(5), "3.3333e-1");
        assert_eq!(x.to_fixed_string(4), "0.3333");
        let y = BigFloat::from_rat(&ratio(-2, 3), p);
        assert_eq!(y.to_sci_string(3), "-6.67e-1");
        assert_eq!(BigFloat::from_i64(999_999, p).to_sci_string(3), "1.00e6");
        assert_eq!(BigFloat::from_i64(12, p).to_fixed_string(2), "12.00");
        assert_eq!(BigFloat::from_rat(&ratio(-1, 1000), p).to_fixed_string(2), "0.00");
        assert_eq!(BigFloat::zero(p).to_sci_string(4), "0");
    }

    #[test]
    fn log_of_huge_values() {
        let x = BigFloat::from_int(&BigInt::from(10).pow(400), 100);
        assert!((x.log10_abs() - 400.0).abs() < 1e-9);
        let y = &BigFloat::from_i64(1, 100) / &x;
        assert!((y.log10_abs() + 400.0).abs() < 1e-9);
    }
}
