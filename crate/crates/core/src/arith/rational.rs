use alloc::format;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Its `Display` form is `p/q`, or `p` when `q = 1`.
pub type BigRat = num_rational::BigRational;

pub fn rat(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> BigRat {
    BigRat::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(n: BigInt) -> BigRat {
    BigRat::from_integer(n)
}

pub fn borrow_int(n: &BigInt) -> BigRat {
    BigRat::from_integer(n.clone())
}

pub fn is_integer(q: &BigRat) -> bool {
    q.denom().is_one()
}

/// Lowest-terms denominator of `q`.
pub fn denominator_of(q: &BigRat) -> BigInt {
    q.denom().clone()
}

/// `q^e` for any integer exponent; `0^e` with `e < 0` is a domain error.
pub fn pow_rat(q: &BigRat, e: i64) -> Result<BigRat> {
    if e < 0 && q.is_zero() {
        return Err(Error::Domain("zero to a negative power".into()));
    }
    let base = if e < 0 { q.recip() } else { q.clone() };
    let mut acc = BigRat::one();
    let mut sq = base;
    let mut k = e.unsigned_abs();
    while k > 0 {
        if k & 1 == 1 {
            acc *= &sq;
        }
        k >>= 1;
        if k > 0 {
            sq = &sq * &sq;
        }
    }
    Ok(acc)
}

/// Parses `p`, `-p`, `p/q` or `-p/q` (no spaces, `q ≠ 0`).
pub fn parse_rational(s: &str) -> Result<BigRat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p, q),
        None => (s, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad numerator in `{s}`")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad denominator in `{s}`")))?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(BigRat::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn canonical_display() {
        assert_eq!(ratio(-305, 8).to_string(), "-305/8");
        assert_eq!(ratio(10, -4).to_string(), "-5/2");
        assert_eq!(ratio(6, 3).to_string(), "2");
        assert_eq!(rat(0).to_string(), "0");
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("-1").unwrap(), rat(-1));
        assert_eq!(parse_rational("2/4").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("-7/2").unwrap(), ratio(-7, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1/2/3").is_err());
    }

    #[test]
    fn negative_powers() {
        assert_eq!(pow_rat(&ratio(-1, 2), -3).unwrap(), rat(-8));
        assert_eq!(pow_rat(&ratio(2, 3), 0).unwrap(), rat(1));
        assert!(pow_rat(&rat(0), -1).is_err());
    }
}
