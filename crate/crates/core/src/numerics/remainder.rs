
use num_traits::{One, Zero};

use super::bigfloat::{bits_for_digits, BigFloat};
use super::constants::{constant_bits, Constant};
use super::polylog::polylog_bits;
use crate::arith::{ratio, BigRat};
use crate::error::{Error, Result};
use crate::linforms::LinearFormCoeffs;
use crate::ratdecomp::ConstructionId;

/// Digits that must survive cancellation in `a·L - b`.
const GUARD_DIGITS: f64 = 20.0;

/// The constant a linear form approximates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Target {
    Li(u32, BigRat),
    Zeta2,
    Zeta3,
    /// `π²/12`.
    PiSquaredOver12,
    /// `3ζ(3)/2`.
    ThreeHalvesZeta3,
    /// `3ζ(2)/2`, kept only to probe the well-poised constant.
    ThreeHalvesZeta2,
}

impl Target {
    pub fn value(&self, prec: u32) -> Result<BigFloat> {
        let wp = prec + 8;
        let v = match self {
            Target::Li(s, z) => polylog_bits(*s, z, wp)?,
            Target::Zeta2 => constant_bits(Constant::Zeta2, wp),
            Target::Zeta3 => constant_bits(Constant::Zeta3, wp),
            Target::PiSquaredOver12 => constant_bits(Constant::Zeta2, wp).mul_rat(&ratio(1, 2)),
            Target::ThreeHalvesZeta3 => constant_bits(Constant::Zeta3, wp).mul_rat(&ratio(3, 2)),
            Target::ThreeHalvesZeta2 => constant_bits(Constant::Zeta2, wp).mul_rat(&ratio(3, 2)),
        };
        Ok(v.with_prec(prec))
    }
}

/// Targets paired with `(b, b̃, b̃̃)` for the row's construction and point.
pub fn target_constants(row: &LinearFormCoeffs) -> [Option<Target>; 3] {
    let z = &row.z;
    match row.construction {
        ConstructionId::LogDilog => [
            Some(Target::Li(1, z.clone())),
            Some(Target::Li(2, z.clone())),
            None,
        ],
        ConstructionId::Trilog if z.is_one() => [None, Some(Target::Zeta2), Some(Target::Zeta3)],
        ConstructionId::Trilog => [
            Some(Target::Li(1, z.clone())),
            Some(Target::Li(2, z.clone())),
            Some(Target::Li(3, z.clone())),
        ],
        ConstructionId::WellPoised => [
            Some(Target::PiSquaredOver12),
            Some(Target::ThreeHalvesZeta3),
            None,
        ],
    }
}

/// `a·L - b` at `digits` decimal digits, rejecting results where fewer than
/// the guard digits survive cancellation.
pub fn linear_form_value(a: &BigRat, b: &BigRat, target: &Target, digits: u32) -> Result<BigFloat> {
    let prec = bits_for_digits(digits);
    let l = target.value(prec)?;
    let x = BigFloat::from_rat(a, prec) * l;
    let y = BigFloat::from_rat(b, prec);
    let r = &x - &y;
    let top = x.magnitude().max(y.magnitude());
    if x.is_zero() && y.is_zero() {
        return Ok(r);
    }
    let lost_digits = if r.is_zero() {
        prec as f64 / 3.32
    } else {
        (top - r.magnitude()).max(0) as f64 / core::f64::consts::LOG2_10
    };
    if digits as f64 - lost_digits < GUARD_DIGITS {
        return Err(Error::InsufficientPrecision {
            needed_digits: libm::ceil(lost_digits + GUARD_DIGITS) as u64 + 4,
            digits: digits as u64,
        });
    }
    Ok(r)
}

/// Values of `r, r̃, r̃̃` for each `b`-field present in the row.
#[derive(Debug, Clone, PartialEq)]
pub struct Remainders {
    pub r: Option<BigFloat>,
    pub r_tilde: Option<BigFloat>,
    pub r_tilde2: Option<BigFloat>,
}

impl Remainders {
    pub fn fields(&self) -> [Option<&BigFloat>; 3] {
        [self.r.as_ref(), self.r_tilde.as_ref(), self.r_tilde2.as_ref()]
    }
}

pub fn remainder(row: &LinearFormCoeffs, digits: u32) -> Result<Remainders> {
    let targets = target_constants(row);
    let fields = [&row.b, &row.b_tilde, &row.b_tilde2];
    let mut out = [None, None, None];
    for i in 0..3 {
        if let (Some(b), Some(t)) = (fields[i], &targets[i]) {
            out[i] = Some(linear_form_value(&row.a, b, t, digits)?);
        }
    }
    let [r, r_tilde, r_tilde2] = out;
    Ok(Remainders {
        r,
        r_tilde,
        r_tilde2,
    })
}

/// [`remainder`] with the working precision raised until every field keeps
/// at least the guard digits.
pub fn remainder_auto(row: &LinearFormCoeffs) -> Result<Remainders> {
    let a_digits = if row.a.is_zero() {
        0.0
    } else {
        BigFloat::from_rat(&row.a, 64).log10_abs().max(0.0)
    };
    let mut digits = libm::ceil(a_digits + 2.0 * GUARD_DIGITS) as u32;
    for _ in 0..8 {
        match remainder(row, digits) {
            Err(Error::InsufficientPrecision { needed_digits, .. }) => {
                digits = (needed_digits as u32).max(digits * 2);
            }
            other => return other,
        }
    }
    Err(Error::InsufficientPrecision {
        needed_digits: digits as u64,
        digits: digits as u64,
    })
}


/// Remainders carrying at least `sig` correct significant digits each.
pub fn remainder_significant(row: &LinearFormCoeffs, sig: u32) -> Result<Remainders> {
    let rough = remainder_auto(row)?;
    let scale = BigFloat::from_rat(&row.a, 64).log10_abs().max(0.0) + 2.0;
    let lost = rough
        .fields()
        .iter()
        .flatten()
        .filter(|r| !r.is_zero())
        .map(|r| scale - r.log10_abs())
        .fold(0.0, f64::max);
    let digits = libm::ceil(lost.max(0.0)) as u32 + sig + GUARD_DIGITS as u32;
    remainder(row, digits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::linforms::coeffs_log_dilog;

    #[test]
    fn trivial_row() {
        let row = coeffs_log_dilog(0, &rat(-1)).unwrap();
        let r = remainder(&row, 40).unwrap();
        let log2 = constant_bits(Constant::Log2, 200);
        assert!((&r.r.unwrap() + &log2).abs().magnitude() < -120);
    }

    #[test]
    fn cancellation_is_detected() {
        let row = coeffs_log_dilog(12, &rat(-1)).unwrap();
        assert!(matches!(
            remainder(&row, 25),
            Err(Error::InsufficientPrecision { .. })
        ));
        let r = remainder_auto(&row).unwrap();
        assert!(r.r.unwrap().log10_abs() < -5.0);
        let fine = remainder_significant(&row, 60).unwrap().r.unwrap();
        let coarse = remainder_auto(&row).unwrap().r.unwrap();
        let rel = (&fine - &coarse).abs().log10_abs() - fine.log10_abs();
        assert!(rel < -15.0);
    }

    #[test]
    fn typo_probe_values() {
        // a_1 = 8, b̃_1 = 29/2 in the well-poised family.
        let a = rat(8);
        let b = ratio(29, 2);
        let good = linear_form_value(&a, &b, &Target::ThreeHalvesZeta3, 40).unwrap();
        let bad = linear_form_value(&a, &b, &Target::ThreeHalvesZeta2, 40).unwrap();
        assert_eq!(good.to_sci_string(4), "-7.532e-2");
        assert!(bad.to_f64() > 5.0);
    }

    #[test]
    fn missing_domain_is_reported() {
        let e = linear_form_value(&rat(1), &rat(0), &Target::Li(1, rat(1)), 30);
        assert!(matches!(e, Err(Error::Divergent(_))));
        let _ = format!("{:?}", e);
    }
}
