//! Roots of the (at most cubic) characteristic polynomials.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::{ToPrimitive, Zero};

use super::bigfloat::{bits_for_digits, BigFloat};
use crate::arith::BigRat;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct ComplexFloat {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl ComplexFloat {
    pub fn real(re: BigFloat) -> Self {
        let im = BigFloat::zero(re.prec());
        ComplexFloat { re, im }
    }

    pub fn modulus(&self) -> BigFloat {
        (&(&self.re * &self.re) + &(&self.im * &self.im)).sqrt()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }
}

/// Roots of `c[0] x^d + … + c[d]` (`d ≤ 3`), sorted by modulus, largest
/// first. The real root of a cubic is polished by Newton's method to a
/// residual below `10^(2-digits)`; the remaining pair comes from deflation.
pub fn poly_roots(coeffs: &[BigRat], digits: u32) -> Result<Vec<ComplexFloat>> {
    let lead = coeffs
        .iter()
        .position(|c| !c.is_zero())
        .ok_or_else(|| Error::Domain("zero polynomial".into()))?;
    let c = &coeffs[lead..];
    let prec = bits_for_digits(digits + 10);
    let f: Vec<BigFloat> = c.iter().map(|q| BigFloat::from_rat(q, prec)).collect();
    let mut out = match c.len() - 1 {
        0 => Vec::new(),
        1 => alloc::vec![ComplexFloat::real(-(&f[1] / &f[0]))],
        2 => quadratic(&f[0], &f[1], &f[2]),
        3 => {
            let r = cubic_real_root(c, &f, prec, digits)?;
            // c0 x³ + c1 x² + c2 x + c3 = (x - r)(c0 x² + B x + C).
            let b = &f[1] + &(&f[0] * &r);
            let cc = &f[2] + &(&b * &r);
            let mut v = quadratic(&f[0], &b, &cc);
            v.push(ComplexFloat::real(r));
            v
        }
        d => return Err(Error::Domain(alloc::format!("degree {d} polynomial"))),
    };
    out.sort_by(|x, y| y.modulus().partial_cmp(&x.modulus()).unwrap_or(Ordering::Equal));
    Ok(out)
}

fn quadratic(a: &BigFloat, b: &BigFloat, c: &BigFloat) -> Vec<ComplexFloat> {
    let prec = a.prec();
    let two_a = a * &BigFloat::from_i64(2, prec);
    let disc = &(b * b) - &(&(a * c) * &BigFloat::from_i64(4, prec));
    let re = -(b / &two_a);
    if disc.is_negative() {
        let im = &(-disc).sqrt() / &two_a;
        alloc::vec![
            ComplexFloat { re: re.clone(), im: im.clone() },
            ComplexFloat { re, im: -im },
        ]
    } else {
        let s = &disc.sqrt() / &two_a;
        alloc::vec![ComplexFloat::real(&re + &s), ComplexFloat::real(&re - &s)]
    }
}

fn eval_with_derivative(f: &[BigFloat], x: &BigFloat) -> (BigFloat, BigFloat) {
    let prec = x.prec();
    let mut p = BigFloat::zero(prec);
    let mut dp = BigFloat::zero(prec);
    for c in f {
        dp = &(&dp * x) + &p;
        p = &(&p * x) + c;
    }
    (p, dp)
}

fn cubic_real_root(c: &[BigRat], f: &[BigFloat], prec: u32, digits: u32) -> Result<BigFloat> {
    // Bracket a sign change inside the Cauchy bound and bisect in f64.
    let cf: Vec<f64> = c.iter().map(|q| q.to_f64().unwrap_or(0.0)).collect();
    let bound = 1.0 + cf[1..].iter().map(|x| (x / cf[0]).abs()).fold(0.0, f64::max);
    let eval = |x: f64| cf.iter().fold(0.0, |acc, k| acc * x + k);
    let (mut lo, mut hi) = (-bound, bound);
    if eval(lo) > 0.0 {
        core::mem::swap(&mut lo, &mut hi);
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if eval(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let mut x = BigFloat::from_f64(0.5 * (lo + hi), prec);
    let tol = -(bits_for_digits(digits) as i64) + 8;
    for _ in 0..200 {
        let (p, dp) = eval_with_derivative(f, &x);
        if dp.is_zero() {
            break;
        }
        let step = &p / &dp;
        x = &x - &step;
        if step.is_zero() || step.magnitude() - x.magnitude().max(1) < tol - 8 {
            break;
        }
    }
    let (residual, _) = eval_with_derivative(f, &x);
    if !residual.is_zero() && residual.magnitude() > f[0].magnitude() + tol {
        return Err(Error::InsufficientPrecision {
            needed_digits: digits as u64 + 10,
            digits: digits as u64,
        });
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn quadratic_real_pair() {
        let r = poly_roots(&[rat(1), rat(-3), rat(2)], 20).unwrap();
        assert_eq!(r[0].re.to_fixed_string(12), "2.000000000000");
        assert_eq!(r[1].re.to_fixed_string(12), "1.000000000000");
    }

    #[test]
    fn cubic_with_three_real_roots() {
        // (x-1)(x-2)(x+3) = x³ - 7x + 6.
        let r = poly_roots(&[rat(1), rat(0), rat(-7), rat(6)], 30).unwrap();
        let v: Vec<_> = r.iter().map(|z| z.re.to_fixed_string(20)).collect();
        assert_eq!(v, ["-3.00000000000000000000", "2.00000000000000000000", "1.00000000000000000000"]);
        assert!(r.iter().all(ComplexFloat::is_real));
    }
}
