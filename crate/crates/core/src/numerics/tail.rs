//! Direct summation of `Σ_{ν≥1} z^ν f(ν)` for `f ∈ {R_n, -R_n', ½R_n''}`.
//!
//! This is the independent route to the linear forms: values of `R_n` and
//! its derivatives come from truncated power-series products of the linear
//! factors, never from a partial-fraction decomposition. For `|z| < 1` the
//! series is summed directly; at `z = -1` it is an Abel sum evaluated by the
//! Euler transform `Σ_{k≥0} Δ^k f(1) (-1/2)^{k+1}`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, ToPrimitive, Zero};

use super::bigfloat::{bits_for_digits, BigFloat};
use crate::arith::{rat, BigRat};
use crate::error::{Error, Result};
use crate::ratdecomp::{ConstructionId, ProductForm};

/// `f(ν), f'(ν), f''(ν)/2` truncated after `order`, for `f = R_n`.
fn taylor_at(form: &ProductForm, nu: &BigRat, order: usize) -> Vec<BigRat> {
    let mut s = vec![BigRat::zero(); order + 1];
    s[0] = form.scale.clone();
    for (root, m) in &form.factors {
        let v = nu - root;
        let factor: Vec<BigRat> = if *m > 0 {
            // (v + h)
            let mut f = vec![BigRat::zero(); order + 1];
            f[0] = v;
            if order >= 1 {
                f[1] = BigRat::one();
            }
            f
        } else {
            // 1/(v + h) = Σ (-1)^j h^j / v^{j+1}
            let inv = v.recip();
            let mut f = Vec::with_capacity(order + 1);
            let mut p = inv.clone();
            for j in 0..=order {
                f.push(if j % 2 == 0 { p.clone() } else { -p.clone() });
                p *= &inv;
            }
            f
        };
        for _ in 0..m.unsigned_abs() {
            s = mul_trunc(&s, &factor);
        }
    }
    s
}

fn mul_trunc(a: &[BigRat], b: &[BigRat]) -> Vec<BigRat> {
    let mut out = vec![BigRat::zero(); a.len()];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(a.len() - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// `f(ν)` for derivative order 0 (`R`), 1 (`-R'`) or 2 (`½R''`).
fn term_value(form: &ProductForm, nu: i64, derivative_order: usize) -> BigRat {
    let s = taylor_at(form, &rat(nu), derivative_order);
    match derivative_order {
        0 => s[0].clone(),
        1 => -s[1].clone(),
        _ => s[2].clone(),
    }
}

/// `Σ_{ν≥1} z^ν f(ν)` to about `digits` decimal places (absolute).
pub fn direct_tail(
    c: ConstructionId,
    n: usize,
    z: &BigRat,
    derivative_order: usize,
    digits: u32,
) -> Result<BigFloat> {
    if derivative_order > 2 {
        return Err(Error::Domain(format!("derivative order {derivative_order}")));
    }
    if z.is_one() || z.abs() > BigRat::one() {
        return Err(Error::Divergent(format!("direct series at z = {z}")));
    }
    let form = ProductForm::of(c, n);
    let growth = (form.numerator_degree() - form.denominator_degree()).max(0) as u32;
    let prec = bits_for_digits(digits) + 8;
    if z == &rat(-1) {
        euler_transform(&form, derivative_order, growth, prec)
    } else if z.is_zero() {
        Ok(BigFloat::zero(prec))
    } else {
        geometric_sum(&form, z, derivative_order, growth, prec)
    }
}

fn geometric_sum(
    form: &ProductForm,
    z: &BigRat,
    order: usize,
    growth: u32,
    prec: u32,
) -> Result<BigFloat> {
    let zabs = z.abs().to_f64().unwrap_or(1.0);
    let ln_inv = -libm::log(zabs);
    // Beyond nu0, (1+1/ν)^(growth+1) ≤ |z|^(-1/2), so consecutive terms
    // shrink at least by q = |z|^(1/2) and the tail is ≤ |term|·q/(1-q).
    let nu0 = libm::ceil(2.0 * (growth + 1) as f64 / ln_inv) as i64 + 1;
    let q = libm::sqrt(zabs);
    let tail_factor = q / (1.0 - q);
    let wp = prec + 32;
    let zf = BigFloat::from_rat(z, wp);
    let mut zpow = BigFloat::from_i64(1, wp);
    let mut acc = BigFloat::zero(wp);
    let eps_log2 = -(prec as f64);
    let mut nu: i64 = 1;
    loop {
        zpow = &zpow * &zf;
        let f = term_value(form, nu, order);
        let term = &zpow * &BigFloat::from_rat(&f, wp);
        acc = &acc + &term;
        if nu >= nu0 {
            let bound = if term.is_zero() {
                f64::NEG_INFINITY
            } else {
                term.log2_abs() + libm::log2(tail_factor)
            };
            if bound < eps_log2 {
                break;
            }
        }
        nu += 1;
        if nu > 200_000 {
            return Err(Error::Divergent("direct series did not settle".into()));
        }
    }
    Ok(acc.with_prec(prec))
}

fn euler_transform(form: &ProductForm, order: usize, growth: u32, prec: u32) -> Result<BigFloat> {
    let mut count = prec as usize + 64 + 4 * (growth as usize + 2);
    for _ in 0..4 {
        let log_k = libm::log2(count as f64 + 1.0);
        let wp = prec + libm::ceil((growth as f64 + 3.0) * log_k) as u32 + 96;
        let mut diffs: Vec<BigFloat> = (1..=count as i64)
            .map(|nu| BigFloat::from_rat(&term_value(form, nu, order), wp))
            .collect();
        // Σ_k Δ^k f(1) · (-1)^{k+1} / 2^{k+1}
        let mut acc = BigFloat::zero(wp);
        let mut weight = BigFloat::from_parts((-1).into(), -1, wp);
        let half = BigFloat::from_parts((-1).into(), -1, wp);
        let mut last_terms = Vec::new();
        for level in 0..count {
            let term = &diffs[0] * &weight;
            acc = &acc + &term;
            last_terms.push(term);
            for i in 0..count - level - 1 {
                diffs[i] = &diffs[i + 1] - &diffs[i];
            }
            weight = &weight * &half;
        }
        let settled = last_terms
            .iter()
            .rev()
            .take(16)
            .all(|t| t.is_zero() || t.magnitude() < -(prec as i64) - 8);
        if settled {
            return Ok(acc.with_prec(prec));
        }
        count *= 2;
    }
    Err(Error::Divergent("Euler transform did not settle".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;
    use crate::numerics::{constant, polylog, Constant};
    use crate::ratdecomp::eval_R;

    #[test]
    fn series_values_match_product_form() {
        let form = ProductForm::of(ConstructionId::WellPoised, 3);
        for nu in 1..6 {
            assert_eq!(
                term_value(&form, nu, 0),
                eval_R(ConstructionId::WellPoised, 3, &rat(nu)).unwrap()
            );
        }
    }

    #[test]
    fn zeroth_forms_are_polylogs() {
        let v = direct_tail(ConstructionId::LogDilog, 0, &ratio(1, 2), 0, 30).unwrap();
        let expect = constant(Constant::Log2, 30);
        assert!((&v - &expect).abs().log10_abs() < -28.0);
        let v = direct_tail(ConstructionId::LogDilog, 0, &rat(-1), 1, 30).unwrap();
        let expect = polylog(2, &rat(-1), 30).unwrap();
        assert!((&v - &expect).abs().log10_abs() < -28.0);
        let v = direct_tail(ConstructionId::Trilog, 0, &ratio(1, 3), 2, 30).unwrap();
        let expect = polylog(3, &ratio(1, 3), 30).unwrap();
        assert!((&v - &expect).abs().log10_abs() < -28.0);
    }

    #[test]
    fn abel_sum_of_first_form() {
        // Σ (-1)^ν R_1(ν) = -5 log 2 + 7/2.
        let v = direct_tail(ConstructionId::LogDilog, 1, &rat(-1), 0, 40).unwrap();
        let expect = &BigFloat::from_rat(&ratio(7, 2), 200)
            - &constant(Constant::Log2, 45).mul_rat(&rat(5));
        assert!((&v - &expect).abs().log10_abs() < -38.0);
        assert_eq!(v.to_sci_string(5), "3.4264e-2");
    }

    #[test]
    fn rejects_divergent_points() {
        assert!(direct_tail(ConstructionId::LogDilog, 1, &rat(1), 0, 20).is_err());
        assert!(direct_tail(ConstructionId::LogDilog, 1, &ratio(3, 2), 0, 20).is_err());
    }
}
