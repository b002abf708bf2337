//! The three rational functions `R_n(t)` and their exact partial fractions.
//!
//! Every `R_n` is a constant times a product of powers of linear factors
//! `(t - c)`, with all poles at `t = 0, -1, …, -n`:
//!
//! - [`ConstructionId::LogDilog`] = `((t-1)⋯(t-n))² / (n!·t(t+1)⋯(t+n))`
//! - [`ConstructionId::Trilog`] = `((t-1)⋯(t-n))³ / (n!²·t(t+1)⋯(t+n))`
//! - [`ConstructionId::WellPoised`] = `(-1)^{n+1}(t+n/2)·((t-1)⋯(t-n)·(t+n+1)⋯(t+2n))²
//!   / (n!·(t(t+1)⋯(t+n))³)`, which satisfies `R_n(t) = (-1)^n R_n(-t-n)`.
//!
//! Pole coefficients are read off from the Taylor expansion of
//! `(t+k)^m R_n(t)` around `t = -k`, computed through the logarithmic
//! derivative of the product. The polynomial part is what remains after the
//! pole sum is subtracted; it is sampled at integer nodes and stored in the
//! shifted-falling basis `binom(t-1, j)`.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::{One, Zero};

use crate::arith::poly::{eval_shifted_falling, forward_differences};
use crate::arith::{pow_rat, rat, ratio, BasisAnchor, BigRat, RatPoly};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConstructionId {
    /// Simultaneous approximations to `Li_1(z)` and `Li_2(z)`.
    LogDilog,
    /// Approximations to `Li_1, Li_2, Li_3`, and to `ζ(2), ζ(3)` at `z = 1`.
    Trilog,
    /// Well-poised forms at `z = -1` in `π²/12` and `3ζ(3)/2`.
    WellPoised,
}

impl ConstructionId {
    pub const ALL: [ConstructionId; 3] = [
        ConstructionId::LogDilog,
        ConstructionId::Trilog,
        ConstructionId::WellPoised,
    ];

    /// Highest pole order of `R_n` itself.
    pub fn pole_order(self) -> usize {
        match self {
            ConstructionId::LogDilog | ConstructionId::Trilog => 1,
            ConstructionId::WellPoised => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ConstructionId::LogDilog => "log-dilog",
            ConstructionId::Trilog => "trilog",
            ConstructionId::WellPoised => "well-poised",
        }
    }
}

impl fmt::Display for ConstructionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConstructionId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "log-dilog" => Ok(ConstructionId::LogDilog),
            "trilog" => Ok(ConstructionId::Trilog),
            "well-poised" => Ok(ConstructionId::WellPoised),
            _ => Err(Error::Unknown(s.to_string())),
        }
    }
}

/// `scale · Π (t - root)^mult`, with equal roots merged.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductForm {
    pub scale: BigRat,
    pub factors: Vec<(BigRat, i64)>,
}

impl ProductForm {
    pub fn of(c: ConstructionId, n: usize) -> Self {
        let ni = n as i64;
        let fact: BigRat = (1..=ni).fold(BigRat::one(), |acc, k| acc * rat(k));
        let mut form = ProductForm {
            scale: BigRat::one(),
            factors: Vec::new(),
        };
        match c {
            ConstructionId::LogDilog => {
                form.scale = fact.recip();
                form.push_range(1, ni, 2);
                form.push_range(-ni, 0, -1);
            }
            ConstructionId::Trilog => {
                form.scale = (&fact * &fact).recip();
                form.push_range(1, ni, 3);
                form.push_range(-ni, 0, -1);
            }
            ConstructionId::WellPoised => {
                let sign = if n.is_multiple_of(2) { rat(-1) } else { rat(1) };
                form.scale = sign / fact;
                form.push(ratio(-ni, 2), 1);
                form.push_range(1, ni, 2);
                form.push_range(-2 * ni, -ni - 1, 2);
                form.push_range(-ni, 0, -3);
            }
        }
        form.factors.retain(|(_, m)| *m != 0);
        form
    }

    fn push_range(&mut self, lo: i64, hi: i64, mult: i64) {
        for c in lo..=hi {
            self.push(rat(c), mult);
        }
    }

    fn push(&mut self, root: BigRat, mult: i64) {
        match self.factors.iter_mut().find(|(r, _)| *r == root) {
            Some((_, m)) => *m += mult,
            None => self.factors.push((root, mult)),
        }
    }

    pub fn numerator_degree(&self) -> i64 {
        self.factors.iter().map(|&(_, m)| m.max(0)).sum()
    }

    pub fn denominator_degree(&self) -> i64 {
        self.factors.iter().map(|&(_, m)| (-m).max(0)).sum()
    }

    /// Multiplicity of `(t - root)`; negative for poles.
    pub fn multiplicity(&self, root: &BigRat) -> i64 {
        self.factors
            .iter()
            .find(|(r, _)| r == root)
            .map_or(0, |&(_, m)| m)
    }

    pub fn eval(&self, t: &BigRat) -> Option<BigRat> {
        let mut num = self.scale.clone();
        let mut den = BigRat::one();
        for (root, m) in &self.factors {
            let v = t - root;
            if v.is_zero() {
                if *m < 0 {
                    return None;
                }
                return Some(BigRat::zero());
            }
            let p = pow_rat(&v, m.abs()).expect("nonzero base");
            if *m > 0 {
                num *= p;
            } else {
                den *= p;
            }
        }
        Some(num / den)
    }

    /// Taylor coefficients `g_0..=g_order` of `(t - point)^shift · self` at
    /// `t = point`, where the shift cancels every factor vanishing there.
    fn taylor_without_root(&self, point: &BigRat, order: usize) -> Vec<BigRat> {
        let others: Vec<(BigRat, i64)> = self
            .factors
            .iter()
            .filter(|(r, _)| r != point)
            .map(|(r, m)| (point - r, *m))
            .collect();
        let mut g0 = self.scale.clone();
        for (d, m) in &others {
            g0 *= pow_rat(d, *m).expect("factor is nonzero at the point");
        }
        // log g(point + h) = log g0 + Σ_j φ_j h^j with
        // φ_j = Σ_f m_f (-1)^{j-1} / (j d_f^j).
        let mut phi = vec![BigRat::zero(); order + 1];
        for (d, m) in &others {
            let inv = d.recip();
            let mut p = BigRat::one();
            for (j, slot) in phi.iter_mut().enumerate().skip(1) {
                p *= &inv;
                let term = &p * rat(*m) / rat(j as i64);
                if j % 2 == 1 {
                    *slot += term;
                } else {
                    *slot -= term;
                }
            }
        }
        // g' = φ' g  ⇒  j g_j = Σ_{i=1}^{j} i φ_i g_{j-i}.
        let mut g = Vec::with_capacity(order + 1);
        g.push(g0);
        for j in 1..=order {
            let mut acc = BigRat::zero();
            for i in 1..=j {
                acc += &phi[i] * &g[j - i] * rat(i as i64);
            }
            g.push(acc / rat(j as i64));
        }
        g
    }
}

/// Exact `R_n(t)` from the product form.
#[allow(non_snake_case)]
pub fn eval_R(c: ConstructionId, n: usize, t: &BigRat) -> Result<BigRat> {
    ProductForm::of(c, n).eval(t).ok_or(Error::Pole {
        n,
        t: t.to_string(),
    })
}

/// Which function of `R_n` a decomposition represents.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Transform {
    /// `R_n(t)`.
    Identity,
    /// `-R_n'(t)`.
    NegFirstDerivative,
    /// `½ R_n''(t)`.
    HalfSecondDerivative,
}

/// `Σ_k Σ_o poles[k][o-1] / (t+k)^o + Σ_j poly[j] binom(t-1, j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialFraction {
    pub construction: ConstructionId,
    pub n: usize,
    pub transform: Transform,
    pub pole_order: usize,
    /// `poles[k][o - 1]` is the coefficient of `1/(t+k)^o`, `k = 0..=n`.
    pub poles: Vec<Vec<BigRat>>,
    /// Shifted-falling coordinates of the polynomial part.
    pub poly: Vec<BigRat>,
}

impl PartialFraction {
    pub fn pole(&self, k: usize, order: usize) -> &BigRat {
        &self.poles[k][order - 1]
    }

    pub fn poly_part(&self) -> RatPoly {
        RatPoly::from_binomial_basis(&self.poly, BasisAnchor::ShiftedFalling)
    }

    pub fn poly_degree(&self) -> isize {
        self.poly.len() as isize - 1
    }

    pub fn eval_poles(&self, t: &BigRat) -> Result<BigRat> {
        let mut acc = BigRat::zero();
        for (k, row) in self.poles.iter().enumerate() {
            let shifted = t + rat(k as i64);
            if shifted.is_zero() {
                if row.iter().all(Zero::is_zero) {
                    continue;
                }
                return Err(Error::Pole {
                    n: self.n,
                    t: t.to_string(),
                });
            }
            let inv = shifted.recip();
            let mut p = BigRat::one();
            for c in row {
                p *= &inv;
                acc += c * &p;
            }
        }
        Ok(acc)
    }

    pub fn eval(&self, t: &BigRat) -> Result<BigRat> {
        Ok(self.eval_poles(t)? + eval_shifted_falling(&self.poly, t))
    }
}

/// Exact partial-fraction decomposition of `R_n`.
pub fn decompose(c: ConstructionId, n: usize) -> PartialFraction {
    let form = ProductForm::of(c, n);
    let pole_order = c.pole_order();
    let mut poles = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let point = rat(-(k as i64));
        let m = (-form.multiplicity(&point)).max(0) as usize;
        let mut row = vec![BigRat::zero(); pole_order];
        if m > 0 {
            assert!(m <= pole_order, "pole of order {m} exceeds {pole_order}");
            let g = form.taylor_without_root(&point, m - 1);
            for (j, gj) in g.into_iter().enumerate() {
                row[m - j - 1] = gj;
            }
        }
        poles.push(row);
    }
    let mut pf = PartialFraction {
        construction: c,
        n,
        transform: Transform::Identity,
        pole_order,
        poles,
        poly: Vec::new(),
    };
    let deg = form.numerator_degree() - form.denominator_degree();
    if deg >= 0 {
        let values = (1..=deg + 1)
            .map(|t| {
                let t = rat(t);
                let r = form.eval(&t).expect("positive t is never a pole");
                r - pf.eval_poles(&t).expect("positive t is never a pole")
            })
            .collect();
        pf.poly = forward_differences(values);
    }
    pf
}

/// Decomposition of `-dR/dt` (`order = 1`) or `½ d²R/dt²` (`order = 2`)
/// from the decomposition of `R`.
pub fn derivative_decomposition(pf: &PartialFraction, order: usize) -> Result<PartialFraction> {
    if pf.transform != Transform::Identity {
        return Err(Error::Domain(
            "derivatives are taken of R_n itself".to_string(),
        ));
    }
    let (transform, scale) = match order {
        1 => (Transform::NegFirstDerivative, rat(-1)),
        2 => (Transform::HalfSecondDerivative, ratio(1, 2)),
        _ => return Err(Error::Domain(format!("derivative order {order}"))),
    };
    let pole_order = pf.pole_order + order;
    let poles = pf
        .poles
        .iter()
        .map(|row| {
            let mut out = vec![BigRat::zero(); pole_order];
            for (i, c) in row.iter().enumerate() {
                let o = i as i64 + 1;
                // d/dt (t+k)^{-o} = -o (t+k)^{-o-1}; d² gives o(o+1)(t+k)^{-o-2}.
                let factor = if order == 1 { rat(o) } else { ratio(o * (o + 1), 2) };
                out[i + order] = c * factor;
            }
            out
        })
        .collect();
    let mut poly = pf.poly_part();
    for _ in 0..order {
        poly = poly.derivative();
    }
    Ok(PartialFraction {
        construction: pf.construction,
        n: pf.n,
        transform,
        pole_order,
        poles,
        poly: poly.scale(&scale).to_binomial_basis(BasisAnchor::ShiftedFalling),
    })
}
