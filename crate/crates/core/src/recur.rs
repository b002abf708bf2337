//! Polynomial recurrences satisfied by the approximation sequences.
//!
//! A recurrence of order `d` is stored as `d+1` polynomials in `n`; the
//! relation is `Σ_{i=0}^{d} p_i(n) x_{n+1-i} = 0` for `n ≥ valid_from`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::ops::RangeInclusive;
use core::str::FromStr;

use num_traits::Zero;

use crate::arith::{rat, ratio, BigRat, RatPoly};
use crate::error::{Error, Result};
use crate::numerics::{roots, BigFloat, ComplexFloat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Builtin {
    /// Log/dilog forms at `z = -1`.
    Thm1,
    /// `ζ(2)`/`ζ(3)` forms from the trilog construction at `z = 1`.
    Thm2,
    /// Well-poised forms at `z = -1`.
    Thm3,
    /// The second-order recurrence of Apéry's `ζ(2)` denominators.
    AperyZ2,
}

impl Builtin {
    pub const ALL: [Builtin; 4] = [Builtin::Thm1, Builtin::Thm2, Builtin::Thm3, Builtin::AperyZ2];

    pub fn name(self) -> &'static str {
        match self {
            Builtin::Thm1 => "thm1",
            Builtin::Thm2 => "thm2",
            Builtin::Thm3 => "thm3",
            Builtin::AperyZ2 => "apery-z2",
        }
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Builtin {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "thm1" => Ok(Builtin::Thm1),
            "thm2" => Ok(Builtin::Thm2),
            "thm3" => Ok(Builtin::Thm3),
            "apery-z2" => Ok(Builtin::AperyZ2),
            _ => Err(Error::Unknown(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recurrence {
    pub name: String,
    pub order: usize,
    /// Coefficients of `x_{n+1}, x_n, …, x_{n+1-order}`.
    pub coeff_polys: Vec<RatPoly>,
    pub valid_from: usize,
    /// Characteristic polynomial, leading coefficient first.
    pub char_poly: Vec<BigRat>,
}

fn p(c: &[i64]) -> RatPoly {
    // Ascending powers of n.
    RatPoly::from_i64(c)
}

fn prod(parts: &[RatPoly]) -> RatPoly {
    parts.iter().fold(p(&[1]), |acc, q| &acc * q)
}

pub fn builtin(name: Builtin) -> Recurrence {
    let n1 = p(&[1, 1]); // n + 1
    let nm1 = p(&[-1, 1]); // n - 1
    let n = p(&[0, 1]);
    let (order, coeff_polys, valid_from, char_poly): (usize, Vec<RatPoly>, usize, &[i64]) = match name {
        Builtin::Thm1 => (
            3,
            alloc::vec![
                prod(&[p(&[2]), p(&[-24, 59]), n1.pow(2)]),
                p(&[240, 376, -1365, -2301]),
                p(&[-35, 60, 120, -295]),
                prod(&[p(&[-1]), p(&[35, 59]), nm1.pow(2)]),
            ],
            2,
            &[2, -39, -5, -1],
        ),
        Builtin::Thm2 => (
            3,
            alloc::vec![
                prod(&[p(&[2]), p(&[153, -731, 946]), p(&[1, 2]), n1.pow(3)]),
                p(&[-2142, -6596, 16964, 69050, -25576, -255420, -208120]),
                prod(&[p(&[2]), p(&[-184, 328, 853, -1925, -1032, 3784]), n.clone()]),
                prod(&[p(&[-1]), p(&[368, 1161, 946]), n, nm1.pow(3)]),
            ],
            2,
            &[4, -220, 8, -1],
        ),
        Builtin::Thm3 => (
            3,
            alloc::vec![
                prod(&[p(&[348, -1363, 1457]), n1.pow(4)]),
                p(&[-2784, -8932, 11111, 61894, 9295, -158202, -148614]),
                p(&[1768, -5678, -5440, 35343, -9443, -91321, 97619]),
                prod(&[
                    p(&[-3]),
                    p(&[442, 1551, 1457]),
                    p(&[-2, 3]),
                    p(&[-4, 3]),
                    nm1.pow(2),
                ]),
            ],
            2,
            &[1, -102, 67, -27],
        ),
        Builtin::AperyZ2 => (
            2,
            alloc::vec![n1.pow(2), p(&[3, 11, 11]), prod(&[p(&[-1]), n.pow(2)])],
            1,
            &[1, 11, -1],
        ),
    };
    Recurrence {
        name: name.name().to_string(),
        order,
        coeff_polys,
        valid_from,
        char_poly: char_poly.iter().map(|&c| rat(c)).collect(),
    }
}

/// Published initial terms `x_0, x_1, x_2` (two terms for the order-2
/// recurrence) of each coefficient sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InitialData {
    pub a: Vec<BigRat>,
    pub b: Option<Vec<BigRat>>,
    pub b_tilde: Option<Vec<BigRat>>,
    pub b_tilde2: Option<Vec<BigRat>>,
}

pub fn initial_data(name: Builtin) -> InitialData {
    let v = |xs: &[(i64, i64)]| xs.iter().map(|&(p, q)| ratio(p, q)).collect::<Vec<_>>();
    match name {
        Builtin::Thm1 => InitialData {
            a: v(&[(1, 1), (5, 1), (55, 1)]),
            b: Some(v(&[(0, 1), (-7, 2), (-305, 8)])),
            b_tilde: Some(v(&[(0, 1), (-4, 1), (-181, 4)])),
            b_tilde2: None,
        },
        Builtin::Thm2 => InitialData {
            a: v(&[(1, 1), (7, 1), (163, 1)]),
            b: None,
            b_tilde: Some(v(&[(0, 1), (23, 2), (2145, 8)])),
            b_tilde2: Some(v(&[(0, 1), (17, 2), (3135, 16)])),
        },
        Builtin::Thm3 => InitialData {
            a: v(&[(1, 1), (8, 1), (264, 1)]),
            b: Some(v(&[(0, 1), (13, 2), (1737, 8)])),
            b_tilde: Some(v(&[(0, 1), (29, 2), (7617, 16)])),
            b_tilde2: None,
        },
        Builtin::AperyZ2 => InitialData {
            a: v(&[(1, 1), (-3, 1)]),
            b: None,
            b_tilde: None,
            b_tilde2: None,
        },
    }
}

impl Recurrence {
    /// Coefficients `p_0(n), …, p_order(n)`.
    pub fn coefficients_at(&self, n: usize) -> Vec<BigRat> {
        self.coeff_polys.iter().map(|q| q.eval_i64(n as i64)).collect()
    }

    /// `Σ_i p_i(n) x_{n+1-i}`.
    pub fn residual(&self, seq: &[BigRat], n: usize) -> Result<BigRat> {
        if n + 1 >= seq.len() || n + 1 < self.order {
            return Err(Error::SequenceTooShort {
                needed: n + 2,
                got: seq.len(),
            });
        }
        let mut acc = BigRat::zero();
        for (i, c) in self.coefficients_at(n).iter().enumerate() {
            acc += c * &seq[n + 1 - i];
        }
        Ok(acc)
    }

    /// Characteristic polynomial read off from the top-degree terms of the
    /// coefficient polynomials.
    pub fn leading_char_poly(&self) -> Vec<BigRat> {
        let deg = self.coeff_polys.iter().map(RatPoly::degree).max().unwrap_or(-1);
        self.coeff_polys
            .iter()
            .map(|q| {
                if q.degree() == deg {
                    q.leading().cloned().unwrap_or_else(BigRat::zero)
                } else {
                    BigRat::zero()
                }
            })
            .collect()
    }
}

/// Result of checking a recurrence over a range of `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verification {
    pub holds: bool,
    pub first_failure: Option<usize>,
}

/// Checks that the relation vanishes exactly at every `n` in `range`.
pub fn verify(rec: &Recurrence, seq: &[BigRat], range: RangeInclusive<usize>) -> Result<Verification> {
    let (lo, hi) = (*range.start(), *range.end());
    if hi + 2 > seq.len() || lo + 1 < rec.order {
        return Err(Error::SequenceTooShort {
            needed: hi + 2,
            got: seq.len(),
        });
    }
    for n in lo..=hi {
        if !rec.residual(seq, n)?.is_zero() {
            return Ok(Verification {
                holds: false,
                first_failure: Some(n),
            });
        }
    }
    Ok(Verification {
        holds: true,
        first_failure: None,
    })
}

/// Extends `initial` through index `upto` by solving for `x_{n+1}`.
pub fn extend(rec: &Recurrence, initial: &[BigRat], upto: usize) -> Result<Vec<BigRat>> {
    if initial.len() < rec.order {
        return Err(Error::SequenceTooShort {
            needed: rec.order,
            got: initial.len(),
        });
    }
    let mut seq: Vec<BigRat> = initial.iter().take(upto + 1).cloned().collect();
    let mut n = seq.len() - 1;
    while seq.len() <= upto {
        if n < rec.valid_from {
            return Err(Error::SequenceTooShort {
                needed: rec.valid_from + 1,
                got: seq.len(),
            });
        }
        let c = rec.coefficients_at(n);
        if c[0].is_zero() {
            return Err(Error::SingularLeading { n });
        }
        let mut rhs = BigRat::zero();
        for (i, ci) in c.iter().enumerate().skip(1) {
            rhs -= ci * &seq[n + 1 - i];
        }
        seq.push(rhs / &c[0]);
        n += 1;
    }
    Ok(seq)
}

/// Roots of the characteristic polynomial, largest modulus first.
pub fn char_roots(rec: &Recurrence, digits: u32) -> Result<Vec<ComplexFloat>> {
    roots::poly_roots(&rec.char_poly, digits.max(10))
}

/// Characteristic polynomial of the log/dilog operator at a general `z`:
/// `z(z-1)λ³ - (3z²-20z+16)λ² + z(3z+8)λ - z²`, leading coefficient first.
pub fn log_dilog_char_poly(z: &BigRat) -> Vec<BigRat> {
    let z2 = z * z;
    alloc::vec![
        z * (z - rat(1)),
        -(rat(3) * &z2 - rat(20) * z + rat(16)),
        z * (rat(3) * z + rat(8)),
        -z2,
    ]
}

/// `|x_N|^{1/N}` for the last index `N` of `seq`, falling back to the
/// nearest nonzero entry within `window`.
pub fn growth_exponent(seq: &[BigFloat], window: usize) -> Result<f64> {
    if seq.len() < 2 {
        return Err(Error::SequenceTooShort {
            needed: 2,
            got: seq.len(),
        });
    }
    let end = seq.len() - 1;
    let lo = end.saturating_sub(window.max(1) - 1).max(1);
    (lo..=end)
        .rev()
        .find(|&n| !seq[n].is_zero())
        .map(|n| libm::exp(seq[n].ln_abs() / n as f64))
        .ok_or_else(|| Error::Domain("all terms vanish in the window".to_string()))
}

/// Ratio extrapolation `(|x_N| / |x_{N-w}|)^{1/w}`, which cancels the
/// constant factor in `x_n ~ C λ^n n^c`.
pub fn ratio_growth(seq: &[BigFloat], window: usize) -> Result<f64> {
    let w = window.max(1);
    if seq.len() < w + 1 {
        return Err(Error::SequenceTooShort {
            needed: w + 1,
            got: seq.len(),
        });
    }
    let end = seq.len() - 1;
    let (hi, lo) = (&seq[end], &seq[end - w]);
    if hi.is_zero() || lo.is_zero() {
        return Err(Error::Domain("zero term in ratio window".to_string()));
    }
    Ok(libm::exp((hi.ln_abs() - lo.ln_abs()) / w as f64))
}

/// `ln max_{N-w < m ≤ N} |x_m|`, smoothing oscillating sequences.
pub fn windowed_log_max(seq: &[BigFloat], end: usize, window: usize) -> Result<f64> {
    if end >= seq.len() || end + 1 < window.max(1) {
        return Err(Error::SequenceTooShort {
            needed: end + 1,
            got: seq.len(),
        });
    }
    let best = seq[end + 1 - window.max(1)..=end]
        .iter()
        .filter(|x| !x.is_zero())
        .map(BigFloat::ln_abs)
        .fold(f64::NEG_INFINITY, f64::max);
    if best == f64::NEG_INFINITY {
        return Err(Error::Domain("all terms vanish in the window".to_string()));
    }
    Ok(best)
}

/// Statistics of a decaying sequence at index `N = seq.len() - 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecayRate {
    /// `(1/N) ln max_window |x|`.
    pub mean: f64,
    /// Slope of the windowed log-maxima between `N/2` and `N`.
    pub slope: f64,
}

pub fn decay_rate(seq: &[BigFloat], window: usize) -> Result<DecayRate> {
    let end = seq.len().saturating_sub(1);
    let mid = end / 2;
    let hi = windowed_log_max(seq, end, window)?;
    let lo = windowed_log_max(seq, mid, window)?;
    Ok(DecayRate {
        mean: hi / end as f64,
        slope: (hi - lo) / (end - mid) as f64,
    })
}

/// Working digits for remainders at index `n` of a recurrence with dominant
/// root `λ3` and subdominant modulus `|λ12|`.
pub fn remainder_digits(n: usize, lambda3: f64, lambda12: f64) -> u32 {
    let per_step = libm::log10(lambda3).max(0.0) + libm::fabs(libm::log10(lambda12));
    libm::ceil(n as f64 * per_step) as u32 + 30
}
