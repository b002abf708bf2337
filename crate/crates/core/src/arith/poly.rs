use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::{is_integer, rat, BigRat};

/// Dense polynomial over `Q`; `coeffs[i]` multiplies `t^i`.
///
/// The coefficient list never carries trailing zeros, so the zero
/// polynomial has an empty list and degree `-1`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RatPoly {
    coeffs: Vec<BigRat>,
}

/// Which integer-valued binomial basis a polynomial is expanded in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisAnchor {
    /// `(t-1)(t-2)⋯(t-j)/j!`, i.e. `binom(t-1, j)`.
    ShiftedFalling,
    /// `t(t+1)⋯(t+j-1)/j!`, i.e. `binom(t+j-1, j)`.
    Rising,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRat) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `t`.
    pub fn t() -> Self {
        Self::new(vec![BigRat::zero(), BigRat::one()])
    }

    pub fn new(mut coeffs: Vec<BigRat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    /// `t - root`.
    pub fn linear(root: BigRat) -> Self {
        Self::new(vec![-root, BigRat::one()])
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn leading(&self) -> Option<&BigRat> {
        self.coeffs.last()
    }

    pub fn eval(&self, t: &BigRat) -> BigRat {
        let mut acc = BigRat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn eval_i64(&self, t: i64) -> BigRat {
        self.eval(&rat(t))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        )
    }

    pub fn scale(&self, s: &BigRat) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(BigRat::one()), |acc, _| &acc * self)
    }

    /// Coefficients `c_j`, `j = 0..=deg`, of `self` in the given binomial
    /// basis, read off as forward differences at integer nodes.
    pub fn to_binomial_basis(&self, anchor: BasisAnchor) -> Vec<BigRat> {
        if self.is_zero() {
            return Vec::new();
        }
        let d = self.degree() as i64;
        match anchor {
            // p(t) = Σ c_j binom(t-1, j) ⇒ c_j = Δ^j p(1).
            BasisAnchor::ShiftedFalling => {
                forward_differences((1..=d + 1).map(|t| self.eval_i64(t)).collect())
            }
            // p(-m) = Σ c_j (-1)^j binom(m, j) ⇒ (-1)^j c_j = Δ^j p(-m)|_{m=0}.
            BasisAnchor::Rising => {
                let mut c = forward_differences((0..=d).map(|m| self.eval_i64(-m)).collect());
                for (j, cj) in c.iter_mut().enumerate() {
                    if j % 2 == 1 {
                        *cj = -cj.clone();
                    }
                }
                c
            }
        }
    }

    pub fn from_binomial_basis(coeffs: &[BigRat], anchor: BasisAnchor) -> Self {
        let mut acc = Self::zero();
        let mut basis = Self::constant(BigRat::one());
        for (j, c) in coeffs.iter().enumerate() {
            if j > 0 {
                let shift = match anchor {
                    BasisAnchor::ShiftedFalling => rat(j as i64),
                    BasisAnchor::Rising => rat(1 - j as i64),
                };
                basis = (&basis * &Self::linear(shift)).scale(&BigRat::new(1.into(), (j as i64).into()));
            }
            acc = &acc + &basis.scale(c);
        }
        acc
    }

    /// True iff `p(ℤ) ⊆ ℤ`, tested through integrality of the shifted-falling
    /// binomial coordinates.
    pub fn is_integer_valued(&self) -> bool {
        self.to_binomial_basis(BasisAnchor::ShiftedFalling)
            .iter()
            .all(is_integer)
    }
}

/// Evaluates `Σ c_j binom(t-1, j)` without building the power basis.
pub(crate) fn eval_shifted_falling(coeffs: &[BigRat], t: &BigRat) -> BigRat {
    let mut acc = BigRat::zero();
    let mut basis = BigRat::one();
    for (j, c) in coeffs.iter().enumerate() {
        if j > 0 {
            basis = basis * (t - rat(j as i64)) / rat(j as i64);
        }
        acc += c * &basis;
    }
    acc
}

/// `[Δ^0 v_0, Δ^1 v_0, …]` for the values `v_0, v_1, …`.
pub(crate) fn forward_differences(mut values: Vec<BigRat>) -> Vec<BigRat> {
    let len = values.len();
    let mut out = Vec::with_capacity(len);
    for step in 0..len {
        out.push(values[0].clone());
        for i in 0..len - step - 1 {
            values[i] = &values[i + 1] - &values[i];
        }
    }
    // Trailing zeros carry no information for a polynomial of lower degree.
    while out.last().is_some_and(Zero::is_zero) {
        out.pop();
    }
    out
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigRat::zero();
        RatPoly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        self + &(-rhs)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![BigRat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;
    use proptest::prelude::*;

    #[test]
    fn degree_conventions() {
        assert_eq!(RatPoly::zero().degree(), -1);
        assert_eq!(RatPoly::from_i64(&[1, 0, 0]).degree(), 0);
        assert_eq!(RatPoly::from_i64(&[0, 0, 3]).leading(), Some(&rat(3)));
    }

    #[test]
    fn basis_of_simple_polynomials() {
        assert!(RatPoly::zero()
            .to_binomial_basis(BasisAnchor::ShiftedFalling)
            .is_empty());
        assert_eq!(
            RatPoly::from_i64(&[1]).to_binomial_basis(BasisAnchor::ShiftedFalling),
            [rat(1)]
        );
        // t² at t = 1, 2, 3 is 1, 4, 9: differences 1, 3, 2.
        assert_eq!(
            RatPoly::from_i64(&[0, 0, 1]).to_binomial_basis(BasisAnchor::ShiftedFalling),
            [rat(1), rat(3), rat(2)]
        );
        // t² = t(t+1)·2/2 - t, so rising coordinates are (0, -1, 2).
        assert_eq!(
            RatPoly::from_i64(&[0, 0, 1]).to_binomial_basis(BasisAnchor::Rising),
            [rat(0), rat(-1), rat(2)]
        );
    }

    #[test]
    fn integer_valued_examples() {
        let choose2 = RatPoly::new(alloc::vec![rat(0), ratio(-1, 2), ratio(1, 2)]);
        assert!(choose2.is_integer_valued());
        assert!(!RatPoly::new(alloc::vec![rat(0), ratio(1, 2)]).is_integer_valued());
        assert!(RatPoly::from_i64(&[1]).is_integer_valued());
        assert!(RatPoly::zero().is_integer_valued());
    }

    #[test]
    fn derivative_and_pow() {
        let p = RatPoly::linear(rat(1)).pow(3);
        assert_eq!(p, RatPoly::from_i64(&[-1, 3, -3, 1]));
        assert_eq!(p.derivative(), RatPoly::from_i64(&[3, -6, 3]));
    }

    fn small_rat() -> impl Strategy<Value = BigRat> {
        (-40i64..40, 1i64..12).prop_map(|(p, q)| ratio(p, q))
    }

    fn poly(max_deg: usize) -> impl Strategy<Value = RatPoly> {
        proptest::collection::vec(small_rat(), 0..=max_deg + 1).prop_map(RatPoly::new)
    }

    proptest! {
        #[test]
        fn basis_round_trip(p in poly(8)) {
            for anchor in [BasisAnchor::ShiftedFalling, BasisAnchor::Rising] {
                let c = p.to_binomial_basis(anchor);
                let back = RatPoly::from_binomial_basis(&c, anchor);
                prop_assert_eq!(&back, &p);
                prop_assert_eq!(back.to_binomial_basis(anchor), c);
            }
        }

        #[test]
        fn shifted_falling_evaluation(p in poly(6), t in small_rat()) {
            let c = p.to_binomial_basis(BasisAnchor::ShiftedFalling);
            prop_assert_eq!(eval_shifted_falling(&c, &t), p.eval(&t));
        }

        #[test]
        fn integer_valued_agrees_with_brute_force(
            p in poly(8),
            lift in proptest::collection::vec(-5i64..5, 0..9),
            use_lift in any::<bool>(),
        ) {
            // Half the cases are integer-valued by construction.
            let p = if use_lift {
                RatPoly::from_binomial_basis(
                    &lift.iter().map(|&c| rat(c)).collect::<Vec<_>>(),
                    BasisAnchor::ShiftedFalling,
                )
            } else {
                p
            };
            let brute = (-50..=50).all(|t| is_integer(&p.eval_i64(t)));
            prop_assert_eq!(p.is_integer_valued(), brute);
        }
    }
}
