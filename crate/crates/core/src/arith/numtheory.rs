use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

/// Sieve of Eratosthenes over `0..=limit`. Read-only after construction, so a
/// single instance can be shared between threads.
#[derive(Debug, Clone)]
pub struct Sieve {
    composite: Vec<bool>,
}

impl Sieve {
    pub fn new(limit: usize) -> Self {
        let mut composite = vec![false; limit + 1];
        for c in composite.iter_mut().take(2) {
            *c = true;
        }
        let mut p = 2;
        while p * p <= limit {
            if !composite[p] {
                let mut m = p * p;
                while m <= limit {
                    composite[m] = true;
                    m += p;
                }
            }
            p += 1;
        }
        Sieve { composite }
    }

    pub fn limit(&self) -> usize {
        self.composite.len() - 1
    }

    pub fn is_prime(&self, n: usize) -> bool {
        n <= self.limit() && !self.composite[n]
    }

    pub fn primes(&self) -> impl Iterator<Item = usize> + '_ {
        (2..=self.limit()).filter(move |&p| !self.composite[p])
    }
}

pub fn primes_upto(n: usize) -> Vec<usize> {
    Sieve::new(n).primes().collect()
}

pub fn is_prime(n: usize) -> bool {
    Sieve::new(n).is_prime(n)
}

/// `D_n = lcm(1, 2, …, n)`, with `D_0 = D_1 = 1`: the product of the largest
/// power of each prime `p ≤ n` not exceeding `n`.
pub fn lcm_upto(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for p in Sieve::new(n).primes() {
        let mut q = p;
        while q <= n / p {
            q *= p;
        }
        acc *= q;
    }
    acc
}

/// Product of the primes `p ≤ n` with fractional part `{n/p} ∈ [2/3, 1)`.
pub fn phi_tilde(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for p in Sieve::new(n).primes() {
        // {n/p} = (n mod p)/p, and 2/3 ≤ r/p ⇔ 3r ≥ 2p.
        let r = n % p;
        if 3 * r >= 2 * p {
            acc *= p;
        }
    }
    acc
}

/// Binomial coefficient; zero outside `0 ≤ k ≤ n`.
pub fn binom(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::ZERO;
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;

    fn lcm_direct(n: usize) -> BigInt {
        (1..=n).fold(BigInt::one(), |acc, k| acc.lcm(&BigInt::from(k)))
    }

    fn phi_by_rationals(n: usize) -> BigInt {
        // {n/p} compared as exact rationals over all p ≤ n, primality by trial division.
        let mut acc = BigInt::one();
        for p in 2..=n {
            if (2..p).any(|d| p % d == 0) {
                continue;
            }
            let frac = num_rational::Ratio::new(n % p, p);
            if frac >= num_rational::Ratio::new(2, 3) && frac < num_rational::Ratio::from_integer(1) {
                acc *= p;
            }
        }
        acc
    }

    #[test]
    fn lcm_small_values() {
        assert_eq!(lcm_upto(0), BigInt::from(1));
        assert_eq!(lcm_upto(1), BigInt::from(1));
        assert_eq!(lcm_upto(6), BigInt::from(60));
        assert_eq!(lcm_upto(10), BigInt::from(2520));
        for n in 0..60 {
            assert_eq!(lcm_upto(n), lcm_direct(n), "n = {n}");
        }
    }

    #[test]
    fn lcm_steps_are_prime_powers() {
        for n in 0..300 {
            let (q, r) = lcm_upto(n + 1).div_rem(&lcm_upto(n));
            assert_eq!(r, BigInt::ZERO);
            let q: u64 = q.try_into().unwrap();
            if q > 1 {
                let p = (2..=q).find(|d| q.is_multiple_of(*d)).unwrap();
                let mut m = q;
                while m.is_multiple_of(p) {
                    m /= p;
                }
                assert_eq!(m, 1, "step at n = {n} is {q}");
            }
        }
    }

    #[test]
    fn phi_tilde_values() {
        assert_eq!(phi_tilde(2), BigInt::from(1));
        assert_eq!(phi_tilde(5), BigInt::from(3));
        assert_eq!(phi_tilde(25), BigInt::from(13));
        assert_eq!(phi_tilde(0), BigInt::from(1));
        for n in 0..120 {
            assert_eq!(phi_tilde(n), phi_by_rationals(n), "n = {n}");
        }
    }

    #[test]
    fn phi_tilde_divides_lcm() {
        for n in 0..=300 {
            assert!(lcm_upto(n).is_multiple_of(&phi_tilde(n)), "n = {n}");
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binom(4, 2), BigInt::from(6));
        assert_eq!(binom(0, 0), BigInt::from(1));
        assert_eq!(binom(6, 3), BigInt::from(20));
        assert_eq!(binom(3, 4), BigInt::ZERO);
        assert_eq!(binom(3, -1), BigInt::ZERO);
        for n in 0..30 {
            for k in 1..n {
                assert_eq!(binom(n, k), binom(n - 1, k - 1) + binom(n - 1, k));
            }
        }
    }

    #[test]
    fn sieve_matches_trial_division() {
        let s = Sieve::new(500);
        for n in 0..=500 {
            let trial = n >= 2 && (2..n).all(|d| n % d != 0);
            assert_eq!(s.is_prime(n), trial, "n = {n}");
        }
        assert!(!s.is_prime(501));
        assert_eq!(primes_upto(20), [2, 3, 5, 7, 11, 13, 17, 19]);
    }
}
