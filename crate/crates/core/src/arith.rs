//! Small exact-arithmetic helpers shared by the catalog and the solvers.
//!
//! Every parameter that reaches these functions is small once the family
//! cutoffs have been applied, so primality is plain trial division.

use num_bigint::BigUint;
use num_traits::{One, Zero};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d <= n / d {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Splits `q` as `p^e` with `p` prime, or `None` when `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let (p, _) = factorize(q).into_iter().next()?;
    let mut rest = q;
    let mut e = 0u32;
    while rest % p == 0 {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

/// Trial-division factorisation, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d <= n / d {
        if n % d == 0 {
            let mut k = 0;
            while n % d == 0 {
                n /= d;
                k += 1;
            }
            out.push((d, k));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Unbounded ascending stream of primes.
pub fn primes() -> impl Iterator<Item = u64> {
    (2u64..).filter(|&n| is_prime(n))
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

pub fn checked_pow(p: u64, e: u32) -> Option<u64> {
    p.checked_pow(e)
}

pub fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

pub fn big_pow(base: u64, exp: u32) -> BigUint {
    BigUint::from(base).pow(exp)
}

pub fn isqrt(n: &BigUint) -> BigUint {
    n.sqrt()
}

/// Exact square root when `n` is a perfect square.
pub fn exact_sqrt(n: &BigUint) -> Option<BigUint> {
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

pub fn divides(d: &BigUint, n: &BigUint) -> bool {
    if d.is_zero() {
        return n.is_zero();
    }
    (n % d).is_zero()
}

/// `a^n mod m` for word-sized operands.
pub fn pow_mod(a: u64, mut n: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let m128 = m as u128;
    let mut base = (a % m) as u128;
    let mut acc: u128 = 1;
    while n > 0 {
        if n & 1 == 1 {
            acc = acc * base % m128;
        }
        base = base * base % m128;
        n >>= 1;
    }
    acc as u64
}

/// Serialises a big integer as a decimal string so JSON consumers never
/// lose precision.
pub fn ser_big<S: serde::Serializer>(n: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(n)
}

pub fn factorial(n: u32) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_by_trial_division() {
        let small: Vec<u64> = primes().take(10).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(!is_prime(0));
        assert!(!is_prime(1));
        assert!(!is_prime(91));
        assert!(is_prime(65_537));
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(243), Some((3, 5)));
        assert_eq!(prime_power(128), Some((2, 7)));
        assert_eq!(prime_power(49), Some((7, 2)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn factorisation_and_roots() {
        assert_eq!(factorize(342), vec![(2, 1), (3, 2), (19, 1)]);
        assert_eq!(factorize(156), vec![(2, 2), (3, 1), (13, 1)]);
        assert_eq!(exact_sqrt(&big(324)), Some(big(18)));
        assert_eq!(exact_sqrt(&big(325)), None);
        assert_eq!(isqrt(&big(30_772)), big(175));
        assert_eq!(pow_mod(3, 4, 4), 1);
        assert_eq!(factorial(8), big(40_320));
    }
}
