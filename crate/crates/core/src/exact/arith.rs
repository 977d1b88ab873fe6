//! Integer helpers: binomials, valuations, factorisation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Binomial coefficient with an arbitrary integer top: `a (a-1) ... (a-k+1) / k!`.
///
/// Returns zero for `k < 0`.
pub fn binomial_gen(a: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(a - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

/// Ordinary binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    binomial_gen(n, k.min(n - k))
}

pub fn binomial_u64(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u64 = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// p-adic valuation of a nonzero integer.
pub fn valuation(p: u64, x: &BigInt) -> u32 {
    assert!(!x.is_zero(), "valuation of zero");
    let p = BigInt::from(p);
    let mut x = x.abs();
    let mut v = 0;
    loop {
        let (q, r) = x.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        x = q;
        v += 1;
    }
}

pub fn valuation_u64(p: u64, mut x: u64) -> u32 {
    assert!(x != 0);
    let mut v = 0;
    while x.is_multiple_of(p) {
        x /= p;
        v += 1;
    }
    v
}

/// Nonnegative gcd of a list; zero for an empty list.
pub fn gcd_all<'a, I: IntoIterator<Item = &'a BigInt>>(xs: I) -> BigInt {
    xs.into_iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

pub fn totient(n: u64) -> u64 {
    prime_factors(n)
        .iter()
        .fold(n, |acc, p| acc / p * (p - 1))
}

/// Whether `x` is a positive power of the prime `p` (including `p^0 = 1` when `allow_one`).
pub fn is_power_of(p: u64, mut x: u64, allow_one: bool) -> bool {
    if x == 1 {
        return allow_one;
    }
    while x.is_multiple_of(p) {
        x /= p;
    }
    x == 1
}

/// Largest power of `p` dividing `x`, as an integer.
pub fn p_part(p: u64, x: &BigInt) -> BigInt {
    if x.is_zero() {
        return BigInt::zero();
    }
    num_traits::pow(BigInt::from(p), valuation(p, x) as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generalized_binomials() {
        assert_eq!(binomial_gen(-1, 3), BigInt::from(-1));
        assert_eq!(binomial_gen(-2, 2), BigInt::from(3));
        assert_eq!(binomial_gen(5, 7), BigInt::zero());
        assert_eq!(binomial(10, 3), BigInt::from(120));
        assert_eq!(binomial_u64(12, 4), 495);
    }

    #[test]
    fn valuations_and_factors() {
        assert_eq!(valuation(2, &BigInt::from(-48)), 4);
        assert_eq!(prime_factors(360), vec![2, 3, 5]);
        assert_eq!(totient(24), 8);
        assert!(is_power_of(3, 27, false));
        assert!(!is_power_of(3, 1, false));
        assert_eq!(p_part(2, &BigInt::from(40)), BigInt::from(8));
    }
}
