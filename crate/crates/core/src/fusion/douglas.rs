//! Braun-Douglas numbers: gcd of dimensions of the level-(m-n) irreducibles.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use super::character::dimension;
use super::label::level_labels;
use crate::completion::delta;
use crate::exact::arith::{binomial, binomial_gen, is_prime};

/// `d(m,n)`.
pub fn braun_douglas(m: u32, n: u32) -> BigInt {
    assert!(n >= 1 && m >= n + 2);
    level_labels(n, m - n)
        .iter()
        .fold(BigInt::zero(), |g, l| g.gcd(&dimension(n, l)))
}

/// `S(m,i) = C(2m-1,i) + C(2m-3,i) + ... + C(1,i)`.
pub fn douglas_sum(m: u32, i: u32) -> BigInt {
    (1..=m as i64)
        .map(|j| binomial(2 * j - 1, i as i64))
        .fold(BigInt::zero(), |a, b| a + b)
}

/// `sum_{j=-m}^{-1} C(2j + s, s)` with generalized binomials.
pub fn douglas_sum_negative_form(m: u32, s: u32) -> BigInt {
    (-(m as i64)..=-1)
        .map(|j| binomial_gen(2 * j + s as i64, s as i64))
        .fold(BigInt::zero(), |a, b| a + b)
}

/// `gcd{S(m,0), S(m,2), ..., S(m,2(n-1))}`.
pub fn braun_douglas_via_sums(m: u32, n: u32) -> BigInt {
    (0..n).fold(BigInt::zero(), |g, i| g.gcd(&douglas_sum(m, 2 * i)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClosedFormReading {
    /// `n / gcd(n, K)` exactly as displayed.
    AsPrinted,
    /// `m / gcd(m, K)`.
    NumeratorM,
}

/// `K = prod_p p^{e_p}`, `e_p` the largest `e` with `delta(p, p^e) < n`.
pub fn closed_form_k(n: u32) -> BigInt {
    let mut k = BigInt::one();
    let mut p = 2u64;
    loop {
        if is_prime(p) {
            if delta(p, p) >= n as u64 {
                if p > 2 {
                    break;
                }
            } else {
                let mut e = 1u32;
                while delta(p, p.pow(e + 1)) < n as u64 {
                    e += 1;
                }
                k *= num_traits::pow(BigInt::from(p), e as usize);
            }
        }
        p += 1;
    }
    k
}

pub fn braun_douglas_closed_form(m: u32, n: u32, reading: ClosedFormReading) -> BigInt {
    let top = BigInt::from(match reading {
        ClosedFormReading::AsPrinted => n,
        ClosedFormReading::NumeratorM => m,
    });
    let g = top.gcd(&closed_form_k(n));
    top / g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_one() {
        for m in 3..15 {
            assert_eq!(braun_douglas(m, 1), BigInt::from(m));
            assert_eq!(braun_douglas_via_sums(m, 1), BigInt::from(m));
            assert_eq!(douglas_sum(m, 0), BigInt::from(m));
        }
    }

    #[test]
    fn sum_forms_agree() {
        for m in 1..12 {
            for s in (0..12).step_by(2) {
                assert_eq!(douglas_sum(m, s), douglas_sum_negative_form(m, s));
            }
        }
    }

    #[test]
    fn known_values() {
        assert_eq!(braun_douglas(8, 2), BigInt::from(4));
        assert_eq!(braun_douglas_via_sums(8, 2), BigInt::from(4));
        assert_eq!(braun_douglas(4, 2), BigInt::from(2));
        assert_eq!(braun_douglas(6, 2), BigInt::one());
    }

    #[test]
    fn closed_form_small_n() {
        assert_eq!(closed_form_k(1), BigInt::one());
        // n=2: 2^1 (delta(2,2)=1), 3^1 (delta(3,3)=1)
        assert_eq!(closed_form_k(2), BigInt::from(6));
        for m in 3..20 {
            assert_eq!(
                braun_douglas_closed_form(m, 1, ClosedFormReading::NumeratorM),
                BigInt::from(m)
            );
        }
    }
}
