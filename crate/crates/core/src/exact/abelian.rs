//! Finitely generated abelian p-groups and their completions.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use super::arith::valuation;

#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord, Hash)]
pub enum Exponent {
    Finite(u32),
    /// A copy of the p-adic integers.
    Infinite,
}

impl Serialize for Exponent {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Exponent::Finite(k) => s.serialize_u32(*k),
            Exponent::Infinite => s.serialize_str("inf"),
        }
    }
}

/// Direct sum of `Z/p^e` (and `Z_p` for infinite `e`), exponents sorted descending.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct AbelianPStructure {
    pub prime: u64,
    pub exponents: Vec<Exponent>,
}

impl AbelianPStructure {
    pub fn new(prime: u64, mut exponents: Vec<Exponent>) -> Self {
        exponents.retain(|e| *e != Exponent::Finite(0));
        exponents.sort_by(|a, b| b.cmp(a));
        AbelianPStructure { prime, exponents }
    }

    pub fn trivial(prime: u64) -> Self {
        Self::new(prime, Vec::new())
    }

    pub fn from_finite(prime: u64, exps: &[u32]) -> Self {
        Self::new(prime, exps.iter().map(|&e| Exponent::Finite(e)).collect())
    }

    /// p-primary part of `Z^k / diag(d)`; zero entries give free summands.
    pub fn from_invariants(prime: u64, diag: &[BigInt]) -> Self {
        let exps = diag
            .iter()
            .map(|d| {
                if d.is_zero() {
                    Exponent::Infinite
                } else {
                    Exponent::Finite(valuation(prime, d))
                }
            })
            .collect();
        Self::new(prime, exps)
    }

    /// Number of nonzero cyclic summands.
    pub fn rank(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_finite(&self) -> bool {
        !self.exponents.contains(&Exponent::Infinite)
    }

    /// `log_p` of the order, `None` when infinite.
    pub fn order_exponent(&self) -> Option<u32> {
        self.exponents
            .iter()
            .map(|e| match e {
                Exponent::Finite(k) => Some(*k),
                Exponent::Infinite => None,
            })
            .sum()
    }

    /// Reduction modulo `p^k`.
    pub fn capped(&self, k: u32) -> Self {
        Self::new(
            self.prime,
            self.exponents
                .iter()
                .map(|e| match e {
                    Exponent::Finite(x) => Exponent::Finite((*x).min(k)),
                    Exponent::Infinite => Exponent::Finite(k),
                })
                .collect(),
        )
    }

    /// Finite exponents, descending; panics on free summands.
    pub fn finite_exponents(&self) -> Vec<u32> {
        self.exponents
            .iter()
            .map(|e| match e {
                Exponent::Finite(k) => *k,
                Exponent::Infinite => panic!("group has a free summand"),
            })
            .collect()
    }

    pub fn direct_sum(&self, o: &Self) -> Self {
        assert_eq!(self.prime, o.prime);
        let mut e = self.exponents.clone();
        e.extend(o.exponents.iter().copied());
        Self::new(self.prime, e)
    }
}

impl fmt::Display for AbelianPStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponents.is_empty() {
            return f.write_str("0");
        }
        let p = self.prime;
        let parts: Vec<String> = self
            .exponents
            .iter()
            .map(|e| match e {
                Exponent::Infinite => format!("Z_{p}"),
                Exponent::Finite(1) => format!("Z/{p}"),
                Exponent::Finite(k) => format!("Z/{p}^{k}"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_invariants_keeps_p_part() {
        let d: Vec<BigInt> = [12, 0, 5, 8].iter().map(|&x| BigInt::from(x)).collect();
        let g = AbelianPStructure::from_invariants(2, &d);
        assert_eq!(
            g.exponents,
            vec![Exponent::Infinite, Exponent::Finite(3), Exponent::Finite(2)]
        );
        assert_eq!(g.to_string(), "Z_2 + Z/2^3 + Z/2^2");
        assert_eq!(g.order_exponent(), None);
        assert_eq!(g.capped(2).order_exponent(), Some(6));
    }
}
