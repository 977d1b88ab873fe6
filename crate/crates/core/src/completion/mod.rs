//! Completions of Verlinde algebras at the augmentation ideal.

pub mod graded;
pub mod groebner;
pub mod local;
pub mod tower;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::exact::arith::{binomial, is_power_of, prime_factors, valuation_u64};
use crate::exact::{AbelianPStructure, Exponent};

pub use graded::{associated_graded, level1_graded_check, FiltrationReport, GradedCheck};
pub use groebner::{FpPoly, GroebnerBasisFp};
pub use local::{local_dimension_groebner, local_dimension_groebner_permuted, DEFAULT_BUDGET};
pub use tower::{completion_tower_sp1, TowerReport, TowerStage};

/// `(p^i - 1)/2` for odd `p`, `2^i - 1` for `p = 2`, where `p^i || m`.
pub fn delta(p: u64, m: u64) -> u64 {
    assert!(m >= 1);
    let i = valuation_u64(p, m);
    let pi = p.pow(i);
    if p == 2 {
        pi - 1
    } else {
        (pi - 1) / 2
    }
}

/// Number of `k` in `1..m-1` for which `zeta_{2m}^k` has p-power order.
pub fn delta_by_roots(p: u64, m: u64) -> u64 {
    (1..m)
        .filter(|&k| {
            let ord = 2 * m / (2 * m).gcd(&k);
            is_power_of(p, ord, false)
        })
        .count() as u64
}

/// `p`-adic completion of `V(m,1)`: `delta(p,m)` copies of `Z_p` for each `p | m`.
pub fn completion_structure_sp1(m: u64) -> BTreeMap<u64, AbelianPStructure> {
    prime_factors(m)
        .into_iter()
        .map(|p| {
            let d = delta(p, m) as usize;
            (p, AbelianPStructure::new(p, vec![Exponent::Infinite; d]))
        })
        .collect()
}

/// `C(delta(p,m), n)`.
pub fn completion_rank_formula(m: u64, n: u64, p: u64) -> BigInt {
    binomial(delta(p, m) as i64, n as i64)
}
