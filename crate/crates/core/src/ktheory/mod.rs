//! Twisted K-theory of `Y(l,1)` and of the free loop space of `HP^l`.

pub mod coproduct;
pub mod lhp;
pub mod path_table;

use std::collections::BTreeMap;

use crate::completion::tower::sigma_quotient_presentation;
use crate::exact::arith::{prime_factors, valuation_u64};
use crate::exact::{cokernel_invariants, AbelianPStructure};

pub use coproduct::{coproduct_values, euler_and_t, CoproductReport, EulerReport, TensorTerm};
pub use lhp::{lhp_ring, omega_hp_ring, LhpRing, QuotientRingZ, TwoVarPoly};
pub use path_table::{lhp_additive_path_table, truncated_oracle, Cell, Path, PathTable};

/// Window index `j` in `1..=i` with `r` in the `j`-th p-adic window, `p^i || m`.
fn window(p: u64, r: u64, i: u32) -> Option<u32> {
    (1..=i).find(|&j| {
        let (lo, hi) = if p == 2 {
            (2u64.pow(j - 1) - 1, 2u64.pow(j) - 1)
        } else {
            ((p.pow(j - 1) - 1) / 2, (p.pow(j) - 1) / 2)
        };
        lo < r && r <= hi
    })
}

fn ceil_div(a: u64, b: u64) -> u64 {
    a.div_ceil(b)
}

/// Exponent of the `(p, r)` summand of `K_0^t Y(l,1)`.
///
/// The ceiling term is shifted by `i - j`, which is what the module
/// `Z[y]/(sigma^{m-1}, y^{l+1})` actually has; see [`epsilon_unshifted`].
pub fn epsilon(p: u64, ell: u64, r: u64, m: u64) -> u64 {
    let i = valuation_u64(p, m);
    if r == 0 || r > ell + 1 {
        return 0;
    }
    match window(p, r, i) {
        Some(j) => epsilon_ceiling(p, ell, r, j) + (i - j) as u64,
        None => 0,
    }
}

/// The bare ceiling term, without the `i - j` shift.
pub fn epsilon_unshifted(p: u64, ell: u64, r: u64, m: u64) -> u64 {
    let i = valuation_u64(p, m);
    if r == 0 || r > ell + 1 {
        return 0;
    }
    window(p, r, i).map_or(0, |j| epsilon_ceiling(p, ell, r, j))
}

fn epsilon_ceiling(p: u64, ell: u64, r: u64, j: u32) -> u64 {
    let num = 2 + ell - r;
    if p == 2 {
        ceil_div(num, 2u64.pow(j - 1))
    } else {
        ceil_div(2 * num, (p - 1) * p.pow(j - 1))
    }
}

/// Summands `Z/p^eps` for `r = 1..=l+1`.
pub fn y_group_p_part(m: u64, ell: u64, p: u64) -> AbelianPStructure {
    let exps: Vec<u32> = (1..=ell + 1)
        .map(|r| epsilon(p, ell, r, m) as u32)
        .collect();
    AbelianPStructure::from_finite(p, &exps)
}

pub fn y_group_structure(m: u64, ell: u64) -> BTreeMap<u64, AbelianPStructure> {
    prime_factors(m)
        .into_iter()
        .map(|p| (p, y_group_p_part(m, ell, p)))
        .collect()
}

/// p-part of `Z[y]/(sigma^{m-1}(y), y^{l+1})` by Smith normal form.
pub fn y_group_oracle(m: u64, ell: u64, p: u64) -> AbelianPStructure {
    let rel = sigma_quotient_presentation(m as u32, ell as u32);
    AbelianPStructure::from_invariants(p, &cokernel_invariants(&rel))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Exponent;

    #[test]
    fn m_two() {
        for ell in 1..8 {
            assert_eq!(epsilon(2, ell, 1, 2), ell + 1);
            assert_eq!(epsilon(2, ell, 2, 2), 0);
            assert_eq!(
                y_group_oracle(2, ell, 2).exponents,
                vec![Exponent::Finite(ell as u32 + 1)]
            );
        }
        assert_eq!(y_group_structure(2, 3)[&2].exponents, vec![Exponent::Finite(4)]);
    }

    #[test]
    fn outside_windows() {
        assert_eq!(epsilon(2, 3, 5, 8), 0);
        assert_eq!(epsilon(3, 4, 1, 8), 0);
        assert!(y_group_structure(1, 4).is_empty());
    }

    #[test]
    fn formula_matches_snf() {
        for m in 2..=12 {
            for ell in 1..=6 {
                for (p, s) in y_group_structure(m, ell) {
                    assert_eq!(s, y_group_oracle(m, ell, p), "m={m} l={ell} p={p}");
                }
            }
        }
    }

    #[test]
    fn unshifted_differs_when_i_exceeds_one() {
        // p^2 | m puts r = 1 in window j = 1 < i
        assert_eq!(epsilon(2, 2, 1, 4), epsilon_unshifted(2, 2, 1, 4) + 1);
        assert_eq!(epsilon(3, 1, 1, 6), epsilon_unshifted(3, 1, 1, 6));
    }
}
