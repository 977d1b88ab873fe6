//! Local dimension of `V(m,n) (x) F_p` at the augmentation point.

use crate::error::{invalid, Result};
use crate::exact::arith::binomial_u64;
use crate::fusion::{bent_character_poly, fundamental_dims, level_labels};

use super::groebner::{FpPoly, GroebnerBasisFp};

pub const DEFAULT_BUDGET: usize = 20_000_000;

/// `F_p`-dimension of `F_p[u]/(J_{m-n}, u_i^N)` with `u_i = x_i - dim x_i`, `N = C(m-1,n)`.
pub fn local_dimension_groebner(m: u32, n: u32, p: u64) -> Result<u64> {
    let perm: Vec<usize> = (0..n as usize).collect();
    local_dimension_groebner_permuted(m, n, p, &perm, DEFAULT_BUDGET)
}

/// As [`local_dimension_groebner`] with variable `i` placed at position `perm[i]` of the order.
pub fn local_dimension_groebner_permuted(
    m: u32,
    n: u32,
    p: u64,
    perm: &[usize],
    budget: usize,
) -> Result<u64> {
    if n < 1 || m < n + 2 {
        return invalid(format!("V({m},{n}) needs n >= 1 and m >= n + 2"));
    }
    if perm.len() != n as usize {
        return invalid("permutation length must equal n");
    }
    let nv = n as usize;
    let big_n = binomial_u64(m as u64 - 1, n as u64);
    let big_n = u16::try_from(big_n).map_err(|_| {
        crate::Error::InvalidParameters(format!("nilpotency bound {big_n} too large"))
    })?;
    let dims = fundamental_dims(n);
    let mut gens: Vec<FpPoly> = level_labels(n, m - n)
        .iter()
        .map(|l| {
            let f = bent_character_poly(n, l).translate(&dims);
            FpPoly::from_multipoly(&f, nv, p, perm)
        })
        .collect();
    for i in 0..nv {
        gens.push(FpPoly::monomial(nv, i, big_n));
    }
    let gb = GroebnerBasisFp::compute(p, nv, gens, budget)?;
    Ok(gb.count_standard_monomials(big_n))
}
