//! Generators of the representation ring adapted to the augmentation filtration.

use num_bigint::BigInt;
use num_traits::Zero;

use super::character::elementary_poly;
use crate::exact::arith::binomial_gen;
use crate::exact::{MultiPoly, UniPoly};
use crate::sym::sym_list;

/// `gamma_1 = x - 2n`; `gamma_{i+1}` is the `t^{i+1}` coefficient of
/// `1 / ((1+t)^{2n-2i} (t^2 - t x + 1))`, one variable.
pub fn gamma_polynomials(n: u32) -> Vec<UniPoly<BigInt>> {
    let syms = sym_list(n as usize + 1);
    let mut out = vec![UniPoly::from_i64(&[-2 * n as i64, 1])];
    for i in 1..n as i64 {
        let c = 2 * n as i64 - 2 * i;
        let mut g = UniPoly::zero();
        for j in 0..=i + 1 {
            let w = binomial_gen(-c, j);
            g = &g + &syms[(i + 1 - j) as usize].scale(&w);
        }
        out.push(g);
    }
    out
}

/// `Lambda^k(x)` in the one-variable model: `sum_j Sym^{k-2j}(x)`.
fn exterior_one_var(syms: &[UniPoly<BigInt>], k: i64) -> UniPoly<BigInt> {
    let mut s = UniPoly::zero();
    let mut j = k;
    while j >= 0 {
        s = &s + &syms[j as usize];
        j -= 2;
    }
    s
}

/// `Lambda^k(x - c)` through `Lambda_t(x) (1+t)^{-c}`.
fn exterior_shifted<T, F, S>(k: i64, c: i64, ext: F, scale: S) -> T
where
    T: crate::exact::poly::Ring,
    F: Fn(i64) -> T,
    S: Fn(T, &BigInt) -> T,
{
    let mut s = T::zero();
    for j in 0..=k {
        let w = binomial_gen(-c, j);
        if !w.is_zero() {
            s = s + scale(ext(k - j), &w);
        }
    }
    s
}

/// Same polynomials as [`gamma_polynomials`], from `Lambda^{i+1}(x-c) - Lambda^{i-1}(x-c)`.
pub fn gamma_via_exterior(n: u32) -> Vec<UniPoly<BigInt>> {
    let syms = sym_list(n as usize + 1);
    let mut out = vec![UniPoly::from_i64(&[-2 * n as i64, 1])];
    for i in 1..n as i64 {
        let c = 2 * n as i64 - 2 * i;
        let ext = |k: i64| exterior_one_var(&syms, k);
        let scale = |p: UniPoly<BigInt>, w: &BigInt| p.scale(w);
        let a = exterior_shifted(i + 1, c, ext, scale);
        let b = exterior_shifted(i - 1, c, ext, scale);
        out.push(&a - &b);
    }
    out
}

/// The generators in the full representation ring `Z[x_1..x_n]`, `Lambda^k(x) = e_k`.
pub fn gamma_multivariate(n: u32) -> Vec<MultiPoly> {
    let mut g1 = MultiPoly::var(0);
    g1.add_term(Vec::new(), BigInt::from(-2 * n as i64));
    let mut out = vec![g1];
    for i in 1..n as i64 {
        let c = 2 * n as i64 - 2 * i;
        let ext = |k: i64| elementary_poly(n, k);
        let scale = |p: MultiPoly, w: &BigInt| &p * &MultiPoly::constant(w.clone());
        let a = exterior_shifted(i + 1, c, ext, scale);
        let b = exterior_shifted(i - 1, c, ext, scale);
        out.push(&a - &b);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_generators() {
        let g = gamma_polynomials(2);
        assert_eq!(g[0], UniPoly::from_i64(&[-4, 1]));
        assert_eq!(g[1], UniPoly::from_i64(&[2, -2, 1]));
        for n in 1..8 {
            let g = gamma_polynomials(n);
            assert_eq!(g.len(), n as usize);
            for (i, p) in g.iter().enumerate() {
                assert_eq!(p.degree(), Some(i + 1));
            }
        }
    }

    #[test]
    fn routes_agree() {
        for n in 1..9 {
            assert_eq!(gamma_polynomials(n), gamma_via_exterior(n));
        }
    }
}
