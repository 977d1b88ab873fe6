//! The `Sym^k` family, `Sym^k(x) = U_k(x/2)`, and its shifted variant `sigma^k(y) = Sym^k(y + 2)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::{CycField, CycNumber, UniPoly};

/// `Sym^0 = 1`, `Sym^1 = x`, `x Sym^k = Sym^{k+1} + Sym^{k-1}`.
pub fn sym(k: usize) -> UniPoly<BigInt> {
    sym_list(k).pop().unwrap()
}

/// `[Sym^0, ..., Sym^k]`.
pub fn sym_list(k: usize) -> Vec<UniPoly<BigInt>> {
    let x = UniPoly::<BigInt>::x();
    let mut out = vec![UniPoly::one()];
    if k >= 1 {
        out.push(x.clone());
    }
    for i in 2..=k {
        let next = &(&x * &out[i - 1]) - &out[i - 2];
        out.push(next);
    }
    out
}

/// Composition `p(q(x))`.
pub fn compose(p: &UniPoly<BigInt>, q: &UniPoly<BigInt>) -> UniPoly<BigInt> {
    p.coeffs()
        .iter()
        .rev()
        .fold(UniPoly::zero(), |acc, c| &(&acc * q) + &UniPoly::constant(c.clone()))
}

/// `sigma^k(y) = Sym^k(y + 2)`.
pub fn sigma(k: usize) -> UniPoly<BigInt> {
    compose(&sym(k), &UniPoly::from_i64(&[2, 1]))
}

/// `Sym^{m-1}` at the point `zeta_{2m}^k + zeta_{2m}^{-k}`; zero for `1 <= k <= m-1`.
pub fn sym_root_check(m: u64, k: i64) -> CycNumber {
    let f = CycField::new(2 * m);
    let pt = &CycNumber::zeta_pow(&f, k) + &CycNumber::zeta_pow(&f, -k);
    eval_cyc(&sym(m as usize - 1), &pt)
}

pub fn eval_cyc(p: &UniPoly<BigInt>, x: &CycNumber) -> CycNumber {
    let f = x.field().clone();
    p.coeffs().iter().rev().fold(CycNumber::zero(&f), |acc, c| {
        &(&acc * x) + &CycNumber::from_int(&f, c.clone())
    })
}

/// Whether `(t^2 - t x + 1) * sum_i Sym^i(x) t^i = 1` modulo `t^{depth+1}`.
pub fn generating_identity_check(depth: usize) -> bool {
    let syms = sym_list(depth);
    let x = UniPoly::<BigInt>::x();
    (0..=depth).all(|d| {
        // coefficient of t^d
        let mut c = syms[d].clone();
        if d >= 1 {
            c = &c - &(&x * &syms[d - 1]);
        }
        if d >= 2 {
            c = &c + &syms[d - 2];
        }
        if d == 0 {
            c.is_one()
        } else {
            c.is_zero()
        }
    })
}

/// `(zeta^{i(j+1)} - zeta^{-i(j+1)}) / (zeta^i - zeta^{-i})` with `zeta = zeta_{2m}`.
pub fn sym_closed_form(m: u64, i: i64, j: i64) -> crate::Result<CycNumber> {
    let f = CycField::new(2 * m);
    let z = |e: i64| CycNumber::zeta_pow(&f, e);
    let num = &z(i * (j + 1)) - &z(-i * (j + 1));
    let den = &z(i) - &z(-i);
    Ok(&num * &den.inv()?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_terms() {
        assert_eq!(sym(0), UniPoly::one());
        assert_eq!(sym(2), UniPoly::from_i64(&[-1, 0, 1]));
        assert_eq!(sym(3), UniPoly::from_i64(&[0, -2, 0, 1]));
        assert_eq!(sym(6).eval(&BigInt::from(2)), BigInt::from(7));
    }

    #[test]
    fn sigma_constant_term() {
        assert_eq!(sigma(0), UniPoly::one());
        assert_eq!(sigma(1), UniPoly::from_i64(&[2, 1]));
        assert_eq!(sigma(3).coeff(0), BigInt::from(4));
        for m in 2..20 {
            assert_eq!(sigma(m - 1).coeff(0), BigInt::from(m as i64));
        }
    }

    #[test]
    fn roots() {
        assert!(sym_root_check(3, 1).is_zero());
        assert!(sym_root_check(4, 2).is_zero());
        assert!(sym_root_check(5, 3).is_zero());
        assert!(!sym_root_check(5, 5).is_zero());
    }

    #[test]
    fn generating_function() {
        assert!(generating_identity_check(0));
        assert!(generating_identity_check(5));
        assert!(generating_identity_check(20));
    }
}
