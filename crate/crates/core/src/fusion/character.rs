//! Irreducible Sp(n) characters as polynomials in the fundamental characters.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::label::SpLabel;
use crate::exact::arith::binomial;
use crate::exact::poly::Ring;
use crate::exact::{det_bareiss, det_minors, CycField, CycNumber, IntMatrix, MultiPoly};

/// Entry `k` of `(1, x_1, ..., x_n, 0, -x_n, ..., -x_1, -1)`, zero outside.
///
/// `x(k)` supplies the k-th fundamental character.
fn bent_seq<T: Ring>(n: i64, k: i64, x: &dyn Fn(usize) -> T) -> T {
    match k {
        0 => T::one(),
        k if 1 <= k && k <= n => x(k as usize),
        k if k == n + 1 => T::zero(),
        k if n + 2 <= k && k <= 2 * n + 1 => -x((2 * n + 2 - k) as usize),
        k if k == 2 * n + 2 => -T::one(),
        _ => T::zero(),
    }
}

/// Row `i` is the sequence bent at `mu_i - i + 1`, truncated to `q` terms.
fn bent_matrix<T: Ring>(n: u32, lambda: &SpLabel, x: &dyn Fn(usize) -> T) -> Vec<Vec<T>> {
    let mu = lambda.conjugate();
    let q = mu.len();
    let n = n as i64;
    (0..q)
        .map(|i| {
            let s = mu[i] as i64 - i as i64;
            (0..q as i64)
                .map(|j| {
                    if j == 0 {
                        bent_seq(n, s, x)
                    } else {
                        bent_seq(n, s + j, x) + bent_seq(n, s - j, x)
                    }
                })
                .collect()
        })
        .collect()
}

/// `e_k` of the 2n weights of the standard representation, from `x(.)`.
fn elementary<T: Ring>(n: i64, k: i64, x: &dyn Fn(usize) -> T) -> T {
    if k < 0 || k > 2 * n {
        return T::zero();
    }
    let k = if k > n { 2 * n - k } else { k };
    let mut s = T::zero();
    let mut j = k;
    while j >= 0 {
        s = s + if j == 0 { T::one() } else { x(j as usize) };
        j -= 2;
    }
    s
}

fn kt_matrix<T: Ring>(lambda: &SpLabel, e: &dyn Fn(i64) -> T) -> Vec<Vec<T>> {
    let mu = lambda.conjugate();
    let q = mu.len();
    (0..q)
        .map(|i| {
            let s = mu[i] as i64 - i as i64;
            (0..q as i64).map(|j| e(s + j) - e(s - j - 2)).collect()
        })
        .collect()
}

fn check_rows(n: u32, lambda: &SpLabel) {
    assert!(
        lambda.num_rows() <= n as usize,
        "{lambda} has more than {n} rows"
    );
}

/// Character of `lambda` as an integer polynomial in `x_1..x_n`.
pub fn bent_character_poly(n: u32, lambda: &SpLabel) -> MultiPoly {
    check_rows(n, lambda);
    let x = |k: usize| MultiPoly::var(k - 1);
    det_minors(&bent_matrix(n, lambda, &x))
}

/// Same character from `det(e_{s+j-1} - e_{s-j-1})`, `e_k` written in the `x_i`.
pub fn kt_character_poly(n: u32, lambda: &SpLabel) -> MultiPoly {
    check_rows(n, lambda);
    let x = |k: usize| MultiPoly::var(k - 1);
    let e = |k: i64| elementary(n as i64, k, &x);
    det_minors(&kt_matrix(lambda, &e))
}

/// `e_k` of the standard weights as a polynomial in the `x_i`.
pub fn elementary_poly(n: u32, k: i64) -> MultiPoly {
    let x = |k: usize| MultiPoly::var(k - 1);
    elementary(n as i64, k, &x)
}

/// `dim x_k = C(2n,k) - C(2n,k-2)`, for `k = 1..n`.
pub fn fundamental_dims(n: u32) -> Vec<BigInt> {
    let n2 = 2 * n as i64;
    (1..=n as i64)
        .map(|k| binomial(n2, k) - binomial(n2, k - 2))
        .collect()
}

/// Dimension from the bent determinant at the dimension point.
pub fn dimension(n: u32, lambda: &SpLabel) -> BigInt {
    check_rows(n, lambda);
    let d = fundamental_dims(n);
    let x = |k: usize| d[k - 1].clone();
    det_bareiss(&IntMatrix::from_rows(bent_matrix(n, lambda, &x)))
}

/// Dimension from the elementary-symmetric determinant with `e_k = C(2n,k)`.
pub fn dimension_kt(n: u32, lambda: &SpLabel) -> BigInt {
    check_rows(n, lambda);
    let e = |k: i64| binomial(2 * n as i64, k);
    det_bareiss(&IntMatrix::from_rows(kt_matrix(lambda, &e)))
}

/// Elementary symmetric functions `e_0..e_{2n}` of `{t_j, t_j^{-1}}`.
pub fn elementary_values(points: &[CycNumber]) -> Vec<CycNumber> {
    let f = points[0].field().clone();
    let mut e = vec![CycNumber::one(&f)];
    for p in points {
        let pi = p.inv().expect("roots of unity are invertible");
        for z in [p.clone(), pi] {
            e.push(CycNumber::zero(&f));
            for k in (1..e.len()).rev() {
                e[k] = &e[k] + &(&e[k - 1] * &z);
            }
        }
    }
    e
}

/// `x_k(I) = e_k(Z) - e_{k-2}(Z)` with `Z = {zeta_{2m}^{+-i_j}}`.
pub fn fundamental_char_values(m: u32, n: u32, set: &[u32]) -> Vec<CycNumber> {
    assert_eq!(set.len(), n as usize);
    let f = CycField::new(2 * m as u64);
    let pts: Vec<CycNumber> = set
        .iter()
        .map(|&i| CycNumber::zeta_pow(&f, i as i64))
        .collect();
    let e = elementary_values(&pts);
    (1..=n as usize)
        .map(|k| {
            if k >= 2 {
                &e[k] - &e[k - 2]
            } else {
                e[k].clone()
            }
        })
        .collect()
}

/// Character value of a polynomial in `x_1..x_n` at an evaluation set.
pub fn character_value(m: u32, n: u32, poly: &MultiPoly, set: &[u32]) -> CycNumber {
    let xs = fundamental_char_values(m, n, set);
    if poly.is_zero() {
        return CycNumber::zero(xs[0].field());
    }
    if poly.is_one() {
        return CycNumber::one(xs[0].field());
    }
    poly.eval_cyc(&xs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sym::sym;

    fn sym_as_multi(k: usize) -> MultiPoly {
        let mut p = MultiPoly::zero();
        for (i, c) in sym(k).coeffs().iter().enumerate() {
            let mut e = vec![0u32; 1];
            e[0] = i as u32;
            p.add_term(e, c.clone());
        }
        p
    }

    #[test]
    fn trivial_and_columns() {
        assert!(bent_character_poly(3, &SpLabel::empty()).is_one());
        for n in 1..5 {
            for k in 1..=n as usize {
                assert_eq!(bent_character_poly(n, &SpLabel::column(k)), MultiPoly::var(k - 1));
            }
        }
    }

    #[test]
    fn rank_one_is_sym() {
        for k in 0..8u32 {
            assert_eq!(bent_character_poly(1, &SpLabel::row(k)), sym_as_multi(k as usize));
        }
    }

    #[test]
    fn two_routes_agree() {
        for n in 1..4u32 {
            for q in 0..4u32 {
                for l in super::super::label::level_labels(n, q) {
                    assert_eq!(bent_character_poly(n, &l), kt_character_poly(n, &l), "{l}");
                    assert_eq!(dimension(n, &l), dimension_kt(n, &l));
                }
            }
        }
    }

    #[test]
    fn fundamental_values_rank_one() {
        let f = CycField::new(10);
        let v = fundamental_char_values(5, 1, &[2]);
        let expect = &CycNumber::zeta_pow(&f, 2) + &CycNumber::zeta_pow(&f, -2);
        assert_eq!(v, vec![expect]);
    }

    #[test]
    fn fundamental_values_brute_force() {
        // m=5, n=2, I={1,2}: expand e_k over all subsets
        let f = CycField::new(10);
        let z: Vec<CycNumber> = [1i64, -1, 2, -2]
            .iter()
            .map(|&e| CycNumber::zeta_pow(&f, e))
            .collect();
        let mut e = vec![CycNumber::zero(&f); 5];
        for mask in 0u32..16 {
            let mut prod = CycNumber::one(&f);
            for (i, zi) in z.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    prod = &prod * zi;
                }
            }
            let k = mask.count_ones() as usize;
            e[k] = &e[k] + &prod;
        }
        let v = fundamental_char_values(5, 2, &[1, 2]);
        assert_eq!(v[0], e[1]);
        assert_eq!(v[1], &e[2] - &e[0]);
    }

    #[test]
    fn dims_of_fundamentals() {
        assert_eq!(
            fundamental_dims(3),
            vec![BigInt::from(6), BigInt::from(14), BigInt::from(14)]
        );
    }
}
