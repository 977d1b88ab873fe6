//! Smith normal form with unimodular transforms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

/// `u * m * v = diag(diagonal)` with `u`, `v` unimodular.
#[derive(Clone, Debug)]
pub struct SnfResult {
    pub diagonal: Vec<BigInt>,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SnfResult {
    /// The diagonal as an `m.rows() x m.cols()` matrix.
    pub fn diagonal_matrix(&self) -> IntMatrix {
        let mut d = IntMatrix::zeros(self.u.rows(), self.v.rows());
        for (i, x) in self.diagonal.iter().enumerate() {
            d[(i, i)] = x.clone();
        }
        d
    }
}

struct Work {
    a: IntMatrix,
    u: Option<IntMatrix>,
    v: Option<IntMatrix>,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some(u) = &mut self.u {
            u.swap_rows(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        if let Some(v) = &mut self.v {
            v.swap_cols(i, j);
        }
    }

    /// row_dst += q * row_src
    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        fn go(m: &mut IntMatrix, dst: usize, src: usize, q: &BigInt) {
            for j in 0..m.cols() {
                let s = &m[(src, j)] * q;
                if !s.is_zero() {
                    m[(dst, j)] += s;
                }
            }
        }
        go(&mut self.a, dst, src, q);
        if let Some(u) = &mut self.u {
            go(u, dst, src, q);
        }
    }

    /// col_dst += q * col_src
    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        fn go(m: &mut IntMatrix, dst: usize, src: usize, q: &BigInt) {
            for i in 0..m.rows() {
                let s = &m[(i, src)] * q;
                if !s.is_zero() {
                    m[(i, dst)] += s;
                }
            }
        }
        go(&mut self.a, dst, src, q);
        if let Some(v) = &mut self.v {
            go(v, dst, src, q);
        }
    }
}

fn run(m: &IntMatrix, transforms: bool) -> (Vec<BigInt>, Option<IntMatrix>, Option<IntMatrix>) {
    let (r, c) = (m.rows(), m.cols());
    let mut w = Work {
        a: m.clone(),
        u: transforms.then(|| IntMatrix::identity(r)),
        v: transforms.then(|| IntMatrix::identity(c)),
    };
    let k = r.min(c);
    let mut diag = Vec::with_capacity(k);
    for t in 0..k {
        loop {
            // smallest nonzero entry as pivot
            let mut best: Option<(usize, usize)> = None;
            for i in t..r {
                for j in t..c {
                    let x = &w.a[(i, j)];
                    if !x.is_zero()
                        && best.is_none_or(|(bi, bj)| x.abs() < w.a[(bi, bj)].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                diag.resize(k, BigInt::zero());
                return (diag, w.u, w.v);
            };
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);
            let p = w.a[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..r {
                let q = w.a[(i, t)].div_floor(&p);
                if !q.is_zero() {
                    w.add_row(i, t, &-q);
                }
                clean &= w.a[(i, t)].is_zero();
            }
            for j in t + 1..c {
                let q = w.a[(t, j)].div_floor(&p);
                if !q.is_zero() {
                    w.add_col(j, t, &-q);
                }
                clean &= w.a[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..r).find(|&i| {
                (t + 1..c).any(|j| !w.a[(i, j)].is_multiple_of(&p))
            });
            match bad {
                Some(i) => w.add_row(t, i, &BigInt::one()),
                None => break,
            }
        }
        if w.a[(t, t)].is_negative() {
            w.add_row(t, t, &BigInt::from(-2));
        }
        diag.push(w.a[(t, t)].clone());
    }
    (diag, w.u, w.v)
}

/// Smith normal form with transforms.
pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let (diagonal, u, v) = run(m, true);
    SnfResult {
        diagonal,
        u: u.unwrap(),
        v: v.unwrap(),
    }
}

/// Invariant factors only.
pub fn snf_diagonal(m: &IntMatrix) -> Vec<BigInt> {
    run(m, false).0
}

/// Invariant factors of the cokernel of `m` (rows are relations on `m.cols()` generators),
/// with zeros for free summands.
pub fn cokernel_invariants(m: &IntMatrix) -> Vec<BigInt> {
    let mut d = snf_diagonal(m);
    d.resize(m.cols(), BigInt::zero());
    d.retain(|x| !x.is_one());
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn textbook_example() {
        let m = IntMatrix::from_i64(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        let s = smith_normal_form(&m);
        assert_eq!(
            s.diagonal,
            vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]
        );
        assert_eq!(&(&s.u * &m) * &s.v, s.diagonal_matrix());
    }

    #[test]
    fn rectangular_and_rank_deficient() {
        let m = IntMatrix::from_i64(&[vec![1, 2, 3], vec![2, 4, 6]]);
        let s = smith_normal_form(&m);
        assert_eq!(s.diagonal, vec![BigInt::from(1), BigInt::zero()]);
        assert_eq!(&(&s.u * &m) * &s.v, s.diagonal_matrix());
        assert_eq!(cokernel_invariants(&m), vec![BigInt::zero(), BigInt::zero()]);
    }
}
