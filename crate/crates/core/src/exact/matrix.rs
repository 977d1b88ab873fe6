//! Integer matrices, fraction-free determinants and exact cyclotomic solves.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::cyclotomic::CycNumber;
use super::poly::Ring;
use crate::error::{Error, Result};

/// Dense row-major matrix over `Z`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, o: Self) -> IntMatrix {
        assert_eq!(self.cols, o.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    out[(i, j)] += a * &o[(k, j)];
                }
            }
        }
        out
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let r: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", r.join(", "))?;
        }
        Ok(())
    }
}

/// Bareiss fraction-free determinant of a square integer matrix.
pub fn det_bareiss(m: &IntMatrix) -> BigInt {
    assert_eq!(m.rows, m.cols, "determinant of non-square matrix");
    let n = m.rows;
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                Some(i) => {
                    a.swap_rows(k, i);
                    sign = !sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                a[(i, j)] = v;
            }
        }
        prev = a[(k, k)].clone();
    }
    let d = a[(n - 1, n - 1)].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// Determinant by expansion over column subsets; any commutative ring, `n <= 20`.
pub fn det_minors<R: Ring>(m: &[Vec<R>]) -> R {
    let n = m.len();
    assert!(n <= 20, "matrix too large for minor expansion");
    assert!(m.iter().all(|r| r.len() == n), "non-square matrix");
    if n == 0 {
        return R::one();
    }
    let mut dp: Vec<Option<R>> = vec![None; 1 << n];
    dp[0] = Some(R::one());
    for mask in 0usize..(1 << n) {
        let Some(val) = dp[mask].take() else { continue };
        if val.is_zero() {
            continue;
        }
        let row = mask.count_ones() as usize;
        if row == n {
            dp[mask] = Some(val);
            continue;
        }
        for c in 0..n {
            if mask & (1 << c) != 0 || m[row][c].is_zero() {
                continue;
            }
            let above = (mask >> (c + 1)).count_ones();
            let term = val.clone() * m[row][c].clone();
            let term = if above % 2 == 1 { -term } else { term };
            let slot = &mut dp[mask | (1 << c)];
            *slot = Some(match slot.take() {
                Some(s) => s + term,
                None => term,
            });
        }
    }
    dp[(1 << n) - 1].take().unwrap_or_else(R::zero)
}

/// Gauss-Jordan elimination on `[a | b]`, returning `x` with `a x = b` column by column.
pub fn solve_many(a: &[Vec<CycNumber>], b: &[Vec<CycNumber>]) -> Result<Vec<Vec<CycNumber>>> {
    let n = a.len();
    assert!(a.iter().all(|r| r.len() == n), "non-square system");
    assert_eq!(b.len(), n, "right-hand side has wrong length");
    let mut rows: Vec<Vec<CycNumber>> = a
        .iter()
        .zip(b)
        .map(|(r, rhs)| r.iter().chain(rhs.iter()).cloned().collect())
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .filter(|&i| !rows[i][col].is_zero())
            .min_by_key(|&i| weight(&rows[i][col]))
            .ok_or(Error::SingularMatrix)?;
        rows.swap(col, piv);
        let inv = rows[col][col].inv()?;
        let prow: Vec<CycNumber> = rows[col].iter().map(|x| x * &inv).collect();
        rows.par_iter_mut().enumerate().for_each(|(i, r)| {
            if i == col || r[col].is_zero() {
                return;
            }
            let f = r[col].clone();
            for (x, p) in r.iter_mut().zip(&prow).skip(col) {
                if !p.is_zero() {
                    *x = &*x - &(&f * p);
                }
            }
        });
        rows[col] = prow;
    }
    Ok(rows.into_iter().map(|r| r[n..].to_vec()).collect())
}

fn weight(x: &CycNumber) -> usize {
    x.coeffs()
        .iter()
        .map(|c| (c.numer().bits() + c.denom().bits()) as usize)
        .sum()
}

/// Solves `a x = b` exactly over `Q(zeta_N)`.
pub fn solve_exact(a: &[Vec<CycNumber>], b: &[CycNumber]) -> Result<Vec<CycNumber>> {
    let rhs: Vec<Vec<CycNumber>> = b.iter().map(|x| vec![x.clone()]).collect();
    Ok(solve_many(a, &rhs)?.into_iter().map(|mut r| r.remove(0)).collect())
}

/// Exact inverse over `Q(zeta_N)`.
pub fn inverse_exact(a: &[Vec<CycNumber>]) -> Result<Vec<Vec<CycNumber>>> {
    let n = a.len();
    let f = a
        .first()
        .and_then(|r| r.first())
        .map(|x| x.field().clone())
        .ok_or(Error::SingularMatrix)?;
    let id: Vec<Vec<CycNumber>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        CycNumber::one(&f)
                    } else {
                        CycNumber::zero(&f)
                    }
                })
                .collect()
        })
        .collect();
    solve_many(a, &id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::cyclotomic::CycField;

    #[test]
    fn bareiss_small() {
        let m = IntMatrix::from_i64(&[vec![2, 0, 1], vec![1, 3, 2], vec![1, 1, 2]]);
        assert_eq!(det_bareiss(&m), BigInt::from(6));
        let z = IntMatrix::from_i64(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(det_bareiss(&z), BigInt::from(-1));
        let s = IntMatrix::from_i64(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(det_bareiss(&s), BigInt::zero());
    }

    #[test]
    fn minors_agree_with_bareiss() {
        let rows = vec![
            vec![3, -1, 4, 1],
            vec![5, 9, -2, 6],
            vec![5, 3, 5, -8],
            vec![9, 7, 9, 3],
        ];
        let m = IntMatrix::from_i64(&rows);
        let big: Vec<Vec<BigInt>> = m.to_rows();
        assert_eq!(det_minors(&big), det_bareiss(&m));
    }

    #[test]
    fn one_by_one_cyclotomic_solve() {
        let f = CycField::new(4);
        let i = CycNumber::zeta_pow(&f, 1);
        let x = solve_exact(&[vec![i.clone()]], &[CycNumber::one(&f)]).unwrap();
        assert!((&i * &x[0]).is_one());
        assert_eq!(x[0], CycNumber::zeta_pow(&f, 3));
    }

    #[test]
    fn singular_system() {
        let f = CycField::new(3);
        let one = CycNumber::one(&f);
        let a = vec![vec![one.clone(), one.clone()], vec![one.clone(), one.clone()]];
        assert_eq!(
            solve_exact(&a, &[one.clone(), one]),
            Err(Error::SingularMatrix)
        );
    }
}
