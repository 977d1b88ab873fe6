//! Integer lattices in Hermite normal form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;
use super::snf::cokernel_invariants;

/// Row-echelon basis with positive pivots and reduced entries above each pivot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    dim: usize,
    rows: Vec<Vec<BigInt>>,
}

fn lead(v: &[BigInt]) -> Option<usize> {
    v.iter().position(|x| !x.is_zero())
}

impl Lattice {
    pub fn zero(dim: usize) -> Self {
        Lattice {
            dim,
            rows: Vec::new(),
        }
    }

    pub fn full(dim: usize) -> Self {
        let mut l = Self::zero(dim);
        for i in 0..dim {
            let mut e = vec![BigInt::zero(); dim];
            e[i] = BigInt::from(1);
            l.rows.push(e);
        }
        l
    }

    pub fn from_generators<I: IntoIterator<Item = Vec<BigInt>>>(dim: usize, gens: I) -> Self {
        let mut l = Self::zero(dim);
        for g in gens {
            l.insert(g);
        }
        l
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn insert(&mut self, mut v: Vec<BigInt>) {
        assert_eq!(v.len(), self.dim);
        while let Some(c) = lead(&v) {
            match self.rows.iter().position(|r| lead(r) == Some(c)) {
                None => {
                    let at = self
                        .rows
                        .iter()
                        .position(|r| lead(r).is_some_and(|rc| rc > c))
                        .unwrap_or(self.rows.len());
                    self.rows.insert(at, v);
                    break;
                }
                Some(i) => {
                    let b = &self.rows[i];
                    let (bc, vc) = (b[c].clone(), v[c].clone());
                    let e = bc.extended_gcd(&vc);
                    let (g, s, t) = (e.gcd, e.x, e.y);
                    let nb: Vec<BigInt> = b.iter().zip(&v).map(|(x, y)| &s * x + &t * y).collect();
                    let (bq, vq) = (&bc / &g, &vc / &g);
                    let nv: Vec<BigInt> = v.iter().zip(b).map(|(y, x)| &bq * y - &vq * x).collect();
                    self.rows[i] = nb;
                    v = nv;
                }
            }
        }
        self.normalize();
    }

    fn normalize(&mut self) {
        for i in 0..self.rows.len() {
            let c = lead(&self.rows[i]).unwrap();
            if self.rows[i][c].is_negative() {
                for x in &mut self.rows[i] {
                    *x = -&*x;
                }
            }
            let piv = self.rows[i][c].clone();
            for j in 0..i {
                let q = self.rows[j][c].div_floor(&piv);
                if !q.is_zero() {
                    let r = self.rows[i].clone();
                    for (x, y) in self.rows[j].iter_mut().zip(&r) {
                        *x -= &q * y;
                    }
                }
            }
        }
    }

    /// Coordinates of `v` in the basis, if `v` lies in the lattice.
    pub fn coords(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        let mut v = v.to_vec();
        let mut out = Vec::with_capacity(self.rows.len());
        for r in &self.rows {
            let c = lead(r).unwrap();
            let (q, rem) = v[c].div_rem(&r[c]);
            if !rem.is_zero() {
                return None;
            }
            if !q.is_zero() {
                for (x, y) in v.iter_mut().zip(r) {
                    *x -= &q * y;
                }
            }
            out.push(q);
        }
        v.iter().all(|x| x.is_zero()).then_some(out)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.coords(v).is_some()
    }

    pub fn contains_lattice(&self, o: &Lattice) -> bool {
        o.rows.iter().all(|r| self.contains(r))
    }

    pub fn sum(&self, o: &Lattice) -> Lattice {
        let mut l = self.clone();
        for r in &o.rows {
            l.insert(r.clone());
        }
        l
    }

    /// Invariant factors of `self / inner`, zeros for free summands.
    pub fn quotient_invariants(&self, inner: &Lattice) -> Vec<BigInt> {
        let k = self.rank();
        if inner.rank() == 0 {
            return vec![BigInt::zero(); k];
        }
        let rows: Vec<Vec<BigInt>> = inner
            .rows
            .iter()
            .map(|r| self.coords(r).expect("inner lattice not contained in outer"))
            .collect();
        let m = IntMatrix::from_rows(rows);
        if k == 0 {
            return Vec::new();
        }
        cokernel_invariants(&m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn hnf_and_membership() {
        let l = Lattice::from_generators(2, vec![v(&[4, 6]), v(&[6, 4])]);
        assert_eq!(l.rank(), 2);
        assert!(l.contains(&v(&[10, 10])));
        assert!(l.contains(&v(&[2, -2])));
        assert!(!l.contains(&v(&[1, 0])));
        let q = Lattice::full(2).quotient_invariants(&l);
        assert_eq!(q, v(&[2, 10]));
    }
}
