//! Sparse multivariate polynomials over `Z`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::cyclotomic::CycNumber;

/// Exponent vectors carry no trailing zeros, so the number of variables is implicit.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Vec<u32>, BigInt>,
}

fn trim(mut e: Vec<u32>) -> Vec<u32> {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

impl MultiPoly {
    pub fn constant(c: BigInt) -> Self {
        let mut p = Self::zero();
        p.add_term(Vec::new(), c);
        p
    }

    /// The variable `x_{i+1}`.
    pub fn var(i: usize) -> Self {
        let mut e = vec![0; i + 1];
        e[i] = 1;
        let mut p = Self::zero();
        p.add_term(e, BigInt::one());
        p
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = trim(exps);
        let slot = self.terms.entry(e.clone()).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[u32]) -> BigInt {
        self.terms
            .get(&trim(exps.to_vec()))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn nvars(&self) -> usize {
        self.terms.keys().map(|e| e.len()).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Weighted degree where `x_i` has weight `w[i]`.
    pub fn weighted_degree(&self, w: &[u32]) -> Option<u32> {
        self.terms
            .keys()
            .map(|e| e.iter().zip(w).map(|(a, b)| a * b).sum())
            .max()
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    pub fn eval_int(&self, vals: &[BigInt]) -> BigInt {
        let mut s = BigInt::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.iter().enumerate() {
                t *= num_traits::pow(vals[i].clone(), k as usize);
            }
            s += t;
        }
        s
    }

    pub fn eval_cyc(&self, vals: &[CycNumber]) -> CycNumber {
        let f = vals[0].field().clone();
        let maxdeg: Vec<u32> = (0..vals.len())
            .map(|i| self.terms.keys().map(|e| e.get(i).copied().unwrap_or(0)).max().unwrap_or(0))
            .collect();
        let powers: Vec<Vec<CycNumber>> = vals
            .iter()
            .zip(&maxdeg)
            .map(|(v, &d)| {
                let mut ps = vec![CycNumber::one(&f)];
                for k in 1..=d as usize {
                    let next = &ps[k - 1] * v;
                    ps.push(next);
                }
                ps
            })
            .collect();
        let mut s = CycNumber::zero(&f);
        for (e, c) in &self.terms {
            let mut t = CycNumber::from_int(&f, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = &t * &powers[i][k as usize];
                }
            }
            s = &s + &t;
        }
        s
    }

    /// Substitutes `x_i -> x_i + shift[i]`.
    pub fn translate(&self, shift: &[BigInt]) -> Self {
        let n = self.nvars().max(shift.len());
        let lin: Vec<MultiPoly> = (0..n)
            .map(|i| {
                let s = shift.get(i).cloned().unwrap_or_else(BigInt::zero);
                &Self::var(i) + &Self::constant(s)
            })
            .collect();
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut t = Self::constant(c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = &t * &lin[i].pow(k);
                }
            }
            out = &out + &t;
        }
        out
    }
}

impl Zero for MultiPoly {
    fn zero() -> Self {
        MultiPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for MultiPoly {
    fn one() -> Self {
        Self::constant(BigInt::one())
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, o: Self) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, o: Self) -> MultiPoly {
        self + &(-o)
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, o: Self) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                let n = ea.len().max(eb.len());
                let e: Vec<u32> = (0..n)
                    .map(|i| ea.get(i).unwrap_or(&0) + eb.get(i).unwrap_or(&0))
                    .collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, o: Self) -> MultiPoly {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        // highest total degree first
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            db.cmp(&da).then(b.0.cmp(a.0))
        });
        for (e, c) in terms {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, k)
                    }
                })
                .collect();
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            if mono.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                f.write_str(&mono.join("*"))?;
            } else {
                write!(f, "{a}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let x = MultiPoly::var(0);
        let y = MultiPoly::var(1);
        let p = &(&x + &y) * &(&x - &y);
        assert_eq!(p, &x.pow(2) - &y.pow(2));
        assert_eq!(p.to_string(), "x1^2 - x2^2");
        assert_eq!(p.nvars(), 2);
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn translation_and_evaluation() {
        let x = MultiPoly::var(0);
        let y = MultiPoly::var(1);
        let p = &(&x * &y) + &MultiPoly::constant(BigInt::from(3));
        let q = p.translate(&[BigInt::from(1), BigInt::from(-2)]);
        let v = [BigInt::from(4), BigInt::from(7)];
        let shifted = [BigInt::from(5), BigInt::from(5)];
        assert_eq!(q.eval_int(&v), p.eval_int(&shifted));
    }
}
