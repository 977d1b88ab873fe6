//! Dense univariate polynomials over a commutative ring.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Commutative ring operations needed by [`UniPoly`].
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

/// Coefficients in increasing degree, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct UniPoly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> UniPoly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::monomial(R::one(), 1)
    }

    pub fn monomial(c: R, d: usize) -> Self {
        let mut v = vec![R::zero(); d + 1];
        v[d] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn shift(&self, d: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![R::zero(); d];
        v.extend(self.coeffs.iter().cloned());
        Self::new(v)
    }

    /// Reduction modulo `x^n`.
    pub fn truncate(&self, n: usize) -> Self {
        Self::new(self.coeffs.iter().take(n).cloned().collect())
    }

    pub fn eval(&self, x: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Product truncated modulo `x^n`.
    pub fn mul_trunc(&self, other: &Self, n: usize) -> Self {
        let mut v = vec![R::zero(); n.min(self.coeffs.len() + other.coeffs.len())];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= v.len() {
                    break;
                }
                v[i + j] = v[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(v)
    }

    /// Power series inverse modulo `x^n`; `c0_inv` is the inverse of the constant term.
    pub fn inverse_series(&self, n: usize, c0_inv: &R) -> Self {
        let mut inv: Vec<R> = Vec::with_capacity(n);
        for k in 0..n {
            let mut s = if k == 0 { R::one() } else { R::zero() };
            for j in 1..=k {
                s = s - self.coeff(j) * inv[k - j].clone();
            }
            inv.push(s * c0_inv.clone());
        }
        Self::new(inv)
    }

    /// Division by a polynomial with unit leading coefficient `lead_inv^{-1}`.
    pub fn div_rem_unit(&self, d: &Self, lead_inv: &R) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![R::zero(); r.len() - dd];
        for i in (dd..r.len()).rev() {
            let c = r[i].clone() * lead_inv.clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[i - dd + j] = r[i - dd + j].clone() - c.clone() * dc.clone();
            }
            q[i - dd] = c;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }
}

impl UniPoly<BigInt> {
    pub fn from_i64(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Division by a monic (or leading `-1`) polynomial.
    pub fn div_rem_monic(&self, d: &Self) -> (Self, Self) {
        let lead = d.leading().expect("division by zero polynomial").clone();
        assert!(lead.abs().is_one(), "divisor must have unit leading coefficient");
        self.div_rem_unit(d, &lead)
    }

    pub fn to_rational(&self) -> UniPoly<BigRational> {
        UniPoly::new(
            self.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn fmt_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if mono.is_empty() {
                s.push_str(&a.to_string());
            } else if a.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&format!("{a}*{mono}"));
            }
        }
        s
    }
}

impl UniPoly<BigRational> {
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let lead = d.leading().expect("division by zero polynomial");
        self.div_rem_unit(d, &lead.recip())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// Returns `(g, s, t)` with `s*a + t*b = g`, `g` monic.
    pub fn ext_gcd(a: &Self, b: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s2 = &s0 - &(&q * &s1);
            s0 = std::mem::replace(&mut s1, s2);
            let t2 = &t0 - &(&q * &t1);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let inv = match r0.leading() {
            Some(l) => l.recip(),
            None => return (r0, s0, t0),
        };
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }
}

impl fmt::Display for UniPoly<BigInt> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_var("x"))
    }
}

impl<R: Ring> Zero for UniPoly<R> {
    fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<R: Ring> One for UniPoly<R> {
    fn one() -> Self {
        Self::constant(R::one())
    }
}

impl<R: Ring> Add for &UniPoly<R> {
    type Output = UniPoly<R>;
    fn add(self, o: Self) -> UniPoly<R> {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl<R: Ring> Sub for &UniPoly<R> {
    type Output = UniPoly<R>;
    fn sub(self, o: Self) -> UniPoly<R> {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl<R: Ring> Mul for &UniPoly<R> {
    type Output = UniPoly<R>;
    fn mul(self, o: Self) -> UniPoly<R> {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut v = vec![R::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].clone() + a.clone() * b.clone();
            }
        }
        UniPoly::new(v)
    }
}

impl<R: Ring> Neg for &UniPoly<R> {
    type Output = UniPoly<R>;
    fn neg(self) -> UniPoly<R> {
        UniPoly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<R: Ring> $tr for UniPoly<R> {
            type Output = UniPoly<R>;
            fn $m(self, o: Self) -> UniPoly<R> {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<R: Ring> Neg for UniPoly<R> {
    type Output = UniPoly<R>;
    fn neg(self) -> UniPoly<R> {
        -&self
    }
}
