//! Cyclotomic polynomials and exact arithmetic in `Q(zeta_N)`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::arith::{divisors, totient};
use super::poly::UniPoly;
use crate::error::{Error, Result};

fn poly_cache() -> &'static Mutex<HashMap<u64, UniPoly<BigInt>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, UniPoly<BigInt>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn field_cache() -> &'static Mutex<HashMap<u64, Arc<CycField>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<CycField>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The n-th cyclotomic polynomial, memoised.
pub fn cyclotomic_poly(n: u64) -> UniPoly<BigInt> {
    assert!(n >= 1);
    if let Some(p) = poly_cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    let mut num = UniPoly::monomial(BigInt::one(), n as usize);
    num = &num - &UniPoly::one();
    for d in divisors(n) {
        if d < n {
            let (q, r) = num.div_rem_monic(&cyclotomic_poly(d));
            debug_assert!(r.is_zero());
            num = q;
        }
    }
    poly_cache().lock().unwrap().insert(n, num.clone());
    num
}

/// `Q(zeta_N)` presented as `Q[x]/Phi_N(x)`.
#[derive(Debug)]
pub struct CycField {
    order: u64,
    phi: usize,
    modulus: Vec<BigInt>,
}

impl CycField {
    pub fn new(order: u64) -> Arc<CycField> {
        assert!(order >= 1);
        if let Some(f) = field_cache().lock().unwrap().get(&order) {
            return f.clone();
        }
        let m = cyclotomic_poly(order);
        let field = Arc::new(CycField {
            order,
            phi: totient(order) as usize,
            modulus: m.coeffs().to_vec(),
        });
        debug_assert_eq!(field.phi + 1, field.modulus.len());
        field_cache()
            .lock()
            .unwrap()
            .insert(order, field.clone());
        field
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.phi
    }

    fn reduce(&self, mut v: Vec<BigInt>) -> Vec<BigInt> {
        let phi = self.phi;
        for i in (phi..v.len()).rev() {
            if v[i].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut v[i]);
            for j in 0..phi {
                if !self.modulus[j].is_zero() {
                    v[i - phi + j] -= &c * &self.modulus[j];
                }
            }
        }
        v.resize(phi, BigInt::zero());
        v
    }
}

/// Element of `Q(zeta_N)`: integer numerator in the power basis over a positive denominator.
#[derive(Clone, Debug)]
pub struct CycNumber {
    field: Arc<CycField>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl PartialEq for CycNumber {
    fn eq(&self, o: &Self) -> bool {
        self.field.order == o.field.order && self.den == o.den && self.num == o.num
    }
}
impl Eq for CycNumber {}

impl CycNumber {
    fn build(field: &Arc<CycField>, num: Vec<BigInt>, den: BigInt) -> Self {
        let mut x = CycNumber {
            field: field.clone(),
            num,
            den,
        };
        x.normalize();
        x
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -&self.den;
            for c in &mut self.num {
                *c = -&*c;
            }
        }
        let g = self.num.iter().fold(self.den.clone(), |g, c| g.gcd(c));
        if self.num.iter().all(|c| c.is_zero()) {
            self.den = BigInt::one();
        } else if !g.is_one() {
            for c in &mut self.num {
                *c /= &g;
            }
            self.den /= &g;
        }
    }

    pub fn zero(field: &Arc<CycField>) -> Self {
        Self::from_int(field, BigInt::zero())
    }

    pub fn one(field: &Arc<CycField>) -> Self {
        Self::from_int(field, BigInt::one())
    }

    pub fn from_int(field: &Arc<CycField>, c: BigInt) -> Self {
        let mut num = vec![BigInt::zero(); field.phi];
        num[0] = c;
        Self::build(field, num, BigInt::one())
    }

    pub fn from_rational(field: &Arc<CycField>, c: &BigRational) -> Self {
        let mut num = vec![BigInt::zero(); field.phi];
        num[0] = c.numer().clone();
        Self::build(field, num, c.denom().clone())
    }

    /// `zeta^k` for any integer `k`.
    pub fn zeta_pow(field: &Arc<CycField>, k: i64) -> Self {
        let e = k.rem_euclid(field.order as i64) as usize;
        let mut v = vec![BigInt::zero(); e + 1];
        v[e] = BigInt::one();
        Self::build(field, field.reduce(v), BigInt::one())
    }

    /// Element with the given rational power-basis coordinates.
    pub fn from_coeffs(field: &Arc<CycField>, coeffs: &[BigRational]) -> Self {
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let mut v: Vec<BigInt> = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        if v.len() < field.phi {
            v.resize(field.phi, BigInt::zero());
        }
        Self::build(field, field.reduce(v), den)
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn coeffs(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(|c| c.is_zero())
    }

    /// The value as a rational number, if it lies in `Q`.
    pub fn rational_value(&self) -> Option<BigRational> {
        if self.num[1..].iter().all(|c| c.is_zero()) {
            Some(BigRational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    /// The value as an integer, if it lies in `Z`.
    pub fn integer_value(&self) -> Option<BigInt> {
        self.rational_value()
            .filter(|r| r.is_integer())
            .map(|r| r.to_integer())
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::SingularMatrix);
        }
        let a = UniPoly::new(
            self.num
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        );
        let m = UniPoly::new(
            self.field
                .modulus
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        );
        let (g, s, _) = UniPoly::ext_gcd(&a, &m);
        debug_assert!(g.is_one());
        let s = s.scale(&BigRational::from_integer(self.den.clone()));
        Ok(Self::from_coeffs(&self.field, s.coeffs()))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(&self.field);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    fn same_field(&self, o: &Self) {
        assert_eq!(self.field.order, o.field.order, "mixed cyclotomic fields");
    }
}

impl fmt::Display for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = UniPoly::new(self.num.clone()).fmt_var("z");
        if self.den.is_one() {
            write!(f, "{p}")
        } else {
            write!(f, "({p})/{}", self.den)
        }
    }
}

impl Add for &CycNumber {
    type Output = CycNumber;
    fn add(self, o: Self) -> CycNumber {
        self.same_field(o);
        let l = self.den.lcm(&o.den);
        let (fa, fb) = (&l / &self.den, &l / &o.den);
        let num = self
            .num
            .iter()
            .zip(&o.num)
            .map(|(a, b)| a * &fa + b * &fb)
            .collect();
        CycNumber::build(&self.field, num, l)
    }
}

impl Neg for &CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        CycNumber {
            field: self.field.clone(),
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Sub for &CycNumber {
    type Output = CycNumber;
    fn sub(self, o: Self) -> CycNumber {
        self + &(-o)
    }
}

impl Mul for &CycNumber {
    type Output = CycNumber;
    fn mul(self, o: Self) -> CycNumber {
        self.same_field(o);
        let phi = self.field.phi;
        let mut v = vec![BigInt::zero(); 2 * phi - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.num.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] += a * b;
                }
            }
        }
        CycNumber::build(&self.field, self.field.reduce(v), &self.den * &o.den)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for CycNumber {
            type Output = CycNumber;
            fn $m(self, o: Self) -> CycNumber {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(1), UniPoly::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic_poly(4), UniPoly::from_i64(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(12), UniPoly::from_i64(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic_poly(9), UniPoly::from_i64(&[1, 0, 0, 1, 0, 0, 1]));
    }

    #[test]
    fn zeta_relations() {
        let f = CycField::new(10);
        let z = CycNumber::zeta_pow(&f, 1);
        assert!(z.pow(10).is_one());
        assert!(!z.pow(5).is_one());
        assert_eq!(z.pow(5), -&CycNumber::one(&f));
        assert_eq!(CycNumber::zeta_pow(&f, -1), z.pow(9));
    }

    #[test]
    fn inverse_and_norm() {
        let f = CycField::new(7);
        let z = CycNumber::zeta_pow(&f, 1);
        let a = &(&z + &z.pow(3)) + &CycNumber::from_int(&f, BigInt::from(2));
        let ai = a.inv().unwrap();
        assert!((&a * &ai).is_one());
        // sum of all primitive 7th roots is -1
        let s = (1..7).fold(CycNumber::zero(&f), |acc, k| &acc + &z.pow(k));
        assert_eq!(s.integer_value(), Some(BigInt::from(-1)));
    }

    #[test]
    fn zero_has_no_inverse() {
        let f = CycField::new(5);
        assert_eq!(CycNumber::zero(&f).inv(), Err(Error::SingularMatrix));
    }
}
