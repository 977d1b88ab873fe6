//! String coproduct on `K^t(L HP^l)` and the Euler class of `HP^l`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::completion::delta;
use crate::error::{invalid, Result};
use crate::exact::UniPoly;
use crate::fusion::build_fusion_ring;
use crate::sym::sigma;

/// `coefficient * y^left (x) y^right`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TensorTerm {
    #[serde(serialize_with = "ser_big")]
    pub coefficient: BigInt,
    pub left: u32,
    pub right: u32,
}

fn ser_big<S: serde::Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

fn mono(e: u32) -> String {
    match e {
        0 => "1".into(),
        1 => "y".into(),
        _ => format!("y^{e}"),
    }
}

impl fmt::Display for TensorTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = format!("{} (x) {}", mono(self.left), mono(self.right));
        if self.coefficient == BigInt::from(1) {
            write!(f, "{body}")
        } else {
            write!(f, "{}*{}", self.coefficient, body)
        }
    }
}

pub fn render_tensor(terms: &[TensorTerm]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    terms.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" + ")
}

#[derive(Clone, Debug, Serialize)]
pub struct CoproductReport {
    pub m: u64,
    pub ell: u32,
    pub prime: u64,
    /// Integral value `(l+1) y^l (x) y^l`.
    pub nu_1: Vec<TensorTerm>,
    /// Mod-p value; empty means zero.
    pub nu_t: Vec<TensorTerm>,
    /// `c_l` not divisible by `p`, all lower `c_i` divisible by `p`.
    pub coefficient_condition: bool,
    pub delta: u64,
    pub ell_is_delta: bool,
}

impl CoproductReport {
    pub fn consistent(&self) -> bool {
        self.coefficient_condition == self.ell_is_delta && self.nu_t.is_empty() != self.ell_is_delta
    }
}

pub fn coproduct_values(m: u64, ell: u32, p: u64) -> Result<CoproductReport> {
    if m < 2 || ell < 1 {
        return invalid("need m >= 2 and l >= 1");
    }
    if p < 2 || !m.is_multiple_of(p) {
        return invalid("p must be a prime dividing m");
    }
    let s = sigma(m as usize - 1);
    let pb = BigInt::from(p);
    let c_ell = s.coeff(ell as usize);
    let cond = !c_ell.is_multiple_of(&pb) && (0..ell as usize).all(|i| s.coeff(i).is_multiple_of(&pb));
    let d = delta(p, m);
    let nu_1 = vec![TensorTerm {
        coefficient: BigInt::from(ell + 1),
        left: ell,
        right: ell,
    }];
    let nu_t = if cond {
        vec![TensorTerm {
            coefficient: c_ell.mod_floor(&pb),
            left: ell,
            right: ell,
        }]
    } else {
        Vec::new()
    };
    Ok(CoproductReport {
        m,
        ell,
        prime: p,
        nu_1,
        nu_t,
        coefficient_condition: cond,
        delta: d,
        ell_is_delta: d == ell as u64,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct EulerReport {
    pub ell: u32,
    pub euler_class: String,
    pub e_squared_zero: bool,
    /// The string-side handle operator is cap product with `E^2`.
    pub string_t_zero: bool,
    /// `(m, det T)` for a few rank-one Verlinde algebras, for contrast.
    pub verlinde_det_t: Vec<(u32, String)>,
}

/// `E = (l+1) y^l` in `Z[y]/(y^{l+1})`.
pub fn euler_and_t(ell: u32) -> Result<EulerReport> {
    if ell < 1 {
        return invalid("l must be at least 1");
    }
    let e = UniPoly::monomial(BigInt::from(ell + 1), ell as usize);
    let e2 = e.mul_trunc(&e, ell as usize + 1);
    let zero = e2.coeffs().iter().all(|c| c.is_zero());
    let mut contrast = Vec::new();
    for m in 3..=5 {
        contrast.push((m, build_fusion_ring(m, 1)?.det_t().to_string()));
    }
    Ok(EulerReport {
        ell,
        euler_class: e.fmt_var("y"),
        e_squared_zero: zero,
        string_t_zero: zero,
        verlinde_det_t: contrast,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_three_two() {
        let r = coproduct_values(4, 3, 2).unwrap();
        assert!(r.coefficient_condition && r.ell_is_delta);
        assert_eq!(render_tensor(&r.nu_t), "y^3 (x) y^3");
        assert_eq!(render_tensor(&r.nu_1), "4*y^3 (x) y^3");
        let z = coproduct_values(4, 2, 2).unwrap();
        assert!(z.nu_t.is_empty());
        assert_eq!(render_tensor(&z.nu_t), "0");
    }

    #[test]
    fn condition_is_delta() {
        for m in 2..=12u64 {
            for p in crate::exact::arith::prime_factors(m) {
                for ell in 1..=6 {
                    assert!(coproduct_values(m, ell, p).unwrap().consistent(), "m={m} l={ell} p={p}");
                }
            }
        }
    }

    #[test]
    fn euler_square() {
        for ell in 1..=10 {
            let r = euler_and_t(ell).unwrap();
            assert!(r.e_squared_zero);
        }
        let r = euler_and_t(1).unwrap();
        assert_eq!(r.euler_class, "2*y");
        assert!(r.verlinde_det_t.iter().all(|(_, d)| d != "0"));
    }
}
