//! Integral models `Z[t,y]/(y^{l+1}, sigma^{m-1}(y) - (l+1) y^l t)` and `(Z/m)[t]`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::exact::{IntMatrix, MultiPoly};
use crate::sym::sigma;

/// Presentation of a commutative ring as a quotient of `Z[x_1..x_k]` (or `(Z/N)[..]`).
#[derive(Clone, Debug)]
pub struct QuotientRingZ {
    pub variables: Vec<String>,
    /// Homological degree of each variable.
    pub degrees: Vec<i32>,
    pub relations: Vec<MultiPoly>,
    /// `Some(d)` imposes `x^d = 0`.
    pub truncation: Vec<Option<u32>>,
    /// Coefficient ring `Z/N`; `None` means `Z`.
    pub modulus: Option<BigInt>,
}

impl QuotientRingZ {
    pub fn render(&self, f: &MultiPoly) -> String {
        if f.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (exps, c) in f.terms() {
            let mut mono: Vec<String> = Vec::new();
            for (i, &e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => mono.push(self.variables[i].clone()),
                    _ => mono.push(format!("{}^{}", self.variables[i], e)),
                }
            }
            let neg = c.is_negative();
            let a = c.abs();
            let body = if mono.is_empty() {
                a.to_string()
            } else if a.is_one() {
                mono.join("*")
            } else {
                format!("{}*{}", a, mono.join("*"))
            };
            if out.is_empty() {
                out = if neg { format!("-{body}") } else { body };
            } else {
                out.push_str(if neg { " - " } else { " + " });
                out.push_str(&body);
            }
        }
        out
    }

    /// `Z/1` coefficients.
    pub fn is_zero_ring(&self) -> bool {
        self.modulus.as_ref().is_some_and(|n| n.is_one())
    }

    /// Rank over `Z/N` of the part in degree `d`, for presentations without relations.
    pub fn free_rank_in_degree(&self, d: i32) -> Option<usize> {
        if !self.relations.is_empty() || self.is_zero_ring() {
            return if self.is_zero_ring() { Some(0) } else { None };
        }
        let mut count = 0usize;
        count_monomials(&self.degrees, &self.truncation, 0, d, &mut count);
        Some(count)
    }
}

fn count_monomials(degs: &[i32], trunc: &[Option<u32>], i: usize, rest: i32, count: &mut usize) {
    if i == degs.len() {
        if rest == 0 {
            *count += 1;
        }
        return;
    }
    // positive degrees only; a zero-degree variable without truncation gives infinitely many
    let g = degs[i];
    assert!(g > 0 || trunc[i].is_some(), "infinite rank");
    let mut e = 0u32;
    loop {
        if trunc[i].is_some_and(|t| e >= t) {
            break;
        }
        let used = g * e as i32;
        if g > 0 && used > rest {
            break;
        }
        count_monomials(degs, trunc, i + 1, rest - used, count);
        e += 1;
        if g <= 0 && trunc[i].is_none() {
            break;
        }
    }
}

#[derive(Serialize)]
struct QuotientView<'a> {
    variables: &'a [String],
    degrees: &'a [i32],
    relations: Vec<String>,
    truncation: &'a [Option<u32>],
    modulus: Option<String>,
}

impl Serialize for QuotientRingZ {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        QuotientView {
            variables: &self.variables,
            degrees: &self.degrees,
            relations: self.relations.iter().map(|r| self.render(r)).collect(),
            truncation: &self.truncation,
            modulus: self.modulus.as_ref().map(|n| n.to_string()),
        }
        .serialize(s)
    }
}

/// `(K_*/m)[t]` with `|t| = 4l + 2`.
pub fn omega_hp_ring(m: u64, ell: u64) -> QuotientRingZ {
    QuotientRingZ {
        variables: vec!["t".into()],
        degrees: vec![4 * ell as i32 + 2],
        relations: Vec::new(),
        truncation: vec![None],
        modulus: Some(BigInt::from(m)),
    }
}

/// Element of `Z[y,t]`, keyed by `(deg_y, deg_t)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TwoVarPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl TwoVarPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(c: BigInt, y: u32, t: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(y, t, c);
        p
    }

    pub fn add_term(&mut self, y: u32, t: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((y, t)).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(y, t));
        }
    }

    pub fn coeff(&self, y: u32, t: u32) -> BigInt {
        self.terms.get(&(y, t)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (&(y, t), c) in &o.terms {
            r.add_term(y, t, c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (&(y, t), c) in &o.terms {
            r.add_term(y, t, -c.clone());
        }
        r
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for (&(y1, t1), a) in &self.terms {
            for (&(y2, t2), b) in &o.terms {
                r.add_term(y1 + y2, t1 + t2, a * b);
            }
        }
        r
    }

    /// Drop every term with y-degree above `max_y`.
    pub fn truncate_y(&self, max_y: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|((y, _), _)| *y <= max_y)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }

    /// Set `t = 0`.
    pub fn at_t_zero(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|((_, t), _)| *t == 0)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for TwoVarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(y, t), c) in &self.terms {
            let mut mono = Vec::new();
            match y {
                0 => {}
                1 => mono.push("y".to_string()),
                _ => mono.push(format!("y^{y}")),
            }
            match t {
                0 => {}
                1 => mono.push("t".to_string()),
                _ => mono.push(format!("t^{t}")),
            }
            let a = c.abs();
            let body = if mono.is_empty() {
                a.to_string()
            } else if a.is_one() {
                mono.join("*")
            } else {
                format!("{}*{}", a, mono.join("*"))
            };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if c.is_negative() { " - " } else { " + " })?;
            }
            write!(f, "{body}")?;
            first = false;
        }
        Ok(())
    }
}

/// `Z[t,y]/(y^{l+1}, R)` with `R = sigma^{m-1}(y) - (l+1) y^l t`.
///
/// `R` has constant term `m`, so every coefficient can be pushed into `[0, m)`
/// at the cost of terms of strictly higher y-degree.
#[derive(Clone, Debug)]
pub struct LhpRing {
    pub m: u64,
    pub ell: u32,
    /// `R` truncated at `y^{l+1}`.
    relation: TwoVarPoly,
    sigma: Vec<BigInt>,
}

pub fn lhp_ring(m: u64, ell: u32) -> LhpRing {
    assert!(m >= 2 && ell >= 1);
    let s = sigma(m as usize - 1);
    let sigma: Vec<BigInt> = (0..=ell as usize).map(|k| s.coeff(k)).collect();
    let mut relation = TwoVarPoly::zero();
    for (k, c) in sigma.iter().enumerate() {
        relation.add_term(k as u32, 0, c.clone());
    }
    relation.add_term(ell, 1, -BigInt::from(ell + 1));
    debug_assert_eq!(relation.coeff(0, 0), BigInt::from(m));
    LhpRing {
        m,
        ell,
        relation,
        sigma,
    }
}

impl LhpRing {
    pub fn relation(&self) -> &TwoVarPoly {
        &self.relation
    }

    /// Coefficients of `sigma^{m-1}(y)` up to `y^l`.
    pub fn sigma_coeffs(&self) -> &[BigInt] {
        &self.sigma
    }

    /// `m^2 / gcd(m, l+1)`; metadata only.
    pub fn n_comment(&self) -> u64 {
        self.m * self.m / self.m.gcd(&(self.ell as u64 + 1))
    }

    pub fn presentation(&self) -> QuotientRingZ {
        let mut rel = MultiPoly::zero();
        for (&(y, t), c) in self.relation.terms() {
            let mut e = vec![y, t];
            while e.last() == Some(&0) {
                e.pop();
            }
            rel.add_term(e, c.clone());
        }
        QuotientRingZ {
            variables: vec!["y".into(), "t".into()],
            degrees: vec![-4, 4 * self.ell as i32 + 2],
            relations: vec![rel],
            truncation: vec![Some(self.ell + 1), None],
            modulus: None,
        }
    }

    fn reduce_term(&self, f: &mut TwoVarPoly, y: u32, t: u32) {
        let c = f.coeff(y, t);
        let m = BigInt::from(self.m);
        let q = c.div_floor(&m);
        if q.is_zero() {
            return;
        }
        for (&(ry, rt), rc) in self.relation.terms() {
            if y + ry <= self.ell {
                f.add_term(y + ry, t + rt, -(&q * rc));
            }
        }
    }

    /// Unique representative with all coefficients in `[0, m)`, processing y-degree upwards.
    pub fn normal_form(&self, f: &TwoVarPoly) -> TwoVarPoly {
        let mut g = f.truncate_y(self.ell);
        for y in 0..=self.ell {
            let ts: Vec<u32> = g
                .terms()
                .filter(|((yy, _), _)| *yy == y)
                .map(|((_, t), _)| *t)
                .collect();
            for t in ts {
                self.reduce_term(&mut g, y, t);
            }
        }
        g
    }

    /// Reduces whichever out-of-range term `choose` picks, until none is left.
    pub fn normal_form_with<F: FnMut(usize) -> usize>(&self, f: &TwoVarPoly, mut choose: F) -> TwoVarPoly {
        let mut g = f.truncate_y(self.ell);
        let m = BigInt::from(self.m);
        loop {
            let pending: Vec<(u32, u32)> = g
                .terms()
                .filter(|(_, c)| c.is_negative() || **c >= m)
                .map(|(k, _)| *k)
                .collect();
            if pending.is_empty() {
                return g;
            }
            let (y, t) = pending[choose(pending.len()) % pending.len()];
            self.reduce_term(&mut g, y, t);
        }
    }

    pub fn mul(&self, a: &TwoVarPoly, b: &TwoVarPoly) -> TwoVarPoly {
        self.normal_form(&a.mul(b).truncate_y(self.ell))
    }

    /// `sigma^{m-1}(y) - (l+1) y^l t` reduces to zero.
    pub fn relation_holds(&self) -> bool {
        let mut s = TwoVarPoly::zero();
        for (k, c) in self.sigma.iter().enumerate() {
            s.add_term(k as u32, 0, c.clone());
        }
        let rhs = TwoVarPoly::monomial(BigInt::from(self.ell + 1), self.ell, 1);
        self.normal_form(&s.sub(&rhs)).is_zero()
    }

    /// Relation matrix of the ring modulo `t`, on the basis `1, y, ..., y^l`.
    pub fn t_quotient_presentation(&self) -> IntMatrix {
        let w = self.ell as usize + 1;
        let r0 = self.relation.at_t_zero();
        let mut rel = IntMatrix::zeros(w, w);
        for a in 0..w {
            for (&(y, _), c) in r0.terms() {
                let col = a + y as usize;
                if col < w {
                    rel[(a, col)] = c.clone();
                }
            }
        }
        rel
    }

    /// Relation matrix of `Z[t,y]/(y^{l+1}, R, t^D)` on the basis `y^a t^n`, index `n (l+1) + a`.
    pub fn truncated_presentation(&self, cutoff: u32) -> IntMatrix {
        let w = self.ell as usize + 1;
        let d = cutoff as usize;
        let mut rel = IntMatrix::zeros(w * d, w * d);
        for n in 0..d {
            for a in 0..w {
                for (&(y, t), c) in self.relation.terms() {
                    let (col_y, col_t) = (a + y as usize, n + t as usize);
                    if col_y < w && col_t < d {
                        rel[(n * w + a, col_t * w + col_y)] += c.clone();
                    }
                }
            }
        }
        rel
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::completion::tower::sigma_quotient_presentation;

    #[test]
    fn omega_models() {
        assert!(omega_hp_ring(1, 2).is_zero_ring());
        let r = omega_hp_ring(3, 1);
        assert_eq!(r.degrees, vec![6]);
        assert_eq!(r.free_rank_in_degree(12), Some(1));
        assert_eq!(r.free_rank_in_degree(13), Some(0));
        assert_eq!(omega_hp_ring(1, 1).free_rank_in_degree(0), Some(0));
    }

    #[test]
    fn relation_and_t_quotient() {
        for m in 2..9 {
            for ell in 1..5 {
                let r = lhp_ring(m, ell);
                assert!(r.relation_holds());
                assert_eq!(r.t_quotient_presentation(), sigma_quotient_presentation(m as u32, ell));
            }
        }
    }

    #[test]
    fn normal_form_is_canonical() {
        let r = lhp_ring(4, 2);
        let f = TwoVarPoly::monomial(BigInt::from(7), 0, 1);
        let nf = r.normal_form(&f);
        assert!(nf.terms().all(|(_, c)| !c.is_negative() && *c < BigInt::from(4)));
        let mut k = 0usize;
        let alt = r.normal_form_with(&f, |n| {
            k += 1;
            n - 1 - (k % n)
        });
        assert_eq!(nf, alt);
        assert_eq!(r.n_comment(), 16);
    }

    #[test]
    fn presentation_renders() {
        let p = lhp_ring(2, 1).presentation();
        assert_eq!(p.render(&p.relations[0]), "2 + y - 2*y*t");
    }
}
