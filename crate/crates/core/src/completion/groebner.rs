//! Buchberger's algorithm over `F_p`, degrevlex order.

use std::cmp::Ordering;
use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exact::MultiPoly;

pub type Mono = Vec<u16>;

/// Degrevlex with `u_1 > u_2 > ... > u_n`.
pub fn cmp_degrevlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&x| x as u32).sum();
    let db: u32 = b.iter().map(|&x| x as u32).sum();
    da.cmp(&db).then_with(|| {
        for i in (0..a.len()).rev() {
            if a[i] != b[i] {
                return b[i].cmp(&a[i]);
            }
        }
        Ordering::Equal
    })
}

fn divides(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u16], b: &[u16]) -> Mono {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn coprime(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Polynomial over `F_p` with terms in decreasing degrevlex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpPoly {
    terms: Vec<(Mono, u64)>,
}

impl FpPoly {
    pub fn zero() -> Self {
        FpPoly { terms: Vec::new() }
    }

    /// From `(exponents, coefficient)` pairs, reducing mod `p`.
    pub fn from_terms(p: u64, terms: Vec<(Mono, i64)>) -> Self {
        let mut t: Vec<(Mono, u64)> = terms
            .into_iter()
            .map(|(m, c)| (m, c.rem_euclid(p as i64) as u64))
            .collect();
        t.sort_by(|a, b| cmp_degrevlex(&b.0, &a.0));
        let mut out: Vec<(Mono, u64)> = Vec::new();
        for (m, c) in t {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = (last.1 + c) % p,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| *c != 0);
        FpPoly { terms: out }
    }

    /// Reduction of an integer polynomial; variable `i` is sent to slot `perm[i]`.
    pub fn from_multipoly(f: &MultiPoly, nvars: usize, p: u64, perm: &[usize]) -> Self {
        let pb = BigInt::from(p);
        let terms = f
            .terms()
            .map(|(e, c)| {
                let mut m = vec![0u16; nvars];
                for (i, &k) in e.iter().enumerate() {
                    m[perm[i]] = k as u16;
                }
                let r = ((c % &pb) + &pb) % &pb;
                (m, r.to_i64().unwrap())
            })
            .collect();
        Self::from_terms(p, terms)
    }

    pub fn monomial(nvars: usize, var: usize, exp: u16) -> Self {
        let mut m = vec![0u16; nvars];
        m[var] = exp;
        FpPoly {
            terms: vec![(m, 1)],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Mono, u64)] {
        &self.terms
    }

    pub fn leading_monomial(&self) -> Option<&Mono> {
        self.terms.first().map(|t| &t.0)
    }

    fn lc(&self) -> u64 {
        self.terms[0].1
    }

    fn monic(mut self, p: u64) -> Self {
        if let Some(&(_, c)) = self.terms.first() {
            let ci = inv_mod(c, p);
            for t in &mut self.terms {
                t.1 = t.1 * ci % p;
            }
        }
        self
    }

    /// `self - c * x^shift * g`.
    fn sub_scaled(&self, c: u64, shift: &[u16], g: &FpPoly, p: u64) -> FpPoly {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut i = 0;
        let mut gi = g.terms.iter().map(|(m, k)| {
            let mm: Mono = m.iter().zip(shift).map(|(a, b)| a + b).collect();
            (mm, (p - k * c % p) % p)
        });
        let mut next_g = gi.next();
        while i < self.terms.len() || next_g.is_some() {
            let take_self = match (&next_g, self.terms.get(i)) {
                (None, _) => Ordering::Greater,
                (Some(_), None) => Ordering::Less,
                (Some((gm, _)), Some((sm, _))) => cmp_degrevlex(sm, gm),
            };
            match take_self {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let t = next_g.take().unwrap();
                    if t.1 != 0 {
                        out.push(t);
                    }
                    next_g = gi.next();
                }
                Ordering::Equal => {
                    let (m, k) = next_g.take().unwrap();
                    let s = (self.terms[i].1 + k) % p;
                    if s != 0 {
                        out.push((m, s));
                    }
                    i += 1;
                    next_g = gi.next();
                }
            }
        }
        FpPoly { terms: out }
    }
}

struct Budget {
    left: usize,
    total: usize,
}

impl Budget {
    fn spend(&mut self) -> Result<()> {
        if self.left == 0 {
            return Err(Error::ResourceLimit { budget: self.total });
        }
        self.left -= 1;
        Ok(())
    }
}

fn normal_form(f: &FpPoly, basis: &[FpPoly], p: u64, budget: &mut Budget) -> Result<FpPoly> {
    let mut f = f.clone();
    let mut rem: Vec<(Mono, u64)> = Vec::new();
    while let Some((lm, lc)) = f.terms.first().cloned() {
        match basis
            .iter()
            .find(|g| divides(g.leading_monomial().unwrap(), &lm))
        {
            Some(g) => {
                budget.spend()?;
                let glm = g.leading_monomial().unwrap();
                let shift: Mono = lm.iter().zip(glm).map(|(a, b)| a - b).collect();
                let c = lc * inv_mod(g.lc(), p) % p;
                f = f.sub_scaled(c, &shift, g, p);
            }
            None => {
                rem.push(f.terms.remove(0));
            }
        }
    }
    Ok(FpPoly { terms: rem })
}

fn s_poly(f: &FpPoly, g: &FpPoly, p: u64) -> FpPoly {
    let (fm, gm) = (f.leading_monomial().unwrap(), g.leading_monomial().unwrap());
    let l = lcm(fm, gm);
    let sf: Mono = l.iter().zip(fm).map(|(a, b)| a - b).collect();
    let sg: Mono = l.iter().zip(gm).map(|(a, b)| a - b).collect();
    // monic inputs: x^sf f - x^sg g
    let a = FpPoly::zero().sub_scaled(p - 1, &sf, f, p);
    a.sub_scaled(1, &sg, g, p)
}

/// Reduced Groebner basis over `F_p`.
#[derive(Clone, Debug)]
pub struct GroebnerBasisFp {
    pub prime: u64,
    pub nvars: usize,
    pub basis: Vec<FpPoly>,
}

impl GroebnerBasisFp {
    /// Buchberger with the coprime and chain criteria; `budget` caps reduction steps.
    pub fn compute(prime: u64, nvars: usize, gens: Vec<FpPoly>, budget: usize) -> Result<Self> {
        let p = prime;
        let mut b = Budget {
            left: budget,
            total: budget,
        };
        let mut g: Vec<FpPoly> = Vec::new();
        for f in gens {
            let h = normal_form(&f, &g, p, &mut b)?;
            if !h.is_zero() {
                g.push(h.monic(p));
            }
        }
        let mut pending: HashSet<(usize, usize)> = HashSet::new();
        for j in 0..g.len() {
            for i in 0..j {
                pending.insert((i, j));
            }
        }
        while !pending.is_empty() {
            let &(i, j) = pending
                .iter()
                .min_by(|x, y| {
                    let lx = lcm(g[x.0].leading_monomial().unwrap(), g[x.1].leading_monomial().unwrap());
                    let ly = lcm(g[y.0].leading_monomial().unwrap(), g[y.1].leading_monomial().unwrap());
                    cmp_degrevlex(&lx, &ly).then(x.cmp(y))
                })
                .unwrap();
            pending.remove(&(i, j));
            let (li, lj) = (g[i].leading_monomial().unwrap(), g[j].leading_monomial().unwrap());
            if coprime(li, lj) {
                continue;
            }
            let l = lcm(li, lj);
            let chain = (0..g.len()).any(|k| {
                k != i
                    && k != j
                    && divides(g[k].leading_monomial().unwrap(), &l)
                    && !pending.contains(&(i.min(k), i.max(k)))
                    && !pending.contains(&(j.min(k), j.max(k)))
            });
            if chain {
                continue;
            }
            b.spend()?;
            let s = s_poly(&g[i], &g[j], p);
            let h = normal_form(&s, &g, p, &mut b)?;
            if !h.is_zero() {
                let k = g.len();
                g.push(h.monic(p));
                for i in 0..k {
                    pending.insert((i, k));
                }
            }
        }
        // minimal, then interreduced
        let mut minimal: Vec<FpPoly> = Vec::new();
        for (i, f) in g.iter().enumerate() {
            let lm = f.leading_monomial().unwrap();
            let redundant = g.iter().enumerate().any(|(j, h)| {
                let hm = h.leading_monomial().unwrap();
                j != i && divides(hm, lm) && (hm != lm || j < i)
            });
            if !redundant {
                minimal.push(f.clone());
            }
        }
        let mut reduced = Vec::with_capacity(minimal.len());
        for i in 0..minimal.len() {
            let others: Vec<FpPoly> = minimal
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, f)| f.clone())
                .collect();
            let lead = FpPoly {
                terms: vec![minimal[i].terms[0].clone()],
            };
            let tail = FpPoly {
                terms: minimal[i].terms[1..].to_vec(),
            };
            let t = normal_form(&tail, &others, p, &mut b)?;
            let mut terms = lead.terms;
            terms.extend(t.terms);
            reduced.push(FpPoly { terms });
        }
        reduced.sort_by(|a, b| cmp_degrevlex(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
        Ok(GroebnerBasisFp {
            prime,
            nvars,
            basis: reduced,
        })
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.basis
            .iter()
            .any(|f| f.leading_monomial().unwrap().iter().all(|&e| e == 0))
    }

    pub fn leading_monomials(&self) -> Vec<Mono> {
        self.basis
            .iter()
            .map(|f| f.leading_monomial().unwrap().clone())
            .collect()
    }

    /// Every S-polynomial reduces to zero.
    pub fn is_groebner(&self) -> bool {
        let mut b = Budget {
            left: usize::MAX,
            total: usize::MAX,
        };
        for j in 0..self.basis.len() {
            for i in 0..j {
                let s = s_poly(&self.basis[i], &self.basis[j], self.prime);
                match normal_form(&s, &self.basis, self.prime, &mut b) {
                    Ok(h) if h.is_zero() => {}
                    _ => return false,
                }
            }
        }
        true
    }

    pub fn reduce(&self, f: &FpPoly) -> FpPoly {
        let mut b = Budget {
            left: usize::MAX,
            total: usize::MAX,
        };
        normal_form(f, &self.basis, self.prime, &mut b).unwrap()
    }

    /// Standard monomials with every exponent below `bound`.
    pub fn count_standard_monomials(&self, bound: u16) -> u64 {
        if self.is_unit_ideal() {
            return 0;
        }
        let leads = self.leading_monomials();
        let mut cur = vec![0u16; self.nvars];
        count_rec(&leads, &mut cur, 0, bound)
    }

    /// Standard monomials per weighted degree `0..=max`.
    pub fn standard_monomials_by_weight(&self, weights: &[u32], max: u32) -> Vec<u64> {
        let mut out = vec![0u64; max as usize + 1];
        if self.is_unit_ideal() {
            return out;
        }
        let leads = self.leading_monomials();
        let mut cur = vec![0u16; self.nvars];
        weight_rec(&leads, &mut cur, 0, weights, 0, max, &mut out);
        out
    }
}

fn is_standard(leads: &[Mono], m: &[u16]) -> bool {
    !leads.iter().any(|l| divides(l, m))
}

fn count_rec(leads: &[Mono], cur: &mut Vec<u16>, var: usize, bound: u16) -> u64 {
    if var == cur.len() {
        return 1;
    }
    let mut total = 0;
    for e in 0..bound {
        cur[var] = e;
        if !is_standard(leads, cur) {
            break;
        }
        total += count_rec(leads, cur, var + 1, bound);
    }
    cur[var] = 0;
    total
}

fn weight_rec(
    leads: &[Mono],
    cur: &mut Vec<u16>,
    var: usize,
    w: &[u32],
    acc: u32,
    max: u32,
    out: &mut [u64],
) {
    if var == cur.len() {
        out[acc as usize] += 1;
        return;
    }
    let mut e = 0u16;
    loop {
        let a = acc + e as u32 * w[var];
        if a > max {
            break;
        }
        cur[var] = e;
        if !is_standard(leads, cur) {
            break;
        }
        weight_rec(leads, cur, var + 1, w, a, max, out);
        e += 1;
    }
    cur[var] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(p: u64, terms: &[(&[u16], i64)]) -> FpPoly {
        FpPoly::from_terms(p, terms.iter().map(|(m, c)| (m.to_vec(), *c)).collect())
    }

    #[test]
    fn order() {
        assert_eq!(cmp_degrevlex(&[1, 0], &[0, 1]), Ordering::Greater);
        assert_eq!(cmp_degrevlex(&[1, 0, 1], &[0, 2, 0]), Ordering::Less);
        assert_eq!(cmp_degrevlex(&[2, 0], &[0, 1]), Ordering::Greater);
    }

    #[test]
    fn twisted_cubic_style_ideal() {
        // (x^2 - y, x y - 1) over F_7: finite quotient of dimension 3
        let p = 7;
        let f = poly(p, &[(&[2, 0], 1), (&[0, 1], -1)]);
        let g = poly(p, &[(&[1, 1], 1), (&[0, 0], -1)]);
        let gb = GroebnerBasisFp::compute(p, 2, vec![f, g], 10_000).unwrap();
        assert!(gb.is_groebner());
        assert_eq!(gb.count_standard_monomials(50), 3);
    }

    #[test]
    fn unit_ideal_and_budget() {
        let p = 5;
        let f = poly(p, &[(&[1], 1)]);
        let g = poly(p, &[(&[1], 1), (&[0], 1)]);
        let gb = GroebnerBasisFp::compute(p, 1, vec![f.clone(), g.clone()], 100).unwrap();
        assert!(gb.is_unit_ideal());
        assert_eq!(gb.count_standard_monomials(10), 0);
        assert_eq!(
            GroebnerBasisFp::compute(p, 1, vec![f, g], 0).unwrap_err(),
            Error::ResourceLimit { budget: 0 }
        );
    }

    #[test]
    fn weighted_hilbert_function() {
        // F_2[a,b]/(a b), weights 1, 2
        let gb = GroebnerBasisFp::compute(2, 2, vec![poly(2, &[(&[1, 1], 1)])], 100).unwrap();
        assert_eq!(gb.standard_monomials_by_weight(&[1, 2], 5), vec![1, 1, 2, 1, 2, 1]);
    }
}
