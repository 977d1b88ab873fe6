//! Fusion rings `V(m,n)` with exact integer structure constants.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::character::{bent_character_poly, character_value};
use super::label::{eval_sets, labels, SpLabel};
use crate::error::{invalid, Error, Result};
use crate::exact::arith::binomial;
use crate::exact::matrix::inverse_exact;
use crate::exact::{det_bareiss, CycNumber, IntMatrix};

#[derive(Clone, Debug)]
pub struct FusionRing {
    m: u32,
    n: u32,
    labels: Vec<SpLabel>,
    sets: Vec<Vec<u32>>,
    /// `chars[a][I]`
    chars: Vec<Vec<CycNumber>>,
    /// `consts[(a * L + b) * L + c] = N_{ab}^c`
    consts: Vec<i64>,
}

/// Violation of a fusion-ring axiom.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomFailure {
    pub axiom: &'static str,
    pub indices: Vec<usize>,
}

pub fn build_fusion_ring(m: u32, n: u32) -> Result<FusionRing> {
    if n < 1 || m < n + 2 {
        return invalid(format!("V({m},{n}) needs n >= 1 and m >= n + 2"));
    }
    let labels = labels(m, n);
    let sets = eval_sets(m, n);
    let l = labels.len();
    let polys: Vec<_> = labels.par_iter().map(|x| bent_character_poly(n, x)).collect();
    let chars: Vec<Vec<CycNumber>> = polys
        .par_iter()
        .map(|p| sets.iter().map(|s| character_value(m, n, p, s)).collect())
        .collect();
    // B^T[I][c] = chi_c(I); inverse W with N^c = sum_I W[c][I] (chi_a chi_b)(I)
    let bt: Vec<Vec<CycNumber>> = (0..l)
        .map(|i| (0..l).map(|c| chars[c][i].clone()).collect())
        .collect();
    let w = inverse_exact(&bt)?;
    let pairs: Vec<(usize, usize)> = (0..l).flat_map(|a| (a..l).map(move |b| (a, b))).collect();
    let solved: Vec<Result<((usize, usize), Vec<i64>)>> = pairs
        .par_iter()
        .map(|&(a, b)| {
            let prod: Vec<CycNumber> = (0..l).map(|i| &chars[a][i] * &chars[b][i]).collect();
            let mut out = Vec::with_capacity(l);
            for (c, wc) in w.iter().enumerate() {
                let f = prod[0].field().clone();
                let v = wc
                    .iter()
                    .zip(&prod)
                    .fold(CycNumber::zero(&f), |acc, (x, y)| &acc + &(x * y));
                let v = v
                    .integer_value()
                    .and_then(|z| z.to_i64())
                    .ok_or(Error::NonIntegralFusion { a, b, c })?;
                if v < 0 {
                    return Err(Error::NegativeFusion { a, b, c, value: v });
                }
                out.push(v);
            }
            Ok(((a, b), out))
        })
        .collect();
    let mut consts = vec![0i64; l * l * l];
    for r in solved {
        let ((a, b), v) = r?;
        for (c, x) in v.into_iter().enumerate() {
            consts[(a * l + b) * l + c] = x;
            consts[(b * l + a) * l + c] = x;
        }
    }
    Ok(FusionRing {
        m,
        n,
        labels,
        sets,
        chars,
        consts,
    })
}

impl FusionRing {
    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn labels(&self) -> &[SpLabel] {
        &self.labels
    }

    pub fn eval_sets(&self) -> &[Vec<u32>] {
        &self.sets
    }

    pub fn char_value(&self, a: usize, set: usize) -> &CycNumber {
        &self.chars[a][set]
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn index_of(&self, l: &SpLabel) -> Option<usize> {
        self.labels.iter().position(|x| x == l)
    }

    /// `N_{ab}^c`.
    pub fn coeff(&self, a: usize, b: usize, c: usize) -> i64 {
        let l = self.rank();
        self.consts[(a * l + b) * l + c]
    }

    /// Product of two basis elements as a coefficient vector.
    pub fn product_basis(&self, a: usize, b: usize) -> Vec<i64> {
        let l = self.rank();
        self.consts[(a * l + b) * l..(a * l + b + 1) * l].to_vec()
    }

    pub fn multiply(&self, u: &[BigInt], v: &[BigInt]) -> Vec<BigInt> {
        let l = self.rank();
        let mut out = vec![BigInt::zero(); l];
        for (a, x) in u.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (b, y) in v.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let xy = x * y;
                for (c, o) in out.iter_mut().enumerate() {
                    let k = self.coeff(a, b, c);
                    if k != 0 {
                        *o += &xy * k;
                    }
                }
            }
        }
        out
    }

    /// Matrix of multiplication by `u`: column `b` holds `u * e_b`.
    pub fn mult_matrix(&self, u: &[BigInt]) -> IntMatrix {
        let l = self.rank();
        let mut m = IntMatrix::zeros(l, l);
        for b in 0..l {
            let mut e = vec![BigInt::zero(); l];
            e[b] = 1.into();
            for (c, x) in self.multiply(u, &e).into_iter().enumerate() {
                m[(c, b)] = x;
            }
        }
        m
    }

    /// `M_{ab} = N_{ab}^{unit}`.
    pub fn frobenius_pairing(&self) -> IntMatrix {
        let l = self.rank();
        let mut m = IntMatrix::zeros(l, l);
        for a in 0..l {
            for b in 0..l {
                m[(a, b)] = self.coeff(a, b, 0).into();
            }
        }
        m
    }

    /// `sum_a a * a^*`; every label is self-dual.
    pub fn handle_element(&self) -> Vec<BigInt> {
        let l = self.rank();
        let mut w = vec![BigInt::zero(); l];
        for a in 0..l {
            for (c, x) in w.iter_mut().enumerate() {
                *x += self.coeff(a, a, c);
            }
        }
        w
    }

    /// Multiplication by the handle element.
    pub fn handle_operator(&self) -> IntMatrix {
        self.mult_matrix(&self.handle_element())
    }

    pub fn det_t(&self) -> BigInt {
        det_bareiss(&self.handle_operator())
    }

    pub fn check_unit(&self) -> Option<AxiomFailure> {
        let l = self.rank();
        for a in 0..l {
            for c in 0..l {
                if self.coeff(0, a, c) != i64::from(a == c) {
                    return Some(AxiomFailure {
                        axiom: "unit",
                        indices: vec![a, c],
                    });
                }
            }
        }
        None
    }

    pub fn check_self_dual(&self) -> Option<AxiomFailure> {
        let l = self.rank();
        for a in 0..l {
            for b in 0..l {
                if self.coeff(a, b, 0) != i64::from(a == b) {
                    return Some(AxiomFailure {
                        axiom: "duality",
                        indices: vec![a, b],
                    });
                }
            }
        }
        None
    }

    pub fn check_commutative(&self) -> Option<AxiomFailure> {
        let l = self.rank();
        for a in 0..l {
            for b in 0..l {
                for c in 0..l {
                    if self.coeff(a, b, c) != self.coeff(b, a, c) {
                        return Some(AxiomFailure {
                            axiom: "commutativity",
                            indices: vec![a, b, c],
                        });
                    }
                }
            }
        }
        None
    }

    pub fn check_nonnegative(&self) -> Option<AxiomFailure> {
        let l = self.rank();
        self.consts.iter().position(|&x| x < 0).map(|i| AxiomFailure {
            axiom: "nonnegativity",
            indices: vec![i / (l * l), (i / l) % l, i % l],
        })
    }

    fn assoc_triple(&self, a: usize, b: usize, c: usize) -> bool {
        let l = self.rank();
        (0..l).all(|d| {
            let lhs: i64 = (0..l).map(|e| self.coeff(a, b, e) * self.coeff(e, c, d)).sum();
            let rhs: i64 = (0..l).map(|e| self.coeff(b, c, e) * self.coeff(a, e, d)).sum();
            lhs == rhs
        })
    }

    /// Exhaustive associativity check.
    pub fn check_associative(&self) -> Option<AxiomFailure> {
        let l = self.rank();
        (0..l * l * l)
            .into_par_iter()
            .find_first(|&i| !self.assoc_triple(i / (l * l), (i / l) % l, i % l))
            .map(|i| AxiomFailure {
                axiom: "associativity",
                indices: vec![i / (l * l), (i / l) % l, i % l],
            })
    }

    /// Associativity on the given triples.
    pub fn check_associative_on(&self, triples: &[(usize, usize, usize)]) -> Option<AxiomFailure> {
        triples
            .iter()
            .find(|&&(a, b, c)| !self.assoc_triple(a, b, c))
            .map(|&(a, b, c)| AxiomFailure {
                axiom: "associativity",
                indices: vec![a, b, c],
            })
    }

    /// Every axiom; associativity exhaustive up to `exhaustive_limit` labels.
    pub fn check_axioms(&self, exhaustive_limit: usize) -> Vec<AxiomFailure> {
        let mut out: Vec<AxiomFailure> = [
            self.check_nonnegative(),
            self.check_unit(),
            self.check_self_dual(),
            self.check_commutative(),
        ]
        .into_iter()
        .flatten()
        .collect();
        if self.rank() <= exhaustive_limit {
            out.extend(self.check_associative());
        } else {
            let l = self.rank();
            let triples: Vec<_> = (0..2000usize)
                .map(|i| {
                    let h = i.wrapping_mul(2654435761) ^ (i >> 3);
                    (h % l, (h / l) % l, (h / (l * l)) % l)
                })
                .collect();
            out.extend(self.check_associative_on(&triples));
        }
        out
    }
}

/// `(-2)^{m-1} m^{m-3}`.
pub fn det_t_formula_sp1(m: u32) -> BigInt {
    assert!(m >= 3);
    num_traits::pow(BigInt::from(-2), m as usize - 1) * num_traits::pow(BigInt::from(m), m as usize - 3)
}

/// The conjectured `|det T| = 2^{(m-1)C(m-3,n-2)} m^{(m-3)C(m-3,n-2)}`, or `None` when `n < 2`.
pub fn ever_conjecture(m: u32, n: u32) -> Option<BigInt> {
    if n < 2 || m < 3 {
        return None;
    }
    ever_power(m, binomial(m as i64 - 3, n as i64 - 2).to_usize()?)
}

/// Same shape with exponent `C(m-3, n-1)`; for `n = 1` this is `|det T|` of the rank-one case.
pub fn ever_conjecture_shifted(m: u32, n: u32) -> Option<BigInt> {
    if n < 1 || m < 3 {
        return None;
    }
    ever_power(m, binomial(m as i64 - 3, n as i64 - 1).to_usize()?)
}

fn ever_power(m: u32, c: usize) -> Option<BigInt> {
    Some(
        num_traits::pow(BigInt::from(2), (m as usize - 1) * c)
            * num_traits::pow(BigInt::from(m), (m as usize - 3) * c),
    )
}
