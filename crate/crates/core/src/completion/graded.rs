//! Weighted filtration of the level-one algebra `Z[x]/Sym^{n+1}(x)` by the gamma generators.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::groebner::{FpPoly, GroebnerBasisFp};
use crate::error::{invalid, Result};
use crate::exact::arith::valuation;
use crate::exact::{AbelianPStructure, Exponent, Lattice, UniPoly};
use crate::fusion::gamma_polynomials;
use crate::sym::sym;

/// `Z[x]/(Sym^{n+1}(x))` with elements as coefficient vectors of `1, x, ..., x^n`.
#[derive(Clone, Debug)]
pub struct LevelOneModel {
    n: u32,
    modulus: UniPoly<BigInt>,
}

impl LevelOneModel {
    pub fn new(n: u32) -> Self {
        LevelOneModel {
            n,
            modulus: sym(n as usize + 1),
        }
    }

    pub fn dim(&self) -> usize {
        self.n as usize + 1
    }

    pub fn reduce(&self, p: &UniPoly<BigInt>) -> Vec<BigInt> {
        let (_, r) = p.div_rem_monic(&self.modulus);
        (0..self.dim()).map(|i| r.coeff(i)).collect()
    }

    pub fn to_poly(&self, v: &[BigInt]) -> UniPoly<BigInt> {
        UniPoly::new(v.to_vec())
    }

    pub fn mul(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        self.reduce(&(&self.to_poly(a) * &self.to_poly(b)))
    }

    pub fn constant(&self, c: i64) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); self.dim()];
        v[0] = BigInt::from(c);
        v
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FiltrationReport {
    pub n: u32,
    pub prime: u64,
    pub weights: Vec<u32>,
    pub max_degree: u32,
    /// p-part of `F^k / F^{k+1}` for `k = 0..=max_degree`.
    pub pieces: Vec<AbelianPStructure>,
    #[serde(skip)]
    filtration: Vec<Lattice>,
    #[serde(skip)]
    model: LevelOneModel,
}

/// `F^k = sum_i gen_i F^{k - w_i}`, `F^j = A` for `j <= 0`.
pub fn associated_graded(
    n: u32,
    gens: &[UniPoly<BigInt>],
    weights: &[u32],
    max_degree: u32,
    prime: u64,
) -> Result<FiltrationReport> {
    if gens.len() != weights.len() || weights.contains(&0) {
        return invalid("each generator needs a positive weight");
    }
    let model = LevelOneModel::new(n);
    let d = model.dim();
    let g: Vec<Vec<BigInt>> = gens.iter().map(|p| model.reduce(p)).collect();
    let mut fil = vec![Lattice::full(d)];
    for k in 1..=max_degree as i64 + 1 {
        let mut lat = Lattice::zero(d);
        for (gi, &w) in g.iter().zip(weights) {
            let j = k - w as i64;
            let base = if j <= 0 { &fil[0] } else { &fil[j as usize] };
            for b in base.basis().to_vec() {
                lat.insert(model.mul(gi, &b));
            }
        }
        debug_assert!(fil[k as usize - 1].contains_lattice(&lat));
        fil.push(lat);
    }
    let pieces = (0..=max_degree as usize)
        .map(|k| AbelianPStructure::from_invariants(prime, &fil[k].quotient_invariants(&fil[k + 1])))
        .collect();
    Ok(FiltrationReport {
        n,
        prime,
        weights: weights.to_vec(),
        max_degree,
        pieces,
        filtration: fil,
        model,
    })
}

impl FiltrationReport {
    pub fn model(&self) -> &LevelOneModel {
        &self.model
    }

    pub fn lattice(&self, k: u32) -> &Lattice {
        &self.filtration[k as usize]
    }

    /// Whether `v` lies in `F^k (x) Z_p`, i.e. its class in `A/F^k` has order prime to `p`.
    pub fn in_filtration(&self, v: &[BigInt], k: u32) -> bool {
        let k = k as usize;
        if k == 0 {
            return true;
        }
        let lat = &self.filtration[k];
        let inv = Lattice::full(self.model.dim()).quotient_invariants(lat);
        let mut odd = BigInt::one();
        for d in &inv {
            assert!(!d.is_zero(), "A/F^k is expected to be finite");
            let pp = num_traits::pow(BigInt::from(self.prime), valuation(self.prime, d) as usize);
            odd *= d / pp;
        }
        let w: Vec<BigInt> = v.iter().map(|x| x * &odd).collect();
        lat.contains(&w)
    }

    /// Largest `k <= max_degree + 1` with `v` in `F^k (x) Z_p`.
    pub fn degree_of(&self, v: &[BigInt]) -> u32 {
        (0..=self.max_degree + 1)
            .rev()
            .find(|&k| self.in_filtration(v, k))
            .unwrap_or(0)
    }

    pub fn piece_ranks(&self) -> Vec<usize> {
        self.pieces.iter().map(|g| g.rank()).collect()
    }

    /// `log_p |A / F^{k}|`, p-part.
    pub fn cumulative_order_exponent(&self, k: u32) -> u32 {
        self.pieces[..k as usize]
            .iter()
            .map(|g| g.order_exponent().unwrap())
            .sum()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub name: String,
    pub weighted_degree: u32,
    /// The index range of this family is empty for the given `r`.
    pub vacuous: bool,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct GradedCheck {
    pub r: u32,
    pub n: u32,
    pub filtration: FiltrationReport,
    pub piece_ranks: Vec<usize>,
    /// Hilbert function of the presented graded ring over `F_2`.
    pub expected_ranks: Vec<u64>,
    pub pieces_elementary: bool,
    pub two_degree: u32,
    pub two_represented_ok: bool,
    pub relations: Vec<RelationReport>,
    /// `log_2 |A/2A|`.
    pub mod2_rank: u32,
    /// `log_2 |A / F^{2^{r-1}+1}|` (2-part).
    pub order_through_two: u32,
}

struct Rel {
    name: String,
    degree: u32,
    /// `(coefficient, exponents of gamma_1..gamma_n)`
    terms: Vec<(i64, Vec<u16>)>,
}

fn mono(n: usize, pairs: &[(usize, u16)]) -> Vec<u16> {
    let mut e = vec![0u16; n];
    for &(i, k) in pairs {
        e[i - 1] += k;
    }
    e
}

/// Relations of the presented associated graded ring, grouped by family.
fn presented_relations(r: u32) -> Vec<(String, Vec<Rel>)> {
    let n = (1usize << r) - 2;
    let h = 1usize << (r - 1);
    let mut fam1 = Vec::new();
    for i in 2..h {
        fam1.push(Rel {
            name: format!("gamma_{i} + gamma_1^{i}"),
            degree: i as u32,
            terms: vec![(1, mono(n, &[(i, 1)])), (1, mono(n, &[(1, i as u16)]))],
        });
    }
    let mut fam2 = Vec::new();
    for i in h + 1..=n {
        fam2.push(Rel {
            name: format!("gamma_{i} + gamma_{h} gamma_1^{}", i - h),
            degree: i as u32,
            terms: vec![
                (1, mono(n, &[(i, 1)])),
                (1, mono(n, &[(h, 1), (1, (i - h) as u16)])),
            ],
        });
    }
    let fam3 = vec![Rel {
        name: format!("gamma_{h} gamma_1^{}", h - 1),
        degree: (2 * h - 1) as u32,
        terms: vec![(1, mono(n, &[(h, 1), (1, (h - 1) as u16)]))],
    }];
    vec![
        ("gamma_i + gamma_1^i".into(), fam1),
        ("gamma_i + gamma_h gamma_1^(i-h)".into(), fam2),
        ("gamma_h gamma_1^(h-1)".into(), fam3),
    ]
}

fn eval_gamma_monomial(model: &LevelOneModel, gammas: &[Vec<BigInt>], e: &[u16]) -> Vec<BigInt> {
    let mut acc = model.constant(1);
    for (i, &k) in e.iter().enumerate() {
        for _ in 0..k {
            acc = model.mul(&acc, &gammas[i]);
        }
    }
    acc
}

/// Weighted filtration of the level-one algebra of `Sp(2^r - 2)` at `p = 2`, compared with the presented ring.
pub fn level1_graded_check(r: u32, max_degree: u32) -> Result<GradedCheck> {
    if !(2..=5).contains(&r) {
        return invalid("r must lie in 2..=5");
    }
    let n = (1u32 << r) - 2;
    let h = 1u32 << (r - 1);
    if max_degree < 2 * h {
        return invalid(format!("max_degree must be at least {}", 2 * h));
    }
    let gam = gamma_polynomials(n);
    let weights: Vec<u32> = (1..=n).collect();
    let rep = associated_graded(n, &gam, &weights, max_degree, 2)?;
    let model = rep.model().clone();
    let gv: Vec<Vec<BigInt>> = gam.iter().map(|g| model.reduce(g)).collect();

    let pieces_elementary = rep
        .pieces
        .iter()
        .all(|g| g.exponents.iter().all(|e| *e == Exponent::Finite(1)));
    let two = model.constant(2);
    let two_degree = rep.degree_of(&two);
    let g1h = eval_gamma_monomial(&model, &gv, &mono(n as usize, &[(1, h as u16)]));
    let diff: Vec<BigInt> = two
        .iter()
        .zip(&gv[h as usize - 1])
        .zip(&g1h)
        .map(|((a, b), c)| a - b - c)
        .collect();
    let two_represented_ok = rep.in_filtration(&gv[h as usize - 1], h)
        && rep.in_filtration(&diff, h + 1);

    let mut relations = vec![RelationReport {
        name: "2".into(),
        weighted_degree: 0,
        vacuous: false,
        holds: pieces_elementary,
    }];
    let mut fp_rels: Vec<FpPoly> = Vec::new();
    for (family, rels) in presented_relations(r) {
        if rels.is_empty() {
            relations.push(RelationReport {
                name: family,
                weighted_degree: 0,
                vacuous: true,
                holds: true,
            });
            continue;
        }
        for rel in rels {
            let mut v = model.constant(0);
            for (c, e) in &rel.terms {
                let t = eval_gamma_monomial(&model, &gv, e);
                for (x, y) in v.iter_mut().zip(&t) {
                    *x += y * c;
                }
            }
            relations.push(RelationReport {
                name: rel.name.clone(),
                weighted_degree: rel.degree,
                vacuous: false,
                holds: rep.in_filtration(&v, rel.degree + 1),
            });
            fp_rels.push(FpPoly::from_terms(
                2,
                rel.terms.iter().map(|(c, e)| (e.clone(), *c)).collect(),
            ));
        }
    }
    let gb = GroebnerBasisFp::compute(2, n as usize, fp_rels, 1_000_000)?;
    let expected_ranks = gb.standard_monomials_by_weight(&weights, max_degree);

    let full = Lattice::full(model.dim());
    let twice = Lattice::from_generators(
        model.dim(),
        full.basis().iter().map(|b| b.iter().map(|x| x * 2).collect()),
    );
    let mod2_rank = full
        .quotient_invariants(&twice)
        .iter()
        .map(|d| valuation(2, d))
        .sum();
    Ok(GradedCheck {
        r,
        n,
        piece_ranks: rep.piece_ranks(),
        expected_ranks,
        pieces_elementary,
        two_degree,
        two_represented_ok,
        relations,
        mod2_rank,
        order_through_two: rep.cumulative_order_exponent(h + 1),
        filtration: rep,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn r2_pieces() {
        let c = level1_graded_check(2, 6).unwrap();
        assert_eq!(c.piece_ranks, vec![1, 1, 2, 1, 2, 1, 2]);
        assert_eq!(c.expected_ranks, vec![1, 1, 2, 1, 2, 1, 2]);
        assert_eq!(c.two_degree, 2);
        assert!(c.two_represented_ok);
        assert!(c.relations.iter().all(|r| r.holds));
        assert_eq!(c.mod2_rank, 3);
        assert_eq!(c.order_through_two, 4);
    }
}
