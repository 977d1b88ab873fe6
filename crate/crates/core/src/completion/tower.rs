//! Finite stages `Z[y]/(sigma^{m-1}(y), y^{l+1})` of the completed rank-one algebra.

use serde::Serialize;

use super::delta;
use crate::error::{invalid, Result};
use crate::exact::{cokernel_invariants, AbelianPStructure, Exponent, IntMatrix, Lattice};
use crate::sym::sigma;

/// Relations `y^a sigma^{m-1}(y)`, `a = 0..l`, on the basis `1, y, ..., y^l`.
pub fn sigma_quotient_presentation(m: u32, ell: u32) -> IntMatrix {
    let s = sigma(m as usize - 1);
    let w = ell as usize + 1;
    let mut rel = IntMatrix::zeros(w, w);
    for a in 0..w {
        for (k, c) in s.coeffs().iter().enumerate() {
            if a + k < w {
                rel[(a, a + k)] = c.clone();
            }
        }
    }
    rel
}

/// p-part of `Z[y]/(sigma^{m-1}(y), y^{l+1})`.
pub fn sigma_quotient_structure(m: u32, ell: u32, p: u64) -> AbelianPStructure {
    AbelianPStructure::from_invariants(p, &cokernel_invariants(&sigma_quotient_presentation(m, ell)))
}

#[derive(Clone, Debug, Serialize)]
pub struct TowerStage {
    pub ell: u32,
    pub structure: AbelianPStructure,
    pub capped: AbelianPStructure,
    /// The projection from stage `l` to stage `l - 1` respects relations.
    pub map_ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TowerReport {
    pub m: u32,
    pub prime: u64,
    pub precision: u32,
    pub delta: u64,
    pub stages: Vec<TowerStage>,
    /// First stage from which every computed stage is `(Z/p^k)^delta`.
    pub stabilized_from: Option<u32>,
}

pub fn completion_tower_sp1(m: u32, ell_max: u32, p: u64, precision: u32) -> Result<TowerReport> {
    if m < 2 {
        return invalid("m must be at least 2");
    }
    if precision == 0 {
        return invalid("precision must be positive");
    }
    let d = delta(p, m as u64);
    let target = AbelianPStructure::new(p, vec![Exponent::Finite(precision); d as usize]);
    let mut stages: Vec<TowerStage> = Vec::new();
    let mut prev: Option<Lattice> = None;
    for ell in 0..=ell_max {
        let rel = sigma_quotient_presentation(m, ell);
        let lat = Lattice::from_generators(rel.cols(), rel.to_rows());
        let map_ok = match &prev {
            None => true,
            Some(pl) => rel
                .to_rows()
                .iter()
                .all(|r| pl.contains(&r[..r.len() - 1])),
        };
        let structure = AbelianPStructure::from_invariants(p, &cokernel_invariants(&rel));
        let capped = structure.capped(precision);
        stages.push(TowerStage {
            ell,
            structure,
            capped,
            map_ok,
        });
        prev = Some(lat);
    }
    let stabilized_from = stages
        .iter()
        .rposition(|s| s.capped != target)
        .map_or(Some(0), |i| (i + 1 < stages.len()).then(|| stages[i + 1].ell));
    Ok(TowerReport {
        m,
        prime: p,
        precision,
        delta: d,
        stages,
        stabilized_from,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degenerate_m2() {
        let t = completion_tower_sp1(2, 6, 2, 20).unwrap();
        for s in &t.stages {
            assert_eq!(s.structure.finite_exponents(), vec![s.ell + 1]);
            assert!(s.map_ok);
        }
        assert_eq!(t.stabilized_from, None);
    }

    #[test]
    fn m4_stabilizes_at_delta() {
        let t = completion_tower_sp1(4, 12, 2, 2).unwrap();
        assert_eq!(t.delta, 3);
        assert!(t.stabilized_from.is_some());
        assert!(t.stages.iter().all(|s| s.map_ok));
        assert_eq!(t.stages.last().unwrap().capped.rank(), 3);
    }
}
