//! The path-table description of the additive structure of `K_0^t(L HP^l)`.
//!
//! Table `T_n` (one per power of `t`) is a grid with `i` rows, `p^i || m`,
//! and `l + 1` columns. A path starting in column `j` climbs that column and
//! then walks along a row; its length is the exponent of a cyclic summand.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use serde::Serialize;

use super::lhp::lhp_ring;
use crate::completion::delta;
use crate::error::{invalid, Result};
use crate::exact::arith::valuation_u64;
use crate::exact::{cokernel_invariants, AbelianPStructure};

/// `(table, row, column)`.
pub type Cell = (u32, u32, u32);

#[derive(Clone, Debug, Serialize)]
pub struct Path {
    pub table: u32,
    pub start_column: u32,
    /// Band index: the row walk uses step `d p^a`.
    pub band: u32,
    pub critical: bool,
    /// Cells in path order; taken cells removed, appended cells at the end.
    pub cells: Vec<Cell>,
    pub appended: Vec<Cell>,
    /// Touches the last table's column `l`, where corrections from beyond the cutoff would land.
    pub boundary: bool,
}

impl Path {
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PathTable {
    pub m: u64,
    pub ell: u32,
    pub prime: u64,
    pub rows: u32,
    pub cutoff: u32,
    /// `p^c || gcd(m, l+1)`.
    pub c: u32,
    pub paths: Vec<Path>,
    pub structure: AbelianPStructure,
}

impl PathTable {
    /// No cell lies on two paths.
    pub fn disjoint(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.paths.iter().flat_map(|p| p.cells.iter()).all(|c| seen.insert(*c))
    }

    pub fn lengths(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self
            .paths
            .iter()
            .filter(|p| !p.is_empty())
            .map(|p| p.len() as u32)
            .collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    pub fn in_window_lengths(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self
            .paths
            .iter()
            .filter(|p| !p.is_empty() && !p.boundary)
            .map(|p| p.len() as u32)
            .collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }
}

struct BasePath {
    j: u32,
    a: u32,
    critical: bool,
    cells: Vec<(u32, u32)>,
    top: u32,
}

fn base_paths(m: u64, ell: u32, p: u64) -> (Vec<BasePath>, u32) {
    let k = valuation_u64(p, m);
    let d = if p == 2 { 1 } else { (p - 1) / 2 };
    let dl = delta(p, m);
    let band_lo = |a: u32| (p.pow(a) - 1) / (p - 1) * d;
    let mut out = Vec::new();
    for j in 0..dl.min(ell as u64 + 1) {
        let mut a = 0u32;
        while !(band_lo(a) <= j && j < band_lo(a + 1)) {
            a += 1;
        }
        let top = k - a - 1;
        let mut cells: Vec<(u32, u32)> = (0..k - a).map(|r| (r, j as u32)).collect();
        let step = d * p.pow(a);
        let mut col = j + step;
        while col <= ell as u64 {
            cells.push((top, col as u32));
            col += step;
        }
        out.push(BasePath {
            j: j as u32,
            a,
            critical: j == band_lo(a),
            cells,
            top,
        });
    }
    (out, k)
}

/// Runs the table algorithm on `T_0 .. T_{D-1}`.
pub fn lhp_additive_path_table(m: u64, ell: u32, p: u64, cutoff: u32) -> Result<PathTable> {
    if m < 2 || ell < 1 {
        return invalid("need m >= 2 and l >= 1");
    }
    if p < 2 || !m.is_multiple_of(p) {
        return invalid("p must be a prime dividing m");
    }
    if cutoff == 0 {
        return invalid("t-cutoff must be positive");
    }
    let (base, k) = base_paths(m, ell, p);
    let c = valuation_u64(p, m.gcd(&(ell as u64 + 1)));
    let nb = base.len();
    let orig = |n: u32, q: usize| -> Vec<Cell> { base[q].cells.iter().map(|&(r, col)| (n, r, col)).collect() };

    // cell -> (path index within its table, position along the original path)
    let mut pos: BTreeMap<Cell, (usize, usize)> = BTreeMap::new();
    for n in 0..cutoff {
        for q in 0..nb {
            for (idx, cell) in orig(n, q).into_iter().enumerate() {
                pos.insert(cell, (q, idx));
            }
        }
    }

    let mut taken: BTreeSet<Cell> = BTreeSet::new();
    let mut appended: Vec<Vec<Vec<Cell>>> = vec![vec![Vec::new(); nb]; cutoff as usize];
    for n in 0..cutoff.saturating_sub(1) {
        let mut now: BTreeSet<Cell> = BTreeSet::new();
        for (qi, q) in base.iter().enumerate() {
            if !q.critical || taken.contains(&(n, 0, q.j)) {
                continue;
            }
            let free_on_top = orig(n, qi)
                .into_iter()
                .filter(|cell| cell.1 == q.top && !taken.contains(cell))
                .count() as u32;
            let alpha = (free_on_top + c) as i64 - 1;
            let mut dd = 0i64;
            while c as i64 + alpha + dd < k as i64 {
                if c as i64 + alpha + dd < 0 {
                    dd += 1;
                    continue;
                }
                let row = (c as i64 + alpha + dd) as u32;
                let cell = (n + 1, row, ell);
                if let Some(&(_, idx)) = pos.get(&cell) {
                    let limit = alpha + dd + (k - q.a) as i64;
                    if idx as i64 <= limit && !now.contains(&cell) {
                        appended[n as usize][qi].push(cell);
                        now.insert(cell);
                    }
                }
                dd += 1;
            }
        }
        taken.extend(now);
    }

    let mut paths = Vec::new();
    for n in 0..cutoff {
        for (qi, q) in base.iter().enumerate() {
            let mut cells: Vec<Cell> = orig(n, qi).into_iter().filter(|x| !taken.contains(x)).collect();
            let app = appended[n as usize][qi].clone();
            cells.extend(app.iter().copied());
            let boundary = cells.iter().any(|&(t, _, col)| t + 1 == cutoff && col == ell);
            paths.push(Path {
                table: n,
                start_column: q.j,
                band: q.a,
                critical: q.critical,
                cells,
                appended: app,
                boundary,
            });
        }
    }
    let exps: Vec<u32> = paths.iter().map(|p| p.len() as u32).collect();
    Ok(PathTable {
        m,
        ell,
        prime: p,
        rows: k,
        cutoff,
        c,
        structure: AbelianPStructure::from_finite(p, &exps),
        paths,
    })
}

/// p-part of `Z[t,y]/(y^{l+1}, sigma^{m-1}(y) - (l+1) y^l t, t^D)`.
///
/// The presentation is square with determinant `m^{(l+1)D}`, so the exact
/// integer Smith form needs no p-adic precision bound.
pub fn truncated_oracle(m: u64, ell: u32, p: u64, cutoff: u32) -> AbelianPStructure {
    let rel = lhp_ring(m, ell).truncated_presentation(cutoff);
    AbelianPStructure::from_invariants(p, &cokernel_invariants(&rel))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ktheory::y_group_oracle;

    fn exps(s: &AbelianPStructure) -> Vec<u32> {
        s.finite_exponents()
    }

    #[test]
    fn single_table_is_y_group() {
        for m in 2..=12u64 {
            for p in crate::exact::arith::prime_factors(m) {
                for ell in 1..=6 {
                    let t = lhp_additive_path_table(m, ell, p, 1).unwrap();
                    assert_eq!(t.structure, y_group_oracle(m, ell as u64, p), "m={m} l={ell} p={p}");
                }
            }
        }
    }

    #[test]
    fn corrections_at_four_two() {
        let t = lhp_additive_path_table(4, 2, 2, 2).unwrap();
        assert_eq!(t.lengths(), vec![4, 4, 2, 1, 1]);
        assert!(t.disjoint());
        let t3 = lhp_additive_path_table(4, 2, 2, 3).unwrap();
        assert_eq!(t3.lengths(), vec![4, 4, 4, 2, 2, 1, 1]);
        assert_eq!(exps(&truncated_oracle(4, 2, 2, 3)), t3.lengths());
    }

    #[test]
    fn rejects_bad_prime() {
        assert!(lhp_additive_path_table(6, 2, 5, 2).is_err());
        assert!(lhp_additive_path_table(6, 2, 2, 0).is_err());
    }
}
