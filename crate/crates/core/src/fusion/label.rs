//! Young-diagram labels and evaluation sets.

use std::fmt;

use serde::Serialize;

use crate::error::{invalid, Result};

/// Partition with nonincreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct SpLabel {
    parts: Vec<u32>,
}

impl SpLabel {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return invalid(format!("{parts:?} is not a partition"));
        }
        Ok(SpLabel { parts })
    }

    pub fn empty() -> Self {
        SpLabel { parts: Vec::new() }
    }

    /// A single column of length `k`, the k-th fundamental representation.
    pub fn column(k: usize) -> Self {
        SpLabel {
            parts: vec![1; k],
        }
    }

    pub fn row(k: u32) -> Self {
        SpLabel::new(vec![k]).unwrap()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    /// Number of columns.
    pub fn level(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Column lengths.
    pub fn conjugate(&self) -> Vec<u32> {
        (1..=self.level())
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect()
    }

    pub fn from_columns(cols: &[u32]) -> Self {
        let rows = cols.first().copied().unwrap_or(0);
        SpLabel {
            parts: (1..=rows)
                .map(|i| cols.iter().filter(|&&c| c >= i).count() as u32)
                .collect(),
        }
    }
}

impl fmt::Display for SpLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.parts.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", p.join(","))
    }
}

fn partitions_in_box(rows: usize, max_part: u32, out: &mut Vec<Vec<u32>>, cur: &mut Vec<u32>) {
    out.push(cur.clone());
    if cur.len() == rows {
        return;
    }
    let cap = cur.last().copied().unwrap_or(max_part);
    for p in 1..=cap {
        cur.push(p);
        partitions_in_box(rows, max_part, out, cur);
        cur.pop();
    }
}

/// Labels of `V(m,n)`: at most `n` rows, at most `m - n - 1` columns, sorted with the unit first.
pub fn labels(m: u32, n: u32) -> Vec<SpLabel> {
    assert!(m >= n + 2, "need m >= n + 2");
    let mut out = Vec::new();
    partitions_in_box(n as usize, m - n - 1, &mut out, &mut Vec::new());
    let mut ls: Vec<SpLabel> = out.into_iter().map(|parts| SpLabel { parts }).collect();
    ls.sort();
    ls
}

/// Diagrams with exactly `q` columns and at most `n` rows.
pub fn level_labels(n: u32, q: u32) -> Vec<SpLabel> {
    let mut out = Vec::new();
    if q == 0 {
        return vec![SpLabel::empty()];
    }
    partitions_in_box(n as usize - 1, q, &mut out, &mut Vec::new());
    let mut ls: Vec<SpLabel> = out
        .into_iter()
        .map(|rest| {
            let mut parts = vec![q];
            parts.extend(rest);
            SpLabel { parts }
        })
        .collect();
    ls.sort();
    ls
}

/// Strictly increasing `1 <= i_1 < ... < i_n <= m - 1`, lexicographic.
pub fn eval_sets(m: u32, n: u32) -> Vec<Vec<u32>> {
    fn go(start: u32, m: u32, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            go(i + 1, m, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, m, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::arith::binomial_u64;

    #[test]
    fn label_counts() {
        for m in 3..10u32 {
            for n in 1..=m - 2 {
                let ls = labels(m, n);
                assert_eq!(ls.len() as u64, binomial_u64(m as u64 - 1, n as u64));
                assert_eq!(ls[0], SpLabel::empty());
                assert_eq!(eval_sets(m, n).len(), ls.len());
            }
        }
    }

    #[test]
    fn conjugates() {
        let l = SpLabel::new(vec![3, 1]).unwrap();
        assert_eq!(l.conjugate(), vec![2, 1, 1]);
        assert_eq!(SpLabel::from_columns(&l.conjugate()), l);
        assert!(SpLabel::new(vec![1, 2]).is_err());
        assert_eq!(l.to_string(), "(3,1)");
    }

    #[test]
    fn level_label_shapes() {
        let ls = level_labels(2, 2);
        let parts: Vec<&[u32]> = ls.iter().map(|l| l.parts()).collect();
        assert_eq!(parts, vec![&[2][..], &[2, 1], &[2, 2]]);
    }
}
