//! A k-ordering compiled into the set of fully ordered patterns it can
//! appear as, for bitmask matching on (partial) colorings.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::graph::KOrdering;

/// Edges over sorted image positions `0..m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Pattern {
    edges: Vec<(usize, usize)>,
    nbr: Vec<u64>,
}

#[derive(Clone, Debug)]
pub(crate) struct Target {
    m: usize,
    patterns: Vec<Pattern>,
}

#[inline]
fn range_mask(lo: usize, hi: usize) -> u64 {
    if lo > hi || lo >= 64 {
        return 0;
    }
    (u64::MAX >> (63 - hi.min(63))) & (u64::MAX << lo)
}

impl Target {
    pub(crate) fn compile(h: &KOrdering) -> Target {
        let m = h.n();
        let edges: Vec<(usize, usize)> = h.graph().edges().map(|(a, b)| (a - 1, b - 1)).collect();
        let mut sets: BTreeSet<Vec<(usize, usize)>> = BTreeSet::new();
        for pos in (0..m).permutations(m) {
            if h.labels().iter().any(|(&v, &l)| pos[v - 1] != l - 1) {
                continue;
            }
            let mut pe: Vec<(usize, usize)> = edges
                .iter()
                .map(|&(a, b)| (pos[a].min(pos[b]), pos[a].max(pos[b])))
                .collect();
            pe.sort_unstable();
            sets.insert(pe);
        }
        // a pattern whose edge set contains another's is implied by it
        let all: Vec<_> = sets.into_iter().collect();
        let minimal = all
            .iter()
            .filter(|p| {
                !all.iter()
                    .any(|q| q != *p && q.iter().all(|e| p.binary_search(e).is_ok()))
            })
            .cloned();
        let patterns = minimal
            .map(|edges| {
                let mut nbr = vec![0u64; m];
                for &(a, b) in &edges {
                    nbr[a] |= 1 << b;
                    nbr[b] |= 1 << a;
                }
                Pattern { edges, nbr }
            })
            .collect();
        Target { m, patterns }
    }

    pub(crate) fn order(&self) -> usize {
        self.m
    }

    pub(crate) fn is_edgeless(&self) -> bool {
        self.patterns.iter().all(|p| p.edges.is_empty())
    }

    /// Canonical form, used to compare what two targets forbid.
    pub(crate) fn signature(&self) -> (usize, BTreeSet<Vec<(usize, usize)>>) {
        (self.m, self.patterns.iter().map(|p| p.edges.clone()).collect())
    }

    /// Whether `adj` (0-based neighbor masks over `n` vertices, colored edges
    /// only) holds a copy that uses the edge `{i, j}`, `i < j`.
    pub(crate) fn hits_edge(&self, adj: &[u64], n: usize, i: usize, j: usize, w: &mut [usize]) -> bool {
        let m = self.m;
        if m > n {
            return false;
        }
        for p in &self.patterns {
            for &(a, b) in &p.edges {
                if a > i || b - a > j - i || m - 1 - b > n - 1 - j {
                    continue;
                }
                w[a] = i;
                w[b] = j;
                if extend(p, adj, n, m, a, b, 0, w) {
                    return true;
                }
            }
        }
        false
    }

    /// Whether any copy exists among the colored edges of `adj`.
    pub(crate) fn appears_in(&self, adj: &[u64], n: usize, w: &mut [usize]) -> bool {
        (0..n).any(|i| {
            let mut higher = adj[i] & !range_mask(0, i);
            while higher != 0 {
                let j = higher.trailing_zeros() as usize;
                higher &= higher - 1;
                if self.hits_edge(adj, n, i, j, w) {
                    return true;
                }
            }
            false
        })
    }
}

/// Fills positions `pos..m` other than the pinned `a < b`, ascending.
#[allow(clippy::too_many_arguments)]
fn extend(p: &Pattern, adj: &[u64], n: usize, m: usize, a: usize, b: usize, pos: usize, w: &mut [usize]) -> bool {
    let mut pos = pos;
    while pos == a || pos == b {
        pos += 1;
    }
    if pos >= m {
        return true;
    }
    let lo = if pos == 0 { 0 } else { w[pos - 1] + 1 };
    let hi = if pos < a {
        w[a] - 1
    } else if pos < b {
        w[b] - 1
    } else {
        n - 1
    };
    let mut cand = range_mask(lo, hi);
    let below = if pos == 0 { 0 } else { range_mask(0, pos - 1) };
    let placed = below | (1 << a) | (1 << b);
    let mut need = p.nbr[pos] & placed;
    while need != 0 && cand != 0 {
        let q = need.trailing_zeros() as usize;
        need &= need - 1;
        cand &= adj[w[q]];
    }
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        w[pos] = v;
        if extend(p, adj, n, m, a, b, pos + 1, w) {
            return true;
        }
    }
    false
}
