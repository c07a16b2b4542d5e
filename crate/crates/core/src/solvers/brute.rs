//! Exhaustive subset search over bitmasks.
//!
//! This is the independent oracle for the tree programs. It works on any
//! small simple graph, not only trees.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result, Tree, Vertex, VertexSet};

use super::Invariant;

pub const DEFAULT_CAP: usize = 20;

/// A simple graph on at most 64 vertices stored as neighbor masks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallGraph {
    n: usize,
    nbr: Vec<u64>,
}

impl SmallGraph {
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        if n > 64 {
            return Err(Error::TooLarge { n, cap: 64 });
        }
        let mut nbr = vec![0u64; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u != v {
                nbr[u] |= 1 << v;
                nbr[v] |= 1 << u;
            }
        }
        Ok(SmallGraph { n, nbr })
    }

    pub fn from_tree(t: &Tree) -> Result<Self> {
        let edges: Vec<_> = t.edges().collect();
        Self::from_edges(t.order(), &edges)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    fn full(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn is_independent(&self, set: u64) -> bool {
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.nbr[v] & set != 0 {
                return false;
            }
        }
        true
    }

    pub fn is_total_dominating(&self, set: u64) -> bool {
        self.nbr.iter().all(|&nb| nb & set != 0)
    }

    pub fn is_tcoi(&self, set: u64) -> bool {
        let outside = self.full() & !set;
        outside != 0 && self.is_independent(outside) && self.is_total_dominating(set)
    }

    pub fn satisfies(&self, which: Invariant, set: u64) -> bool {
        match which {
            Invariant::Beta => self.is_independent(set),
            Invariant::GammaT => self.is_total_dominating(set),
            Invariant::Tcoi => self.is_tcoi(set),
        }
    }

    /// Sizes to try, best first.
    fn sizes(&self, which: Invariant) -> Vec<usize> {
        match which {
            Invariant::Beta => (0..=self.n).rev().collect(),
            _ => (0..=self.n).collect(),
        }
    }

    /// Optimum and the lexicographically smallest optimal set.
    pub fn solve(&self, which: Invariant) -> Option<(usize, u64)> {
        for k in self.sizes(which) {
            if let Some(mask) = Combinations::new(self.n, k).find(|&m| self.satisfies(which, m)) {
                return Some((k, mask));
            }
        }
        None
    }

    /// All optimal sets, in lexicographic order.
    pub fn all_optimal(&self, which: Invariant) -> Vec<u64> {
        for k in self.sizes(which) {
            let found: Vec<u64> = Combinations::new(self.n, k)
                .filter(|&m| self.satisfies(which, m))
                .collect();
            if !found.is_empty() {
                return found;
            }
        }
        Vec::new()
    }
}

/// k-subsets of `0..n` as bitmasks, in lexicographic order of their sorted
/// member lists.
pub struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            idx: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.done {
            return None;
        }
        let mask = self.idx.iter().fold(0u64, |m, &i| m | 1 << i);
        let k = self.idx.len();
        match (0..k).rev().find(|&i| self.idx[i] < self.n - k + i) {
            Some(i) => {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
            }
            None => self.done = true,
        }
        Some(mask)
    }
}

/// Brute-force optimum of `which` on `t` with the default cap.
pub fn brute_force(t: &Tree, which: Invariant) -> Result<(usize, VertexSet)> {
    brute_force_capped(t, which, DEFAULT_CAP)
}

pub fn brute_force_capped(t: &Tree, which: Invariant, cap: usize) -> Result<(usize, VertexSet)> {
    let n = t.order();
    if n > cap.min(64) {
        return Err(Error::TooLarge { n, cap: cap.min(64) });
    }
    which.check_defined(n)?;
    let g = SmallGraph::from_tree(t)?;
    let (value, mask) = g.solve(which).ok_or(Error::Undefined(which.undefined_reason()))?;
    Ok((value, VertexSet::from_bits(mask, n)))
}
