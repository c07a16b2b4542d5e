//! AHU-style canonical codes for unlabeled trees.
//!
//! The tree is rooted at its center. Vertices are ranked level by level from
//! the deepest upwards: a vertex's key is the sorted list of its children's
//! ranks, and ranks within a level follow the order of those keys. The code
//! is the parenthesis string of a depth-first walk visiting children by rank,
//! packed as bits (`1` = open, `0` = close). For bicentral trees the smaller
//! of the two center-rooted strings is kept.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::structure::farthest;
use crate::{Error, Result, Tree, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        let mut out = String::with_capacity(self.0.len() * 2);
        for b in &self.0 {
            out.push_str(&alloc::format!("{b:02x}"));
        }
        out
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        let s = s.trim();
        if !s.len().is_multiple_of(2) || s.is_empty() {
            return Err(Error::parse(1, "hex code must have an even, non-zero length"));
        }
        (0..s.len())
            .step_by(2)
            .map(|i| {
                s.get(i..i + 2)
                    .and_then(|pair| u8::from_str_radix(pair, 16).ok())
                    .ok_or_else(|| Error::parse(1, "invalid hex digit"))
            })
            .collect::<Result<Vec<u8>>>()
            .map(CanonicalCode)
    }
}

impl core::fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

/// The one or two centers of a tree, ascending.
pub fn centers(t: &Tree) -> Vec<Vertex> {
    let (a, _) = farthest(t, 0);
    let (b, diam) = farthest(t, a);
    // Walk back from b towards a along the unique path.
    let from_a = t.distances_from(a);
    let mut path = vec![b];
    let mut cur = b;
    while cur != a {
        cur = *t
            .neighbors(cur)
            .iter()
            .find(|&&w| from_a[w] + 1 == from_a[cur])
            .expect("predecessor on the path");
        path.push(cur);
    }
    let mut cs = if diam % 2 == 0 {
        vec![path[diam / 2]]
    } else {
        vec![path[diam / 2], path[diam / 2 + 1]]
    };
    cs.sort_unstable();
    cs
}

/// Parenthesis string (`true` = open) of `t` rooted at `root`.
pub(crate) fn rooted_parens(t: &Tree, root: Vertex) -> Vec<bool> {
    let rooted = t.rooted(root);
    let n = t.order();
    let mut depth = vec![0usize; n];
    for &u in &rooted.order {
        if let Some(p) = rooted.parent[u] {
            depth[u] = depth[p] + 1;
        }
    }
    let max_depth = depth.iter().copied().max().unwrap_or(0);
    let mut levels: Vec<Vec<Vertex>> = vec![Vec::new(); max_depth + 1];
    for &u in &rooted.order {
        levels[depth[u]].push(u);
    }
    let mut rank = vec![0u32; n];
    let mut children: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    for &u in &rooted.order {
        if let Some(p) = rooted.parent[u] {
            children[p].push(u);
        }
    }
    for level in levels.iter().rev() {
        let mut keyed: Vec<(Vec<u32>, Vertex)> = level
            .iter()
            .map(|&u| {
                children[u].sort_by_key(|&c| rank[c]);
                (children[u].iter().map(|&c| rank[c]).collect(), u)
            })
            .collect();
        keyed.sort();
        let mut next = 0u32;
        for i in 0..keyed.len() {
            if i > 0 && keyed[i].0 != keyed[i - 1].0 {
                next += 1;
            }
            rank[keyed[i].1] = next;
        }
    }
    let mut out = Vec::with_capacity(2 * n);
    // Explicit stack of (vertex, next child index).
    let mut stack = vec![(root, 0usize)];
    out.push(true);
    while let Some(top) = stack.last_mut() {
        let (u, i) = *top;
        if i < children[u].len() {
            top.1 += 1;
            let c = children[u][i];
            out.push(true);
            stack.push((c, 0));
        } else {
            out.push(false);
            stack.pop();
        }
    }
    out
}

fn pack(bits: &[bool]) -> CanonicalCode {
    let mut bytes = vec![0u8; bits.len().div_ceil(8)];
    for (i, &b) in bits.iter().enumerate() {
        if b {
            bytes[i / 8] |= 0x80 >> (i % 8);
        }
    }
    CanonicalCode(bytes)
}

pub fn canonical_code(t: &Tree) -> CanonicalCode {
    let best = centers(t)
        .into_iter()
        .map(|c| rooted_parens(t, c))
        // `true` sorts after `false`, so compare on the "open" flag inverted
        // to keep '(' < ')' as in the textual form.
        .min_by(|a, b| a.iter().map(|&x| !x).cmp(b.iter().map(|&x| !x)))
        .expect("a tree has at least one center");
    pack(&best)
}

pub fn is_isomorphic(a: &Tree, b: &Tree) -> bool {
    a.order() == b.order() && canonical_code(a) == canonical_code(b)
}
