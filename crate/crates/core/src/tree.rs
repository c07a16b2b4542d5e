use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, NotATreeReason};
use crate::Result;

pub type Vertex = usize;

/// An immutable simple tree on the vertices `0..n`.
///
/// Neighbor lists are kept sorted, so two trees compare equal exactly when
/// they have the same labeled edge set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tree {
    adj: Vec<Vec<Vertex>>,
}

impl Tree {
    /// Builds a tree from `n` and its edge list, checking the tree property.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Tree> {
        if n == 0 {
            return Err(Error::EmptyInput);
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::NotATree(NotATreeReason::SelfLoop(u)));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let v = w[0];
                return Err(Error::NotATree(NotATreeReason::DuplicateEdge(u.min(v), u.max(v))));
            }
        }
        let tree = Tree { adj };
        let reached = tree.bfs_order(0).len();
        if reached < n {
            return Err(Error::NotATree(NotATreeReason::Disconnected));
        }
        if edges.len() + 1 != n {
            return Err(Error::NotATree(NotATreeReason::Cycle));
        }
        Ok(tree)
    }

    /// The single-vertex tree.
    pub fn singleton() -> Tree {
        Tree { adj: vec![Vec::new()] }
    }

    /// Decodes a Prüfer sequence over `0..seq.len() + 2`.
    pub fn from_prufer(seq: &[Vertex]) -> Result<Tree> {
        let n = seq.len() + 2;
        if let Some(&bad) = seq.iter().find(|&&x| x >= n) {
            return Err(Error::VertexOutOfRange { vertex: bad, n });
        }
        let mut degree = vec![1usize; n];
        for &x in seq {
            degree[x] += 1;
        }
        let mut leaves: alloc::collections::BinaryHeap<core::cmp::Reverse<usize>> =
            (0..n).filter(|&v| degree[v] == 1).map(core::cmp::Reverse).collect();
        let mut edges = Vec::with_capacity(n - 1);
        for &x in seq {
            let core::cmp::Reverse(leaf) = leaves.pop().expect("a leaf always exists");
            edges.push((leaf, x));
            degree[x] -= 1;
            if degree[x] == 1 {
                leaves.push(core::cmp::Reverse(x));
            }
        }
        let core::cmp::Reverse(a) = leaves.pop().expect("two leaves remain");
        let core::cmp::Reverse(b) = leaves.pop().expect("two leaves remain");
        edges.push((a, b));
        Tree::from_edges(n, &edges)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    /// Degree-0 vertices (only in the singleton) count as leaves.
    #[inline]
    pub fn is_leaf(&self, v: Vertex) -> bool {
        self.adj[v].len() <= 1
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> core::ops::Range<Vertex> {
        0..self.order()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.order(),
            })
        }
    }

    /// Renames vertex `v` to `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[Vertex]) -> Tree {
        assert_eq!(perm.len(), self.order(), "permutation length");
        let mut adj = vec![Vec::new(); self.order()];
        for (u, list) in self.adj.iter().enumerate() {
            let mut mapped: Vec<Vertex> = list.iter().map(|&v| perm[v]).collect();
            mapped.sort_unstable();
            adj[perm[u]] = mapped;
        }
        Tree { adj }
    }

    /// Breadth-first visiting order from `root`.
    pub fn bfs_order(&self, root: Vertex) -> Vec<Vertex> {
        let mut seen = vec![false; self.order()];
        let mut order = Vec::with_capacity(self.order());
        let mut queue = VecDeque::new();
        seen[root] = true;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        order
    }

    /// Edge-count distances from `src` to every vertex.
    pub fn distances_from(&self, src: Vertex) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.order()];
        dist[src] = 0;
        for u in self.bfs_order(src) {
            for &v in &self.adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                }
            }
        }
        dist
    }

    /// Parent of every vertex when rooted at `root` (`None` for the root), and
    /// the BFS order used to compute it.
    pub fn rooted(&self, root: Vertex) -> Rooted {
        let order = self.bfs_order(root);
        let mut parent = vec![None; self.order()];
        for &u in &order {
            for &v in &self.adj[u] {
                if Some(v) != parent[u] {
                    parent[v] = Some(u);
                }
            }
        }
        Rooted { order, parent }
    }

    /// Deletes `removed` and relabels the survivors compactly, preserving
    /// their relative order. Returns the new tree and the map old -> new.
    pub(crate) fn remove_vertices(&self, removed: &[Vertex]) -> Result<(Tree, Vec<Option<Vertex>>)> {
        let mut gone = vec![false; self.order()];
        for &v in removed {
            self.check_vertex(v)?;
            gone[v] = true;
        }
        let mut map = vec![None; self.order()];
        let mut next = 0;
        for v in self.vertices() {
            if !gone[v] {
                map[v] = Some(next);
                next += 1;
            }
        }
        let edges: Vec<_> = self.edges().filter_map(|(u, v)| Some((map[u]?, map[v]?))).collect();
        Ok((Tree::from_edges(next, &edges)?, map))
    }

    /// Appends `extra` new vertices (labeled `n..n + extra`) and the given
    /// edges, which may touch old or new vertices.
    pub(crate) fn extend(&self, extra: usize, edges: &[(Vertex, Vertex)]) -> Result<Tree> {
        let mut all: Vec<_> = self.edges().collect();
        all.extend_from_slice(edges);
        Tree::from_edges(self.order() + extra, &all)
    }
}

/// A rooted view of a tree: BFS order from the root and parent pointers.
#[derive(Clone, Debug)]
pub struct Rooted {
    pub order: Vec<Vertex>,
    pub parent: Vec<Option<Vertex>>,
}

/// A sorted, duplicate-free set of vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(transparent))]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn from_mask(mask: &[bool]) -> Self {
        VertexSet(mask.iter().enumerate().filter(|(_, &b)| b).map(|(v, _)| v).collect())
    }

    pub fn from_bits(bits: u64, n: usize) -> Self {
        VertexSet((0..n).filter(|&v| bits >> v & 1 == 1).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn to_mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for &v in &self.0 {
            mask[v] = true;
        }
        mask
    }

    pub fn complement(&self, n: usize) -> VertexSet {
        (0..n).filter(|&v| !self.contains(v)).collect()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    /// Checks every member is a vertex of a tree of order `n`.
    pub fn check_within(&self, n: usize) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= n => Err(Error::VertexOutOfRange { vertex: v, n }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut members: Vec<Vertex> = iter.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(members: [Vertex; N]) -> Self {
        members.into_iter().collect()
    }
}

impl From<Vec<Vertex>> for VertexSet {
    fn from(members: Vec<Vertex>) -> Self {
        members.into_iter().collect()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = Vertex;
    type IntoIter = core::iter::Copied<core::slice::Iter<'a, Vertex>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}
