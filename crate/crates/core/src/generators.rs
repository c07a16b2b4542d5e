//! Builders for named trees and the extremal families.

use alloc::vec::Vec;

use crate::{Error, Result, Tree, VertexSet};

fn bad(msg: impl Into<alloc::string::String>) -> Error {
    Error::BadParameter(msg.into())
}

/// Path `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Result<Tree> {
    if n == 0 {
        return Err(bad("path needs at least one vertex"));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Tree::from_edges(n, &edges)
}

/// Star on `n` vertices with center 0.
pub fn star(n: usize) -> Result<Tree> {
    if n == 0 {
        return Err(bad("star needs at least one vertex"));
    }
    let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    Tree::from_edges(n, &edges)
}

/// Centers 0 and 1; `a` leaves on 0 (labels `2..2+a`), then `b` leaves on 1.
pub fn double_star(a: usize, b: usize) -> Result<Tree> {
    if a == 0 || b == 0 {
        return Err(bad("double star needs at least one leaf on each center"));
    }
    let mut edges = alloc::vec![(0, 1)];
    edges.extend((0..a).map(|i| (0, 2 + i)));
    edges.extend((0..b).map(|i| (1, 2 + a + i)));
    Tree::from_edges(a + b + 2, &edges)
}

/// Spine `0..k` with a pendant leaf `k + i` on each spine vertex `i`.
pub fn comb(k: usize) -> Result<Tree> {
    if k == 0 {
        return Err(bad("comb needs a non-empty spine"));
    }
    let mut edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
    edges.extend((0..k).map(|i| (i, k + i)));
    Tree::from_edges(2 * k, &edges)
}

/// Center 0 with legs of the given lengths, numbered leg by leg outwards.
pub fn spider(legs: &[usize]) -> Result<Tree> {
    if legs.contains(&0) {
        return Err(bad("spider legs must have positive length"));
    }
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Tree::from_edges(next, &edges)
}

/// The tree `Q_r`: spine `v s s_1 ... s_r` (labels `0..r+2`) with one
/// pendant leaf on every spine vertex except `v` (labels `r+2..2r+3`).
pub fn q_tree(r: usize) -> Result<Tree> {
    if r < 2 {
        return Err(bad("Q_r needs r >= 2"));
    }
    let spine = r + 2;
    let mut edges: Vec<_> = (1..spine).map(|i| (i - 1, i)).collect();
    edges.extend((1..spine).map(|i| (i, spine + i - 1)));
    Tree::from_edges(2 * r + 3, &edges)
}

/// Base tree plus a partition of its vertices into `u`-type and `v`-type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyFSpec {
    base: Tree,
    u_vertices: VertexSet,
    v_vertices: VertexSet,
}

impl FamilyFSpec {
    pub fn new(base: Tree, u_vertices: VertexSet, v_vertices: VertexSet) -> Result<Self> {
        let n = base.order();
        let bad_spec = |m: &str| Err(Error::BadSpec(m.into()));
        if u_vertices.is_empty() || v_vertices.is_empty() {
            return bad_spec("both vertex classes must be non-empty");
        }
        if u_vertices.check_within(n).is_err() || v_vertices.check_within(n).is_err() {
            return bad_spec("vertex outside the base tree");
        }
        if u_vertices.iter().any(|v| v_vertices.contains(v)) {
            return bad_spec("vertex classes overlap");
        }
        if u_vertices.len() + v_vertices.len() != n {
            return bad_spec("vertex classes do not cover the base tree");
        }
        Ok(FamilyFSpec {
            base,
            u_vertices,
            v_vertices,
        })
    }

    pub fn base(&self) -> &Tree {
        &self.base
    }

    pub fn b(&self) -> usize {
        self.u_vertices.len()
    }

    pub fn d(&self) -> usize {
        self.v_vertices.len()
    }

    pub fn u_vertices(&self) -> &VertexSet {
        &self.u_vertices
    }

    pub fn v_vertices(&self) -> &VertexSet {
        &self.v_vertices
    }
}

/// Builds `T_{b,d}`. Base labels are kept. Every base vertex gets two
/// pendant leaves; each `u` vertex is joined to a leaf of a 4-vertex star,
/// each `v` vertex to the far end of the subdivided edge of a 5-vertex
/// subdivided star.
pub fn family_f(spec: &FamilyFSpec) -> Result<Tree> {
    let base = &spec.base;
    let mut edges: Vec<_> = base.edges().collect();
    let mut next = base.order();
    let mut fresh = || {
        next += 1;
        next - 1
    };
    for x in base.vertices() {
        let (a, b) = (fresh(), fresh());
        edges.extend([(x, a), (x, b)]);
    }
    for u in spec.u_vertices.iter() {
        // u - leaf - center - {two leaves}
        let (leaf, center, l1, l2) = (fresh(), fresh(), fresh(), fresh());
        edges.extend([(u, leaf), (leaf, center), (center, l1), (center, l2)]);
    }
    for v in spec.v_vertices.iter() {
        // v - end - subdivision - center - {two leaves}
        let (end, sub, center, l1, l2) = (fresh(), fresh(), fresh(), fresh(), fresh());
        edges.extend([(v, end), (end, sub), (sub, center), (center, l1), (center, l2)]);
    }
    let n = fresh();
    Tree::from_edges(n, &edges)
}
