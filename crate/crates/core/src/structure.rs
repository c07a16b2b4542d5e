//! Vertex classes (leaves, supports, semi-supports, isolated supports),
//! distances and diameter.

use alloc::vec::Vec;

use crate::{Result, Tree, Vertex, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct StructureReport {
    pub leaves: VertexSet,
    pub supports: VertexSet,
    /// Vertices that are neither leaves nor supports but have a support
    /// neighbor.
    pub semi_supports: VertexSet,
    /// Supports with no support neighbor.
    pub isolated_supports: VertexSet,
    pub min_degree: usize,
    pub max_degree: usize,
    /// Longest path length, in edges.
    pub diameter: usize,
}

pub fn structure(t: &Tree) -> StructureReport {
    let n = t.order();
    let is_leaf: Vec<bool> = t.vertices().map(|v| t.is_leaf(v)).collect();
    let is_support: Vec<bool> = t
        .vertices()
        .map(|v| !is_leaf[v] && t.neighbors(v).iter().any(|&w| is_leaf[w]))
        .collect();
    let leaves = VertexSet::from_mask(&is_leaf);
    let supports = VertexSet::from_mask(&is_support);
    let semi_supports = (0..n)
        .filter(|&v| !is_leaf[v] && !is_support[v])
        .filter(|&v| t.neighbors(v).iter().any(|&w| is_support[w]))
        .collect();
    let isolated_supports = supports
        .iter()
        .filter(|&v| t.neighbors(v).iter().all(|&w| !is_support[w]))
        .collect();
    StructureReport {
        leaves,
        supports,
        semi_supports,
        isolated_supports,
        min_degree: t.vertices().map(|v| t.degree(v)).min().unwrap_or(0),
        max_degree: t.vertices().map(|v| t.degree(v)).max().unwrap_or(0),
        diameter: diameter(t),
    }
}

pub fn distance(t: &Tree, u: Vertex, v: Vertex) -> Result<usize> {
    t.check_vertex(u)?;
    t.check_vertex(v)?;
    Ok(t.distances_from(u)[v])
}

/// Two breadth-first sweeps: the farthest vertex from anywhere is an end of
/// a longest path.
pub fn diameter(t: &Tree) -> usize {
    let (far, _) = farthest(t, 0);
    farthest(t, far).1
}

pub(crate) fn farthest(t: &Tree, src: Vertex) -> (Vertex, usize) {
    let dist = t.distances_from(src);
    let mut best = (src, 0);
    for (v, &d) in dist.iter().enumerate() {
        if d > best.1 {
            best = (v, d);
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{path, star};

    #[test]
    fn path6_classes() {
        let r = structure(&path(6).unwrap());
        assert_eq!(r.leaves, VertexSet::from([0, 5]));
        assert_eq!(r.supports, VertexSet::from([1, 4]));
        assert_eq!(r.semi_supports, VertexSet::from([2, 3]));
        assert_eq!(r.isolated_supports, VertexSet::from([1, 4]));
        assert_eq!(r.diameter, 5);
        assert_eq!((r.min_degree, r.max_degree), (1, 2));
    }

    #[test]
    fn path4_supports_not_isolated() {
        let r = structure(&path(4).unwrap());
        assert_eq!(r.leaves, VertexSet::from([0, 3]));
        assert_eq!(r.supports, VertexSet::from([1, 2]));
        assert!(r.semi_supports.is_empty());
        assert!(r.isolated_supports.is_empty());
        assert_eq!(r.diameter, 3);
    }

    #[test]
    fn star5_classes() {
        let r = structure(&star(5).unwrap());
        assert_eq!(r.leaves, VertexSet::from([1, 2, 3, 4]));
        assert_eq!(r.supports, VertexSet::from([0]));
        assert!(r.semi_supports.is_empty());
        assert_eq!(r.isolated_supports, VertexSet::from([0]));
        assert_eq!(r.diameter, 2);
    }

    #[test]
    fn singleton_is_a_leaf() {
        let r = structure(&Tree::singleton());
        assert_eq!(r.leaves, VertexSet::from([0]));
        assert!(r.supports.is_empty());
        assert_eq!(r.diameter, 0);
    }

    #[test]
    fn distances() {
        let p4 = path(4).unwrap();
        assert_eq!(distance(&p4, 0, 3), Ok(3));
        assert_eq!(distance(&p4, 2, 2), Ok(0));
        assert!(distance(&p4, 0, 4).is_err());
    }
}
