//! Reduction of a lower-bound tree down to `P_4`.
//!
//! Each round removes one pendant piece that some operation could have
//! added, keeping the smaller tree in the family and the operation's
//! precondition satisfied there. Candidates are tried in the order of the
//! inductive argument:
//!
//! 1. more leaves than supports: drop a leaf of a support with two or more
//!    leaves (`O1`);
//! 2. supports and leaves in bijection: drop a pendant `P_2` (`O2`), then a
//!    `P_4` hanging from its support (`O4`), then a pendant `P_4` hanging
//!    from its leaf (`O3`).
//!
//! Any other structurally possible reverse operation is a fallback; using
//! one is counted in [`Decomposition::fallback_steps`].

use alloc::vec;
use alloc::vec::Vec;

use crate::ops::{precondition_holds, OpKind, OperationStep};
use crate::solvers::{value, Invariant};
use crate::{canonical_code, diameter, structure, Result, Tree, Vertex};

use super::{in_family_t_beta, Certificate};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub certificate: Certificate,
    /// Rounds where no proof-order candidate applied.
    pub fallback_steps: usize,
}

/// A reverse operation: `removed` lists the vertices the forward operation
/// adds, in its labeling order.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Reduction {
    kind: OpKind,
    attach: Vertex,
    removed: Vec<Vertex>,
}

/// Returns a certificate when `t` attains `γ_t,coi = n - β`, `None`
/// otherwise.
pub fn decompose_to_p4(t: &Tree) -> Result<Option<Decomposition>> {
    if !in_family_t_beta(t)? {
        return Ok(None);
    }
    let mut cur = t.clone();
    // Original label of every current vertex.
    let mut original: Vec<Vertex> = t.vertices().collect();
    let mut reductions = Vec::new();
    let mut fallback_steps = 0;
    while cur.order() > 4 {
        let (guided, rest) = candidates(&cur);
        let mut chosen = None;
        for (is_fallback, cand) in guided
            .into_iter()
            .map(|c| (false, c))
            .chain(rest.into_iter().map(|c| (true, c)))
        {
            if let Some(smaller) = accept(&cur, &cand)? {
                chosen = Some((is_fallback, cand, smaller));
                break;
            }
        }
        let Some((is_fallback, cand, (smaller, map))) = chosen else {
            // A member with no admissible reduction: no certificate exists.
            return Ok(None);
        };
        fallback_steps += usize::from(is_fallback);
        reductions.push(Reduction {
            kind: cand.kind,
            attach: original[cand.attach],
            removed: cand.removed.iter().map(|&v| original[v]).collect(),
        });
        let mut next_original = vec![0; smaller.order()];
        for (old, new) in map.iter().enumerate() {
            if let Some(new) = new {
                next_original[*new] = original[old];
            }
        }
        original = next_original;
        cur = smaller;
    }
    if diameter(&cur) != 3 {
        return Ok(None);
    }
    Ok(Some(Decomposition {
        certificate: build_certificate(t, &cur, &original, &reductions),
        fallback_steps,
    }))
}

/// Checks a reverse operation: the smaller tree must keep diameter at least
/// 3, stay in the family, and satisfy the operation's precondition.
fn accept(t: &Tree, cand: &Reduction) -> Result<Option<(Tree, Vec<Option<Vertex>>)>> {
    let (smaller, map) = t.remove_vertices(&cand.removed)?;
    if diameter(&smaller) < 3 {
        return Ok(None);
    }
    let n = smaller.order();
    if value(&smaller, Invariant::Tcoi)? + value(&smaller, Invariant::Beta)? != n {
        return Ok(None);
    }
    let attach = map[cand.attach].expect("attachment vertex survives");
    if !precondition_holds(&smaller, cand.kind, attach)? {
        return Ok(None);
    }
    Ok(Some((smaller, map)))
}

/// Proof-order candidates, then every other structural reverse operation.
fn candidates(t: &Tree) -> (Vec<Reduction>, Vec<Reduction>) {
    let report = structure(t);
    let all = all_reductions(t);
    let leaf_count = |v: Vertex| t.neighbors(v).iter().filter(|&&w| t.is_leaf(w)).count();
    let guided: Vec<Reduction> = if report.supports.len() < report.leaves.len() {
        all.iter()
            .filter(|r| r.kind == OpKind::O1 && leaf_count(r.attach) >= 2)
            .cloned()
            .collect()
    } else {
        [OpKind::O2, OpKind::O4, OpKind::O3]
            .into_iter()
            .flat_map(|k| all.iter().filter(move |r| r.kind == k).cloned())
            .collect()
    };
    let rest = all.into_iter().filter(|r| !guided.contains(r)).collect();
    (guided, rest)
}

/// Every pendant piece whose removal undoes some operation, by kind then by
/// the leaf that anchors it.
fn all_reductions(t: &Tree) -> Vec<Reduction> {
    let other = |v: Vertex, not: Vertex| t.neighbors(v).iter().copied().find(|&w| w != not);
    let mut found = Vec::new();
    for h in t.vertices().filter(|&v| t.degree(v) == 1) {
        let s = t.neighbors(h)[0];
        found.push(Reduction {
            kind: OpKind::O1,
            attach: s,
            removed: vec![h],
        });
        if t.degree(s) == 2 {
            let v = other(s, h).expect("degree two");
            found.push(Reduction {
                kind: OpKind::O2,
                attach: v,
                removed: vec![s, h],
            });
            // h - s - v - u1 - attach, all inner vertices of degree two.
            if t.degree(v) == 2 {
                let u1 = other(v, s).expect("degree two");
                if t.degree(u1) == 2 {
                    let attach = other(u1, v).expect("degree two");
                    found.push(Reduction {
                        kind: OpKind::O3,
                        attach,
                        removed: vec![u1, v, s, h],
                    });
                }
            }
            // a - b - s - h with b of degree three, a a leaf, b joined to attach.
            if t.degree(v) == 3 {
                let b = v;
                for &a in t.neighbors(b).iter().filter(|&&a| a != s && t.degree(a) == 1) {
                    let attach = t
                        .neighbors(b)
                        .iter()
                        .copied()
                        .find(|&w| w != s && w != a)
                        .expect("degree three");
                    found.push(Reduction {
                        kind: OpKind::O4,
                        attach,
                        removed: vec![a, b, s, h],
                    });
                }
            }
        }
    }
    let rank = |k: OpKind| OpKind::ALL.iter().position(|&x| x == k).unwrap_or(0);
    found.sort_by_key(|r| (rank(r.kind), r.attach, r.removed.clone()));
    found.dedup();
    found
}

/// Relabels the recorded reductions into a forward certificate starting at
/// `0-1-2-3`.
fn build_certificate(t: &Tree, base: &Tree, original: &[Vertex], reductions: &[Reduction]) -> Certificate {
    let mut forward = vec![usize::MAX; t.order()];
    // Walk the remaining P_4 from its smaller-labeled end.
    let start = (0..4)
        .filter(|&v| base.degree(v) == 1)
        .min_by_key(|&v| original[v])
        .expect("P_4 has leaves");
    let mut prev = usize::MAX;
    let mut cur = start;
    for label in 0..4 {
        forward[original[cur]] = label;
        let next = base.neighbors(cur).iter().copied().find(|&w| w != prev);
        prev = cur;
        if let Some(next) = next {
            cur = next;
        }
    }
    let mut n = 4;
    let mut steps = Vec::with_capacity(reductions.len());
    for r in reductions.iter().rev() {
        let step = OperationStep::new(r.kind, forward[r.attach], n);
        for (i, &v) in r.removed.iter().enumerate() {
            forward[v] = n + i;
        }
        n += r.kind.added();
        steps.push(step);
    }
    Certificate {
        steps,
        final_code: canonical_code(t),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characterize::verify_certificate;
    use crate::generators::{double_star, path, star};
    use crate::is_isomorphic;
    use crate::Error;

    #[test]
    fn double_star_uses_o1_only() {
        let t = double_star(3, 3).unwrap();
        let d = decompose_to_p4(&t).unwrap().unwrap();
        assert_eq!(d.certificate.kinds(), [OpKind::O1; 4]);
        assert_eq!(d.fallback_steps, 0);
        assert_eq!(verify_certificate(&d.certificate, &t), Ok(()));
    }

    #[test]
    fn p4_has_empty_certificate() {
        let d = decompose_to_p4(&path(4).unwrap()).unwrap().unwrap();
        assert!(d.certificate.is_empty());
    }

    #[test]
    fn non_members() {
        assert_eq!(decompose_to_p4(&path(6).unwrap()), Ok(None));
        assert!(matches!(decompose_to_p4(&star(5).unwrap()), Err(Error::Undefined(_))));
    }

    #[test]
    fn replay_reproduces_labels_up_to_isomorphism() {
        // P_4 with two O3-style tails.
        let t = Tree::from_edges(
            12,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (1, 4),
                (4, 5),
                (5, 6),
                (6, 7),
                (2, 8),
                (8, 9),
                (9, 10),
                (10, 11),
            ],
        )
        .unwrap();
        let d = decompose_to_p4(&t).unwrap().unwrap();
        let trees = d.certificate.replay().unwrap();
        assert!(is_isomorphic(trees.last().unwrap(), &t));
        assert_eq!(d.certificate.len(), 2);
    }
}
