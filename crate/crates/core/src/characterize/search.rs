use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::generators::path;
use crate::ops::{attach_unchecked, precondition_holds, OpKind};
use crate::{canonical_code, diameter, CanonicalCode, Error, Result, Tree};

pub const DEFAULT_MAX_LEN: usize = 3;

/// All operation-kind sequences of length at most `max_len` that build a
/// tree isomorphic to `t` from `P_4`, over every admissible attachment
/// vertex at every step.
pub fn exhaustive_sequence_search(t: &Tree, max_len: usize) -> Result<BTreeSet<Vec<OpKind>>> {
    if diameter(t) < 3 {
        return Err(Error::Undefined(
            "families are only defined for trees of diameter at least 3",
        ));
    }
    let target = canonical_code(t);
    let goal = t.order();
    let mut found = BTreeSet::new();
    // Isomorphism class -> (representative, sequences reaching it).
    let mut level: BTreeMap<CanonicalCode, (Tree, BTreeSet<Vec<OpKind>>)> = BTreeMap::new();
    let p4 = path(4)?;
    level.insert(canonical_code(&p4), (p4, BTreeSet::from([Vec::new()])));
    for depth in 0..=max_len {
        if let Some((_, seqs)) = level.get(&target) {
            found.extend(seqs.iter().cloned());
        }
        if depth == max_len {
            break;
        }
        let remaining = max_len - depth;
        let mut next: BTreeMap<CanonicalCode, (Tree, BTreeSet<Vec<OpKind>>)> = BTreeMap::new();
        for (tree, seqs) in level.values() {
            for kind in OpKind::ALL {
                let order = tree.order() + kind.added();
                // Each later step adds at most four vertices.
                if order > goal || order + 4 * (remaining - 1) < goal {
                    continue;
                }
                let mut seen = BTreeSet::new();
                for v in tree.vertices() {
                    if !precondition_holds(tree, kind, v)? {
                        continue;
                    }
                    let grown = attach_unchecked(tree, kind, v)?;
                    let code = canonical_code(&grown);
                    if !seen.insert(code.clone()) {
                        continue;
                    }
                    let entry = next.entry(code).or_insert_with(|| (grown, BTreeSet::new()));
                    entry.1.extend(seqs.iter().map(|s| {
                        let mut s = s.clone();
                        s.push(kind);
                        s
                    }));
                }
            }
        }
        level = next;
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use OpKind::*;

    #[test]
    fn p6_is_unreachable() {
        assert!(exhaustive_sequence_search(&path(6).unwrap(), 3).unwrap().is_empty());
    }

    #[test]
    fn p4_is_the_empty_sequence() {
        let found = exhaustive_sequence_search(&path(4).unwrap(), 2).unwrap();
        assert_eq!(found, BTreeSet::from([Vec::new()]));
    }

    #[test]
    fn one_step_spider() {
        let t = Tree::from_edges(5, &[(0, 1), (1, 2), (2, 3), (1, 4)]).unwrap();
        assert_eq!(
            exhaustive_sequence_search(&t, 2).unwrap(),
            BTreeSet::from([alloc::vec![O1]])
        );
    }
}
