use std::collections::BTreeSet;

use treedom_core::census::{enumerate_trees, FREE_TREE_COUNTS};
use treedom_core::solvers::{in_some_optimal_set, Invariant, SmallGraph};
use treedom_core::{canonical_code, Tree};

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

#[test]
fn canonical_code_under_every_relabeling() {
    for n in 1..=7 {
        let perms = permutations(n);
        let mut codes = BTreeSet::new();
        for t in enumerate_trees(n).unwrap() {
            let code = canonical_code(&t);
            for p in &perms {
                assert_eq!(canonical_code(&t.relabel(p)), code);
            }
            codes.insert(code);
        }
        assert_eq!(codes.len(), FREE_TREE_COUNTS[n]);
    }
}

/// Decodes every Prüfer sequence and keeps one tree per canonical code.
fn labeled_classes(n: usize) -> BTreeSet<Vec<u8>> {
    if n <= 2 {
        let t = if n == 1 {
            Tree::singleton()
        } else {
            Tree::from_edges(2, &[(0, 1)]).unwrap()
        };
        return BTreeSet::from([canonical_code(&t).as_bytes().to_vec()]);
    }
    let len = n - 2;
    let mut seq = vec![0usize; len];
    let mut out = BTreeSet::new();
    loop {
        out.insert(canonical_code(&Tree::from_prufer(&seq).unwrap()).as_bytes().to_vec());
        let Some(i) = (0..len).rev().find(|&i| seq[i] + 1 < n) else {
            break;
        };
        seq[i] += 1;
        seq[i + 1..].fill(0);
    }
    out
}

#[test]
fn enumeration_matches_labeled_dedup() {
    for n in 1..=9 {
        let listed: Vec<_> = enumerate_trees(n)
            .unwrap()
            .iter()
            .map(|t| canonical_code(t).as_bytes().to_vec())
            .collect();
        let unique: BTreeSet<_> = listed.iter().cloned().collect();
        assert_eq!(unique.len(), listed.len(), "duplicate class at n = {n}");
        assert_eq!(unique, labeled_classes(n), "n = {n}");
    }
}

#[test]
fn enumeration_is_deterministic() {
    assert_eq!(enumerate_trees(10).unwrap(), enumerate_trees(10).unwrap());
}

#[test]
fn forced_vertices_match_brute_force() {
    for n in 1..=12 {
        for t in enumerate_trees(n).unwrap() {
            let g = SmallGraph::from_tree(&t).unwrap();
            for which in Invariant::ALL {
                let all = g.all_optimal(which);
                for v in t.vertices() {
                    let expected = all.iter().any(|m| m >> v & 1 == 1);
                    match in_some_optimal_set(&t, v, which) {
                        Ok(got) => assert_eq!(got, expected, "{t:?} {which:?} v = {v}"),
                        Err(_) => assert!(all.is_empty() && n < which.min_order()),
                    }
                }
            }
        }
    }
}
