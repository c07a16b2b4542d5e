//! Value-only tree dynamic programs with per-vertex membership constraints.
//!
//! Every program roots the tree at vertex 0 and folds children into their
//! parent in reverse BFS order. Constraints let callers force a vertex into
//! or out of the set, which is all the witness reconstruction and the
//! forced-vertex queries need.

use alloc::vec;
use alloc::vec::Vec;

use crate::tree::Rooted;
use crate::Tree;

use super::Invariant;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Constraint {
    Free,
    In,
    Out,
}

impl Constraint {
    #[inline]
    fn allows(self, inside: bool) -> bool {
        match self {
            Constraint::Free => true,
            Constraint::In => inside,
            Constraint::Out => !inside,
        }
    }
}

const INF: u32 = u32::MAX / 4;

#[inline]
fn add(a: u32, b: u32) -> u32 {
    (a + b).min(INF)
}

/// Optimum of `which` subject to `constraints`, or `None` if no feasible set
/// exists. Callers check the order preconditions of each invariant.
pub(crate) fn optimum(t: &Tree, rooted: &Rooted, which: Invariant, constraints: &[Constraint]) -> Option<usize> {
    match which {
        Invariant::Beta => beta(t, rooted, constraints),
        Invariant::GammaT => gamma_t(t, rooted, constraints),
        Invariant::Tcoi => tcoi(t, rooted, constraints),
    }
}

fn children<'a>(t: &'a Tree, rooted: &'a Rooted, v: usize) -> impl Iterator<Item = usize> + 'a {
    let parent = rooted.parent[v];
    t.neighbors(v).iter().copied().filter(move |&c| Some(c) != parent)
}

/// Maximum independent set. States: out, in.
fn beta(t: &Tree, rooted: &Rooted, constraints: &[Constraint]) -> Option<usize> {
    const NEG: i64 = -(1 << 40);
    let mut dp = vec![[0i64; 2]; t.order()];
    for &v in rooted.order.iter().rev() {
        let mut out = 0i64;
        let mut inside = 1i64;
        for c in children(t, rooted, v) {
            out = (out + dp[c][0].max(dp[c][1])).max(NEG);
            inside = (inside + dp[c][0]).max(NEG);
        }
        if !constraints[v].allows(false) {
            out = NEG;
        }
        if !constraints[v].allows(true) {
            inside = NEG;
        }
        dp[v] = [out.max(NEG), inside.max(NEG)];
    }
    let root = rooted.order[0];
    let best = dp[root][0].max(dp[root][1]);
    (best >= 0).then_some(best as usize)
}

/// Minimum total dominating set. State `[m][d]`: `m` = vertex in the set,
/// `d` = some child is in the set. A state with `d = 0` needs its parent in
/// the set.
fn gamma_t(t: &Tree, rooted: &Rooted, constraints: &[Constraint]) -> Option<usize> {
    let mut dp = vec![[[INF; 2]; 2]; t.order()];
    for &v in rooted.order.iter().rev() {
        let mut acc = [[INF; 2]; 2];
        for (m, row) in acc.iter_mut().enumerate() {
            if constraints[v].allows(m == 1) {
                row[0] = m as u32;
            }
        }
        for c in children(t, rooted, v) {
            let s = &dp[c];
            let mut next = [[INF; 2]; 2];
            for m in 0..2 {
                for d in 0..2 {
                    if acc[m][d] >= INF {
                        continue;
                    }
                    for cm in 0..2 {
                        // The child is dominated by its own children, or by v.
                        let child = if m == 1 { s[cm][0].min(s[cm][1]) } else { s[cm][1] };
                        let nd = d | cm;
                        next[m][nd] = next[m][nd].min(add(acc[m][d], child));
                    }
                }
            }
            acc = next;
        }
        dp[v] = acc;
    }
    let root = rooted.order[0];
    let best = dp[root][0][1].min(dp[root][1][1]);
    (best < INF).then_some(best as usize)
}

/// Minimum total dominating vertex cover with a non-empty complement.
/// State `[m][d][o]`: `m` = in the set, `d` = some child in the set,
/// `o` = the subtree contains a vertex outside the set.
fn tcoi(t: &Tree, rooted: &Rooted, constraints: &[Constraint]) -> Option<usize> {
    let mut dp = vec![[[[INF; 2]; 2]; 2]; t.order()];
    for &v in rooted.order.iter().rev() {
        let mut acc = [[[INF; 2]; 2]; 2];
        for m in 0..2 {
            if constraints[v].allows(m == 1) {
                acc[m][0][1 - m] = m as u32;
            }
        }
        for c in children(t, rooted, v) {
            let s = &dp[c];
            // Best child cost for each (child in set, child has outside vertex),
            // given the parent's membership.
            let mut with_parent_in = [[INF; 2]; 2];
            let mut with_parent_out = [[INF; 2]; 2];
            for cm in 0..2 {
                for co in 0..2 {
                    with_parent_in[cm][co] = s[cm][0][co].min(s[cm][1][co]);
                }
            }
            // An outside parent forces the child in (cover) and the child
            // must already be dominated from below.
            for co in 0..2 {
                with_parent_out[1][co] = s[1][1][co];
            }
            let mut next = [[[INF; 2]; 2]; 2];
            for m in 0..2 {
                let table = if m == 1 { &with_parent_in } else { &with_parent_out };
                for d in 0..2 {
                    for o in 0..2 {
                        let base = acc[m][d][o];
                        if base >= INF {
                            continue;
                        }
                        for cm in 0..2 {
                            for co in 0..2 {
                                let cost = table[cm][co];
                                if cost >= INF {
                                    continue;
                                }
                                let slot = &mut next[m][d | cm][o | co];
                                *slot = (*slot).min(add(base, cost));
                            }
                        }
                    }
                }
            }
            acc = next;
        }
        dp[v] = acc;
    }
    let root = rooted.order[0];
    let best = dp[root][0][1][1].min(dp[root][1][1][1]);
    (best < INF).then_some(best as usize)
}

/// Greedy lexicographically smallest optimal set: visit vertices in index
/// order and keep each one in the set whenever the optimum survives.
pub(crate) fn lex_min_witness(t: &Tree, rooted: &Rooted, which: Invariant, target: usize) -> Vec<bool> {
    let n = t.order();
    let mut constraints = vec![Constraint::Free; n];
    for v in 0..n {
        constraints[v] = Constraint::In;
        if optimum(t, rooted, which, &constraints) != Some(target) {
            constraints[v] = Constraint::Out;
            debug_assert_eq!(optimum(t, rooted, which, &constraints), Some(target));
        }
    }
    constraints.iter().map(|&c| c == Constraint::In).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{path, star};

    fn opt(t: &Tree, which: Invariant) -> Option<usize> {
        let rooted = t.rooted(0);
        optimum(t, &rooted, which, &vec![Constraint::Free; t.order()])
    }

    #[test]
    fn small_values() {
        let p4 = path(4).unwrap();
        assert_eq!(opt(&p4, Invariant::Beta), Some(2));
        assert_eq!(opt(&p4, Invariant::GammaT), Some(2));
        assert_eq!(opt(&p4, Invariant::Tcoi), Some(2));
        assert_eq!(opt(&path(5).unwrap(), Invariant::Tcoi), Some(3));
        assert_eq!(opt(&path(6).unwrap(), Invariant::Tcoi), Some(4));
        assert_eq!(opt(&path(6).unwrap(), Invariant::GammaT), Some(4));
        assert_eq!(opt(&star(5).unwrap(), Invariant::Beta), Some(4));
        assert_eq!(opt(&star(5).unwrap(), Invariant::GammaT), Some(2));
    }

    #[test]
    fn infeasible_cases() {
        assert_eq!(opt(&Tree::singleton(), Invariant::GammaT), None);
        assert_eq!(opt(&path(2).unwrap(), Invariant::Tcoi), None);
        assert_eq!(opt(&path(2).unwrap(), Invariant::GammaT), Some(2));
    }

    #[test]
    fn forced_leaf_costs_more() {
        let p4 = path(4).unwrap();
        let rooted = p4.rooted(0);
        let mut c = vec![Constraint::Free; 4];
        c[0] = Constraint::In;
        assert_eq!(optimum(&p4, &rooted, Invariant::Tcoi, &c), Some(3));
        c[0] = Constraint::Free;
        c[1] = Constraint::Out;
        assert_eq!(optimum(&p4, &rooted, Invariant::Tcoi, &c), None);
    }
}
