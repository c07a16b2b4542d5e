//! Non-isomorphic tree enumeration, per-tree classification and the
//! theorem checks run by the census.

use alloc::vec;
use alloc::vec::Vec;

use crate::canon::rooted_parens;
use crate::characterize::{
    decompose_to_p4, in_family_t_beta, in_family_t_l, private_support_tl_check, structural_tl_check, verify_certificate,
};
use crate::solvers::{
    brute_force_capped, is_minimal_by_removal, is_minimal_tcoi_set, solve, value, Combinations, Invariant, SmallGraph,
};
use crate::{canonical_code, centers, structure, CanonicalCode, Error, Result, Tree, VertexSet};

pub const DEFAULT_MAX_ORDER: usize = 18;

/// Number of non-isomorphic trees of order 0..=18.
pub const FREE_TREE_COUNTS: [usize; 19] = [
    1, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320, 48629, 123867,
];

/// One representative per isomorphism class of trees on `n` vertices.
///
/// Rooted trees are generated as canonical level sequences (each rooted
/// unlabeled tree exactly once); a rooted tree is kept when it is rooted at
/// the center its canonical code picks, which happens for exactly one rooted
/// form of each free tree.
pub fn enumerate_trees(n: usize) -> Result<Vec<Tree>> {
    enumerate_trees_capped(n, DEFAULT_MAX_ORDER)
}

pub fn enumerate_trees_capped(n: usize, cap: usize) -> Result<Vec<Tree>> {
    if n > cap {
        return Err(Error::TooLarge { n, cap });
    }
    if n == 0 {
        return Err(Error::BadParameter("order must be at least 1".into()));
    }
    let mut out = Vec::new();
    let mut levels: Vec<usize> = (0..n).collect();
    loop {
        let t = from_levels(&levels);
        let code = canonical_code(&t);
        if centers(&t).contains(&0) && pack_matches(&rooted_parens(&t, 0), &code) {
            out.push(t);
        }
        if !next_level_sequence(&mut levels) {
            break;
        }
    }
    Ok(out)
}

fn pack_matches(parens: &[bool], code: &CanonicalCode) -> bool {
    let bytes = code.as_bytes();
    parens.len().div_ceil(8) == bytes.len()
        && parens
            .iter()
            .enumerate()
            .all(|(i, &b)| (bytes[i / 8] & (0x80 >> (i % 8)) != 0) == b)
}

/// Builds the tree of a level sequence: vertex `i` hangs from the latest
/// earlier vertex one level up.
fn from_levels(levels: &[usize]) -> Tree {
    let mut last_at = vec![0usize; levels.len() + 1];
    let mut edges = Vec::with_capacity(levels.len().saturating_sub(1));
    for (i, &l) in levels.iter().enumerate() {
        if l > 0 {
            edges.push((last_at[l - 1], i));
        }
        last_at[l] = i;
    }
    Tree::from_edges(levels.len(), &edges).expect("level sequences describe trees")
}

/// Steps to the next canonical level sequence in decreasing order; `false`
/// after the star.
fn next_level_sequence(levels: &mut [usize]) -> bool {
    let Some(p) = levels.iter().rposition(|&l| l > 1) else {
        return false;
    };
    let q = levels[..p]
        .iter()
        .rposition(|&l| l == levels[p] - 1)
        .expect("a parent level precedes");
    let period = p - q;
    for i in p..levels.len() {
        levels[i] = levels[i - period];
    }
    true
}

/// Census row. Family fields are `None` for diameter below 3.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CensusRecord {
    pub canon: alloc::string::String,
    pub n: usize,
    pub diameter: usize,
    pub num_leaves: usize,
    pub beta: usize,
    pub gamma_t: Option<usize>,
    pub tcoi: Option<usize>,
    pub in_t_beta: Option<bool>,
    pub in_t_l: Option<bool>,
    pub structural_tl: Option<bool>,
    pub certificate_found: Option<bool>,
}

pub fn classify(t: &Tree) -> CensusRecord {
    classify_with(t).0
}

fn classify_with(t: &Tree) -> (CensusRecord, Option<crate::characterize::Decomposition>) {
    let report = structure(t);
    let families = report.diameter >= 3;
    let decomposition = if families {
        decompose_to_p4(t).expect("diameter checked")
    } else {
        None
    };
    let record = CensusRecord {
        canon: canonical_code(t).to_hex(),
        n: t.order(),
        diameter: report.diameter,
        num_leaves: report.leaves.len(),
        beta: value(t, Invariant::Beta).expect("always defined"),
        gamma_t: value(t, Invariant::GammaT).ok(),
        tcoi: value(t, Invariant::Tcoi).ok(),
        in_t_beta: families.then(|| in_family_t_beta(t).expect("diameter checked")),
        in_t_l: families.then(|| in_family_t_l(t).expect("diameter checked")),
        structural_tl: families.then(|| structural_tl_check(t).expect("diameter checked")),
        certificate_found: families.then_some(decomposition.is_some()),
    };
    (record, decomposition)
}

/// Orders up to which the expensive exhaustive checks run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckCaps {
    /// Brute-force oracle comparison.
    pub oracle: usize,
    /// Distance-3 property of maximum independent sets.
    pub dist_b: usize,
    /// Local vs removal minimality over all total co-independent dominating sets.
    pub minimality: usize,
}

impl Default for CheckCaps {
    fn default() -> Self {
        CheckCaps {
            oracle: 14,
            dist_b: 12,
            minimality: 10,
        }
    }
}

/// The theorems and properties checked per tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Check {
    /// `n - β <= γ_t,coi <= n - |L|`.
    Bounds,
    /// Certificate found iff `γ_t,coi = n - β`, and every certificate replays.
    LowerCharacterization,
    /// Structural test iff `γ_t,coi = n - |L|`.
    UpperCharacterization,
    /// Private-support test iff `γ_t,coi = n - |L|`.
    PrivateSupport,
    /// In the upper family, semi-supports hang off isolated supports (or,
    /// with no isolated support, only leaves and supports exist).
    UpperNecessity,
    /// A tree lies in both families iff its leaves form a maximum
    /// independent set.
    FamiliesCoincide,
    /// Every member of a maximum independent set has another member within
    /// distance 3.
    DistB,
    /// Local minimality criterion agrees with removal minimality.
    Minimality,
    /// Tree programs agree with brute force, witnesses included.
    Oracle,
}

impl Check {
    pub const ALL: [Check; 9] = [
        Check::Bounds,
        Check::LowerCharacterization,
        Check::UpperCharacterization,
        Check::PrivateSupport,
        Check::UpperNecessity,
        Check::FamiliesCoincide,
        Check::DistB,
        Check::Minimality,
        Check::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Bounds => "bounds",
            Check::LowerCharacterization => "lower_characterization",
            Check::UpperCharacterization => "upper_characterization",
            Check::PrivateSupport => "private_support",
            Check::UpperNecessity => "upper_necessity",
            Check::FamiliesCoincide => "families_coincide",
            Check::DistB => "dist_b",
            Check::Minimality => "minimality",
            Check::Oracle => "oracle",
        }
    }
}

/// Classification plus the list of failed checks for one tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeVerdict {
    pub record: CensusRecord,
    pub failures: Vec<Check>,
    /// Checks that applied to this tree, in [`Check::ALL`] order.
    pub checked: Vec<Check>,
    /// Certificate rounds that needed a non-proof-order reduction.
    pub fallback_steps: usize,
}

pub fn check_tree(t: &Tree, caps: CheckCaps) -> TreeVerdict {
    let (record, decomposition) = classify_with(t);
    let mut failures = Vec::new();
    let mut checked = Vec::new();
    let n = t.order();
    if record.diameter >= 3 {
        checked.extend([
            Check::Bounds,
            Check::LowerCharacterization,
            Check::UpperCharacterization,
            Check::PrivateSupport,
            Check::UpperNecessity,
            Check::FamiliesCoincide,
        ]);
        let tcoi = record.tcoi.expect("defined for diameter >= 3");
        if !(n - record.beta <= tcoi && tcoi <= n - record.num_leaves) {
            failures.push(Check::Bounds);
        }
        let replay_ok = decomposition
            .as_ref()
            .is_none_or(|d| verify_certificate(&d.certificate, t).is_ok() && replay_stays_in_family(d));
        if record.in_t_beta != record.certificate_found || !replay_ok {
            failures.push(Check::LowerCharacterization);
        }
        if record.in_t_l != record.structural_tl {
            failures.push(Check::UpperCharacterization);
        }
        if record.in_t_l != private_support_tl_check(t).ok() {
            failures.push(Check::PrivateSupport);
        }
        if record.in_t_l == Some(true) && !upper_necessity_holds(t) {
            failures.push(Check::UpperNecessity);
        }
        // Leaves are always independent once the diameter is at least 3.
        let leaves_maximum = record.num_leaves == record.beta;
        let in_both = record.in_t_l == Some(true) && record.in_t_beta == Some(true);
        if in_both != leaves_maximum {
            failures.push(Check::FamiliesCoincide);
        }
    }
    if n >= 3 && n <= caps.dist_b {
        checked.push(Check::DistB);
        if !dist_b_holds(t) {
            failures.push(Check::DistB);
        }
    }
    if n >= 3 && n <= caps.minimality {
        checked.push(Check::Minimality);
        if !minimality_agrees(t) {
            failures.push(Check::Minimality);
        }
    }
    if n <= caps.oracle {
        checked.push(Check::Oracle);
        if !oracle_agrees(t) {
            failures.push(Check::Oracle);
        }
    }
    TreeVerdict {
        record,
        failures,
        checked,
        fallback_steps: decomposition.map_or(0, |d| d.fallback_steps),
    }
}

fn replay_stays_in_family(d: &crate::characterize::Decomposition) -> bool {
    d.certificate
        .replay()
        .map(|trees| trees.iter().all(|x| in_family_t_beta(x) == Ok(true)))
        .unwrap_or(false)
}

fn upper_necessity_holds(t: &Tree) -> bool {
    let r = structure(t);
    if r.isolated_supports.is_empty() {
        t.vertices().all(|v| r.leaves.contains(v) || r.supports.contains(v))
    } else {
        r.semi_supports
            .iter()
            .all(|v| t.neighbors(v).iter().any(|&w| r.isolated_supports.contains(w)))
    }
}

/// Every member of every maximum independent set has another member at
/// distance at most 3.
pub fn dist_b_holds(t: &Tree) -> bool {
    let Ok(g) = SmallGraph::from_tree(t) else {
        return false;
    };
    let dist: Vec<Vec<usize>> = t.vertices().map(|v| t.distances_from(v)).collect();
    g.all_optimal(Invariant::Beta).into_iter().all(|set| {
        let members = VertexSet::from_bits(set, t.order());
        let ok = members
            .iter()
            .all(|v| members.iter().any(|u| u != v && dist[v][u] <= 3));
        ok
    })
}

/// The local criterion and removal minimality agree on every total
/// co-independent dominating set.
pub fn minimality_agrees(t: &Tree) -> bool {
    let Ok(g) = SmallGraph::from_tree(t) else {
        return false;
    };
    let n = t.order();
    (0..=n)
        .flat_map(|k| Combinations::new(n, k))
        .filter(|&m| g.is_tcoi(m))
        .all(|m| {
            let set = VertexSet::from_bits(m, n);
            is_minimal_tcoi_set(t, &set) == is_minimal_by_removal(t, &set)
        })
}

/// Tree programs match brute force in value and in the (lexicographically
/// smallest) witness.
pub fn oracle_agrees(t: &Tree) -> bool {
    Invariant::ALL.iter().all(|&which| {
        let dp = solve(t, which);
        let brute = brute_force_capped(t, which, 64);
        match (dp, brute) {
            (Ok(a), Ok(b)) => a == b,
            (Err(Error::Undefined(_)), Err(Error::Undefined(_))) => true,
            _ => false,
        }
    })
}
