//! Exact `β`, `γ_t` and `γ_t,coi` on trees, their brute-force oracle, and
//! set predicates.

mod brute;
mod dp;
mod sets;

use alloc::vec;

pub use brute::{brute_force, brute_force_capped, Combinations, SmallGraph, DEFAULT_CAP};
pub use dp::Constraint;
pub use sets::{is_independent, is_minimal_by_removal, is_minimal_tcoi_set, is_tcoi_set, is_total_dominating};

use crate::{Error, Result, Tree, Vertex, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Invariant {
    /// Independence number (maximum).
    Beta,
    /// Total domination number (minimum).
    GammaT,
    /// Total co-independent domination number (minimum).
    Tcoi,
}

impl Invariant {
    pub const ALL: [Invariant; 3] = [Invariant::Beta, Invariant::GammaT, Invariant::Tcoi];

    pub fn name(self) -> &'static str {
        match self {
            Invariant::Beta => "beta",
            Invariant::GammaT => "gamma_t",
            Invariant::Tcoi => "tcoi",
        }
    }

    /// Smallest order on which the invariant is defined.
    pub fn min_order(self) -> usize {
        match self {
            Invariant::Beta => 1,
            Invariant::GammaT => 2,
            Invariant::Tcoi => 3,
        }
    }

    pub(crate) fn undefined_reason(self) -> &'static str {
        match self {
            Invariant::Beta => "independence number of the empty graph",
            Invariant::GammaT => "total domination needs a tree with at least 2 vertices",
            Invariant::Tcoi => "total co-independent domination needs a tree with at least 3 vertices",
        }
    }

    pub(crate) fn check_defined(self, n: usize) -> Result<()> {
        if n < self.min_order() {
            Err(Error::Undefined(self.undefined_reason()))
        } else {
            Ok(())
        }
    }
}

/// Solves `which` on `t` and returns the optimum with its lexicographically
/// smallest optimal set.
///
/// The witness is built greedily with constrained re-solves, so this costs
/// `O(n^2)`.
pub fn solve(t: &Tree, which: Invariant) -> Result<(usize, VertexSet)> {
    which.check_defined(t.order())?;
    let rooted = t.rooted(0);
    let free = vec![Constraint::Free; t.order()];
    let value = dp::optimum(t, &rooted, which, &free).ok_or(Error::Undefined(which.undefined_reason()))?;
    let mask = dp::lex_min_witness(t, &rooted, which, value);
    Ok((value, VertexSet::from_mask(&mask)))
}

/// Optimum only, in linear time.
pub fn value(t: &Tree, which: Invariant) -> Result<usize> {
    constrained_value(t, which, &vec![Constraint::Free; t.order()])?.ok_or(Error::Undefined(which.undefined_reason()))
}

/// Optimum under per-vertex constraints; `Ok(None)` when nothing feasible.
pub fn constrained_value(t: &Tree, which: Invariant, constraints: &[Constraint]) -> Result<Option<usize>> {
    which.check_defined(t.order())?;
    if constraints.len() != t.order() {
        return Err(Error::BadParameter(alloc::format!(
            "{} constraints for a tree of order {}",
            constraints.len(),
            t.order()
        )));
    }
    Ok(dp::optimum(t, &t.rooted(0), which, constraints))
}

pub fn independence_number(t: &Tree) -> (usize, VertexSet) {
    solve(t, Invariant::Beta).expect("independence number is defined on every tree")
}

pub fn total_domination_number(t: &Tree) -> Result<(usize, VertexSet)> {
    solve(t, Invariant::GammaT)
}

pub fn tcoi_number(t: &Tree) -> Result<(usize, VertexSet)> {
    solve(t, Invariant::Tcoi)
}

/// Whether some optimal set of `which` contains `v`.
pub fn in_some_optimal_set(t: &Tree, v: Vertex, which: Invariant) -> Result<bool> {
    t.check_vertex(v)?;
    let best = value(t, which)?;
    let mut constraints = vec![Constraint::Free; t.order()];
    constraints[v] = Constraint::In;
    Ok(constrained_value(t, which, &constraints)? == Some(best))
}

/// All three invariants of a tree with their witnesses. Undefined values
/// (`γ_t` for one vertex, `γ_t,coi` below three) are `None`.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct InvariantReport {
    pub n: usize,
    pub beta: usize,
    pub gamma_t: Option<usize>,
    pub tcoi: Option<usize>,
    pub beta_witness: VertexSet,
    pub gamma_t_witness: Option<VertexSet>,
    pub tcoi_witness: Option<VertexSet>,
}

impl InvariantReport {
    pub fn compute(t: &Tree) -> Self {
        let (beta, beta_witness) = independence_number(t);
        let gamma = total_domination_number(t).ok();
        let tcoi = tcoi_number(t).ok();
        InvariantReport {
            n: t.order(),
            beta,
            gamma_t: gamma.as_ref().map(|g| g.0),
            tcoi: tcoi.as_ref().map(|g| g.0),
            beta_witness,
            gamma_t_witness: gamma.map(|g| g.1),
            tcoi_witness: tcoi.map(|g| g.1),
        }
    }

    /// Checks every witness against its defining predicate and size.
    pub fn witnesses_valid(&self, t: &Tree) -> bool {
        let beta_ok = self.beta_witness.len() == self.beta && is_independent(t, &self.beta_witness);
        let gamma_ok = match (&self.gamma_t, &self.gamma_t_witness) {
            (Some(g), Some(w)) => w.len() == *g && is_total_dominating(t, w),
            (None, None) => t.order() < 2,
            _ => false,
        };
        let tcoi_ok = match (&self.tcoi, &self.tcoi_witness) {
            (Some(g), Some(w)) => w.len() == *g && is_tcoi_set(t, w),
            (None, None) => t.order() < 3,
            _ => false,
        };
        beta_ok && gamma_ok && tcoi_ok
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{family_f, path, star, FamilyFSpec};

    #[test]
    fn independence_examples() {
        assert_eq!(independence_number(&path(4).unwrap()).0, 2);
        assert_eq!(independence_number(&star(5).unwrap()).0, 4);
        let spec = FamilyFSpec::new(path(2).unwrap(), [0].into(), [1].into()).unwrap();
        assert_eq!(independence_number(&family_f(&spec).unwrap()).0, 10);
    }

    #[test]
    fn total_domination_examples() {
        assert_eq!(total_domination_number(&path(4).unwrap()).unwrap().0, 2);
        assert_eq!(total_domination_number(&star(5).unwrap()).unwrap().0, 2);
        assert_eq!(total_domination_number(&path(6).unwrap()).unwrap().0, 4);
        assert!(matches!(
            total_domination_number(&Tree::singleton()),
            Err(Error::Undefined(_))
        ));
    }

    #[test]
    fn tcoi_examples() {
        for n in 3..9 {
            assert_eq!(tcoi_number(&star(n).unwrap()).unwrap().0, 2, "star({n})");
        }
        assert_eq!(tcoi_number(&path(4).unwrap()).unwrap(), (2, VertexSet::from([1, 2])));
        assert_eq!(tcoi_number(&path(5).unwrap()).unwrap().0, 3);
        assert_eq!(tcoi_number(&path(6).unwrap()).unwrap().0, 4);
        let spec = FamilyFSpec::new(path(2).unwrap(), [0].into(), [1].into()).unwrap();
        assert_eq!(tcoi_number(&family_f(&spec).unwrap()).unwrap().0, 6);
        assert!(matches!(tcoi_number(&path(2).unwrap()), Err(Error::Undefined(_))));
        assert!(matches!(tcoi_number(&Tree::singleton()), Err(Error::Undefined(_))));
    }

    #[test]
    fn forced_membership() {
        let p4 = path(4).unwrap();
        assert_eq!(in_some_optimal_set(&p4, 1, Invariant::Tcoi), Ok(true));
        assert_eq!(in_some_optimal_set(&p4, 0, Invariant::Tcoi), Ok(false));
        assert_eq!(in_some_optimal_set(&p4, 0, Invariant::Beta), Ok(true));
        assert!(matches!(
            in_some_optimal_set(&p4, 9, Invariant::Beta),
            Err(Error::VertexOutOfRange { vertex: 9, n: 4 })
        ));
        assert!(matches!(
            in_some_optimal_set(&path(2).unwrap(), 0, Invariant::Tcoi),
            Err(Error::Undefined(_))
        ));
    }

    #[test]
    fn report_for_p2() {
        let r = InvariantReport::compute(&path(2).unwrap());
        assert_eq!(r.gamma_t, Some(2));
        assert_eq!(r.tcoi, None);
        assert!(r.witnesses_valid(&path(2).unwrap()));
    }

    #[test]
    fn witnesses_match_bruteforce_exactly() {
        for t in [
            path(7).unwrap(),
            star(6).unwrap(),
            crate::generators::q_tree(3).unwrap(),
        ] {
            for which in Invariant::ALL {
                assert_eq!(solve(&t, which).unwrap(), brute_force(&t, which).unwrap());
            }
        }
    }
}
