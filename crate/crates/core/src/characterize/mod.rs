//! Membership in the lower-bound family (`γ_t,coi = n - β`) and the
//! upper-bound family (`γ_t,coi = n - |L|`), the structural test for the
//! latter, and operation certificates for the former.

mod certificate;
mod decompose;
mod search;

pub use certificate::{verify_certificate, Certificate};
pub use decompose::{decompose_to_p4, Decomposition};
pub use search::{exhaustive_sequence_search, DEFAULT_MAX_LEN};

pub use crate::ops::{OpKind, OperationStep};

use crate::solvers::{value, Invariant};
use crate::{structure, Error, Result, StructureReport, Tree};

const SMALL_DIAMETER: &str = "families are only defined for trees of diameter at least 3";

fn require_diameter_3(t: &Tree) -> Result<StructureReport> {
    let report = structure(t);
    if report.diameter < 3 {
        return Err(Error::Undefined(SMALL_DIAMETER));
    }
    Ok(report)
}

/// `γ_t,coi(T) = n - β(T)`.
pub fn in_family_t_beta(t: &Tree) -> Result<bool> {
    require_diameter_3(t)?;
    Ok(value(t, Invariant::Tcoi)? + value(t, Invariant::Beta)? == t.order())
}

/// `γ_t,coi(T) = n - |L(T)|`.
pub fn in_family_t_l(t: &Tree) -> Result<bool> {
    let report = require_diameter_3(t)?;
    Ok(value(t, Invariant::Tcoi)? + report.leaves.len() == t.order())
}

/// Every vertex is a leaf, support or semi-support, and every semi-support
/// is adjacent to an isolated support.
///
/// This condition is necessary for the upper-bound family but not
/// sufficient: the path `4-3-2-1-0-6-7-8` with a pendant on `1` satisfies it
/// while `{1, 2, 3, 6, 7}` beats `n - |L| = 6`. See
/// [`private_support_tl_check`] for a test that is exact.
pub fn structural_tl_check(t: &Tree) -> Result<bool> {
    let r = require_diameter_3(t)?;
    let covered = t
        .vertices()
        .all(|v| r.leaves.contains(v) || r.supports.contains(v) || r.semi_supports.contains(v));
    let attached = r
        .semi_supports
        .iter()
        .all(|v| t.neighbors(v).iter().any(|&w| r.isolated_supports.contains(w)));
    Ok(covered && attached)
}

/// Every vertex is a leaf, support or semi-support, and every semi-support
/// `v` has a support neighbor whose neighbors other than `v` are all leaves.
///
/// This says exactly that `V - L` is a minimal total co-independent
/// dominating set; on trees that already forces it to be minimum.
pub fn private_support_tl_check(t: &Tree) -> Result<bool> {
    let r = require_diameter_3(t)?;
    let covered = t
        .vertices()
        .all(|v| r.leaves.contains(v) || r.supports.contains(v) || r.semi_supports.contains(v));
    let private =
        |v: usize, u: usize| r.supports.contains(u) && t.neighbors(u).iter().all(|&w| w == v || r.leaves.contains(w));
    let attached = r
        .semi_supports
        .iter()
        .all(|v| t.neighbors(v).iter().any(|&u| private(v, u)));
    Ok(covered && attached)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{comb, double_star, family_f, path, star, FamilyFSpec};

    fn t11() -> Tree {
        family_f(&FamilyFSpec::new(path(2).unwrap(), [0].into(), [1].into()).unwrap()).unwrap()
    }

    #[test]
    fn t_beta_examples() {
        assert_eq!(in_family_t_beta(&path(4).unwrap()), Ok(true));
        assert_eq!(in_family_t_beta(&path(6).unwrap()), Ok(false));
        for (a, b) in [(1, 1), (2, 1), (3, 3), (4, 2)] {
            assert_eq!(in_family_t_beta(&double_star(a, b).unwrap()), Ok(true));
        }
        assert!(matches!(in_family_t_beta(&star(6).unwrap()), Err(Error::Undefined(_))));
    }

    #[test]
    fn t_l_examples() {
        assert_eq!(in_family_t_l(&path(5).unwrap()), Ok(true));
        assert_eq!(in_family_t_l(&path(6).unwrap()), Ok(true));
        assert_eq!(in_family_t_l(&t11()), Ok(false));
        assert!(matches!(in_family_t_l(&path(3).unwrap()), Err(Error::Undefined(_))));
    }

    #[test]
    fn structural_examples() {
        assert_eq!(structural_tl_check(&path(6).unwrap()), Ok(true));
        assert_eq!(structural_tl_check(&comb(3).unwrap()), Ok(true));
        assert_eq!(structural_tl_check(&t11()), Ok(false));
        assert!(matches!(
            structural_tl_check(&star(4).unwrap()),
            Err(Error::Undefined(_))
        ));
    }

    #[test]
    fn structural_test_overshoots() {
        let t = Tree::from_edges(9, &[(0, 1), (0, 6), (1, 2), (1, 5), (2, 3), (3, 4), (6, 7), (7, 8)]).unwrap();
        assert_eq!(structural_tl_check(&t), Ok(true));
        assert_eq!(in_family_t_l(&t), Ok(false));
        assert_eq!(private_support_tl_check(&t), Ok(false));
        assert_eq!(value(&t, Invariant::Tcoi), Ok(5));
        for tree in [path(5).unwrap(), path(6).unwrap(), comb(3).unwrap(), t11()] {
            assert_eq!(private_support_tl_check(&tree), in_family_t_l(&tree));
        }
    }
}
