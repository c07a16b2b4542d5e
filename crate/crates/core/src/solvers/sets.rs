use crate::{Error, Result, Tree, VertexSet};

pub fn is_independent(t: &Tree, set: &VertexSet) -> bool {
    set.check_within(t.order()).is_ok() && set.iter().all(|v| t.neighbors(v).iter().all(|&w| !set.contains(w)))
}

pub fn is_total_dominating(t: &Tree, set: &VertexSet) -> bool {
    set.check_within(t.order()).is_ok() && t.vertices().all(|v| t.neighbors(v).iter().any(|&w| set.contains(w)))
}

/// Total dominating, with a non-empty independent complement.
pub fn is_tcoi_set(t: &Tree, set: &VertexSet) -> bool {
    let outside = set.complement(t.order());
    !outside.is_empty() && is_independent(t, &outside) && is_total_dominating(t, set)
}

/// Minimality by the local criterion: each member `v` either is the only
/// set-neighbor of some vertex, or has a neighbor outside the set.
pub fn is_minimal_tcoi_set(t: &Tree, set: &VertexSet) -> Result<bool> {
    if !is_tcoi_set(t, set) {
        return Err(Error::NotATcoiSet);
    }
    let private_neighbor = |v: usize| {
        t.vertices().any(|u| {
            let mut in_set = t.neighbors(u).iter().filter(|&&w| set.contains(w));
            in_set.next() == Some(&v) && in_set.next().is_none()
        })
    };
    let outside_neighbor = |v: usize| t.neighbors(v).iter().any(|&w| !set.contains(w));
    Ok(set.iter().all(|v| private_neighbor(v) || outside_neighbor(v)))
}

/// Minimality by definition: no single member can be dropped. Since
/// supersets of a total co-independent dominating set (short of the whole
/// vertex set) keep the property, single removals decide minimality.
pub fn is_minimal_by_removal(t: &Tree, set: &VertexSet) -> Result<bool> {
    if !is_tcoi_set(t, set) {
        return Err(Error::NotATcoiSet);
    }
    Ok(set.iter().all(|v| {
        let smaller: VertexSet = set.iter().filter(|&w| w != v).collect();
        !is_tcoi_set(t, &smaller)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{comb, path};

    #[test]
    fn tcoi_set_examples() {
        let p4 = path(4).unwrap();
        assert!(is_tcoi_set(&p4, &VertexSet::from([1, 2])));
        assert!(!is_tcoi_set(&p4, &VertexSet::from([0, 1, 2, 3])));
        assert!(!is_tcoi_set(&path(6).unwrap(), &VertexSet::from([1, 2, 4])));
        assert!(!is_tcoi_set(&p4, &VertexSet::from([1, 2, 7])));
    }

    #[test]
    fn minimality_examples() {
        assert_eq!(
            is_minimal_tcoi_set(&path(4).unwrap(), &VertexSet::from([1, 2])),
            Ok(true)
        );
        assert_eq!(
            is_minimal_tcoi_set(&path(6).unwrap(), &VertexSet::from([1, 2, 3, 4])),
            Ok(true)
        );
        let c = comb(3).unwrap();
        let d = VertexSet::from([0, 1, 2, 3]);
        assert_eq!(is_minimal_tcoi_set(&c, &d), Ok(false));
        assert_eq!(is_minimal_by_removal(&c, &d), Ok(false));
        assert_eq!(
            is_minimal_tcoi_set(&path(4).unwrap(), &VertexSet::from([0, 1])),
            Err(Error::NotATcoiSet)
        );
    }
}
