//! Seeded random labeled trees.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use treedom_core::{Error, Tree};

/// A uniformly random labeled tree on `n` vertices, decoded from a random
/// Prüfer sequence. The same seed always gives the same tree.
pub fn random_tree(n: usize, seed: u64) -> treedom_core::Result<Tree> {
    match n {
        0 => Err(Error::BadParameter("order must be at least 1".into())),
        1 => Ok(Tree::singleton()),
        _ => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            Tree::from_prufer(&seq)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_sized() {
        for n in 1..30 {
            let a = random_tree(n, 7).unwrap();
            assert_eq!(a.order(), n);
            assert_eq!(a, random_tree(n, 7).unwrap());
        }
        assert!(random_tree(0, 1).is_err());
        assert_ne!(random_tree(20, 1).unwrap(), random_tree(20, 2).unwrap());
    }
}
