//! Exhaustive enumeration of labeled topologies on small carriers.
//!
//! Finite topologies correspond one-to-one with preorders on the carrier
//! (the specialization preorder). We enumerate reflexive transitive
//! relations and map each to its family of up-closed sets.

use thiserror::Error;

use crate::subset::{SetFamily, SubSet};
use crate::topology::{validate_topology, Topology};

/// Default largest carrier for exhaustive enumeration.
pub const DEFAULT_ENUMERATION_CAP: usize = 4;

/// Hard ceiling; beyond this the preorder scan is impractical.
pub const MAX_ENUMERATION_CAP: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("exhaustive enumeration is capped at {cap} points, asked for {n}")]
    CarrierTooLarge { n: usize, cap: usize },
    #[error("carrier must have at least one point")]
    EmptyCarrier,
}

/// Every labeled topology on `n` points, in canonical order.
pub fn enumerate_topologies(n: usize) -> Result<Vec<Topology>, EnumerationError> {
    enumerate_topologies_capped(n, DEFAULT_ENUMERATION_CAP)
}

/// Same as [`enumerate_topologies`] with an explicit cap (at most
/// [`MAX_ENUMERATION_CAP`]).
pub fn enumerate_topologies_capped(n: usize, cap: usize) -> Result<Vec<Topology>, EnumerationError> {
    let cap = cap.min(MAX_ENUMERATION_CAP);
    if n == 0 {
        return Err(EnumerationError::EmptyCarrier);
    }
    if n > cap {
        return Err(EnumerationError::CarrierTooLarge { n, cap });
    }

    let off_diagonal: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();

    let mut families: Vec<SetFamily> = Vec::new();
    for code in 0u32..(1u32 << off_diagonal.len()) {
        // above[i] = points j with i <= j
        let mut above = vec![0u32; n];
        for (i, a) in above.iter_mut().enumerate() {
            *a = 1 << i;
        }
        for (k, &(i, j)) in off_diagonal.iter().enumerate() {
            if code >> k & 1 == 1 {
                above[i] |= 1 << j;
            }
        }
        let transitive = (0..n).all(|i| {
            SubSet::from_bits(n, above[i])
                .unwrap()
                .points()
                .all(|j| above[j] & !above[i] == 0)
        });
        if !transitive {
            continue;
        }
        let opens: SetFamily = SubSet::all(n)
            .filter(|u| u.points().all(|x| above[x] & !u.bits() == 0))
            .collect();
        families.push(opens);
    }
    families.sort();
    families.dedup();
    Ok(families
        .into_iter()
        .map(|f| validate_topology(f, n).expect("up-sets of a preorder form a topology"))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_topologies(1).unwrap().len(), 1);
        assert_eq!(enumerate_topologies(2).unwrap().len(), 4);
        assert_eq!(enumerate_topologies(3).unwrap().len(), 29);
    }

    #[test]
    fn caps_are_enforced() {
        assert_eq!(
            enumerate_topologies(5).unwrap_err(),
            EnumerationError::CarrierTooLarge { n: 5, cap: 4 }
        );
        assert_eq!(enumerate_topologies(0).unwrap_err(), EnumerationError::EmptyCarrier);
        assert!(enumerate_topologies_capped(6, 9).is_err());
    }

    #[test]
    fn order_is_canonical_and_deterministic() {
        let a = enumerate_topologies(3).unwrap();
        let b = enumerate_topologies(3).unwrap();
        assert_eq!(a, b);
        for w in a.windows(2) {
            assert!(w[0].opens() < w[1].opens());
        }
        assert!(a.contains(&Topology::indiscrete(3)));
        assert!(a.contains(&Topology::discrete(3)));
    }
}
