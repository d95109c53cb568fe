//! Validated topologies on finite carriers, the classical closure and
//! interior operators, and subspace (trace) topologies.

use thiserror::Error;

use crate::subset::{default_names, SetFamily, SubSet, MAX_POINTS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error("carrier of {0} points is outside 0..={MAX_POINTS}")]
    CarrierOutOfRange(usize),
    #[error("set {0:?} does not fit the carrier")]
    OutsideCarrier(SubSet),
    #[error("the family must contain the empty set and the whole carrier")]
    MissingEmptyOrFull,
    #[error("not closed under union: {0:?} ∪ {1:?} is missing")]
    NotClosedUnderUnion(SubSet, SubSet),
    #[error("not closed under intersection: {0:?} ∩ {1:?} is missing")]
    NotClosedUnderIntersection(SubSet, SubSet),
    #[error("expected {expected} point names, got {got}")]
    NameCount { expected: usize, got: usize },
}

/// A topology on `{0, .., n-1}` with optional point labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Topology {
    n: usize,
    opens: SetFamily,
    names: Vec<String>,
}

/// Checks the topology axioms and canonicalizes the family.
///
/// The union scan runs before the intersection scan, and both report the
/// first missing pair in canonical order.
pub fn validate_topology(opens: SetFamily, n: usize) -> Result<Topology, TopologyError> {
    if n > MAX_POINTS {
        return Err(TopologyError::CarrierOutOfRange(n));
    }
    if let Some(bad) = opens.iter().find(|s| s.carrier() != n) {
        return Err(TopologyError::OutsideCarrier(*bad));
    }
    if !opens.contains(SubSet::empty(n)) || !opens.contains(SubSet::full(n)) {
        return Err(TopologyError::MissingEmptyOrFull);
    }
    let sets = opens.as_slice();
    for (i, &u) in sets.iter().enumerate() {
        for &v in &sets[i + 1..] {
            if !opens.contains(u.union(v)) {
                return Err(TopologyError::NotClosedUnderUnion(u, v));
            }
        }
    }
    for (i, &u) in sets.iter().enumerate() {
        for &v in &sets[i + 1..] {
            if !opens.contains(u.intersection(v)) {
                return Err(TopologyError::NotClosedUnderIntersection(u, v));
            }
        }
    }
    Ok(Topology {
        n,
        opens,
        names: default_names(n),
    })
}

impl Topology {
    /// The indiscrete topology `{∅, X}`.
    pub fn indiscrete(n: usize) -> Topology {
        validate_topology(SetFamily::new(vec![SubSet::empty(n), SubSet::full(n)]), n)
            .expect("indiscrete family is a topology")
    }

    /// The discrete topology (every subset open).
    pub fn discrete(n: usize) -> Topology {
        validate_topology(SubSet::all(n).collect(), n).expect("power set is a topology")
    }

    /// Replaces the point labels.
    pub fn with_names(mut self, names: Vec<String>) -> Result<Topology, TopologyError> {
        if names.len() != self.n {
            return Err(TopologyError::NameCount {
                expected: self.n,
                got: names.len(),
            });
        }
        self.names = names;
        Ok(self)
    }

    #[inline]
    pub fn carrier(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn opens(&self) -> &SetFamily {
        &self.opens
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn full(&self) -> SubSet {
        SubSet::full(self.n)
    }

    pub fn empty(&self) -> SubSet {
        SubSet::empty(self.n)
    }

    pub fn is_open(&self, a: SubSet) -> bool {
        self.opens.contains(a)
    }

    pub fn is_closed(&self, a: SubSet) -> bool {
        self.opens.contains(a.complement())
    }

    /// Closed sets in canonical order.
    pub fn closed_sets(&self) -> SetFamily {
        self.opens.iter().map(|u| u.complement()).collect()
    }

    /// Opens containing the point `x`, canonical order.
    pub fn neighbourhoods(&self, x: usize) -> impl Iterator<Item = SubSet> + '_ {
        self.opens.iter().copied().filter(move |u| u.contains(x))
    }

    /// Smallest open set containing `x`.
    pub fn minimal_neighbourhood(&self, x: usize) -> SubSet {
        self.neighbourhoods(x)
            .fold(self.full(), |acc, u| acc.intersection(u))
    }

    /// Smallest closed superset of `a`: the complement of every open set
    /// that misses `a`.
    pub fn closure(&self, a: SubSet) -> SubSet {
        self.opens
            .iter()
            .filter(|u| u.is_disjoint(a))
            .fold(self.empty(), |acc, &u| acc.union(u))
            .complement()
    }

    /// Largest open subset of `a`.
    pub fn interior(&self, a: SubSet) -> SubSet {
        self.opens
            .iter()
            .filter(|u| u.is_subset(a))
            .fold(self.empty(), |acc, &u| acc.union(u))
    }

    /// The trace topology on `y`, reindexed so the i-th member of `y`
    /// becomes point i. Labels follow their points.
    pub fn subspace(&self, y: SubSet) -> Topology {
        let opens: SetFamily = self.opens.iter().map(|u| u.compress(y)).collect();
        let names = y.points().map(|x| self.names[x].clone()).collect();
        Topology {
            n: y.len(),
            opens,
            names,
        }
    }

    /// Renders the open family with labels.
    pub fn render(&self) -> String {
        self.opens.render(&self.names)
    }
}

/// Free-function form of [`Topology::closure`].
pub fn closure(t: &Topology, a: SubSet) -> SubSet {
    t.closure(a)
}

/// Free-function form of [`Topology::interior`].
pub fn interior(t: &Topology, a: SubSet) -> SubSet {
    t.interior(a)
}

/// Free-function form of [`Topology::subspace`].
pub fn subspace_topology(t: &Topology, y: SubSet) -> Topology {
    t.subspace(y)
}
