//! Structures derived from an operation: γ-interior, γ-closure, the γ-open
//! family, γ-closedness, and γ₀-compactness with its minimum subcovers.

use itertools::Itertools;
use thiserror::Error;

use crate::space::Space;
use crate::subset::{SetFamily, SubSet};
use crate::verdict::{Discharge, Query, Verdict};

/// Which of the two equivalent γ-closedness tests to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum ClosedConvention {
    /// `X − A` is γ-open.
    Complement,
    /// `cl_γ(A) ⊆ A`.
    #[default]
    Closure,
}

/// How to read "a class of γ-open and γ-closed sets".
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum IntersectionReading {
    /// Every member is both γ-open and γ-closed.
    #[default]
    Clopen,
    /// Members may be γ-open or γ-closed.
    Mixed,
}

/// Default largest class size scanned by
/// [`finite_intersection_characterization`].
pub const DEFAULT_CLASS_CAP: usize = 3;

/// Above this many nonempty γ-open sets the irredundant-cover scan in
/// [`is_gamma0_compact`] is skipped; finiteness alone settles the question.
pub const COVER_SCAN_LIMIT: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("member {0:?} of the cover is not γ-open")]
    NotGammaOpen(SubSet),
    #[error("point {0} is not covered")]
    Uncovered(usize),
}

/// The family `τ_γ` of γ-open sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GammaFamily {
    opens_gamma: SetFamily,
}

impl GammaFamily {
    pub fn family(&self) -> &SetFamily {
        &self.opens_gamma
    }

    pub fn contains(&self, a: SubSet) -> bool {
        self.opens_gamma.contains(a)
    }

    pub fn len(&self) -> usize {
        self.opens_gamma.len()
    }

    pub fn is_empty(&self) -> bool {
        self.opens_gamma.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, SubSet> {
        self.opens_gamma.iter()
    }
}

/// `int_γ(A)`: points of `A` lying in some open `N` with `N^γ ⊆ A`.
pub fn gamma_interior(s: &Space, a: SubSet) -> SubSet {
    s.topology()
        .opens()
        .iter()
        .filter(|&&n| s.gamma(n).is_subset(a))
        .fold(s.empty(), |acc, &n| acc.union(n))
        .intersection(a)
}

/// `cl_γ(A)`: points all of whose open neighbourhoods have a value
/// meeting `A`.
pub fn gamma_closure(s: &Space, a: SubSet) -> SubSet {
    let t = s.topology();
    (0..s.carrier())
        .filter(|&x| t.neighbourhoods(x).all(|u| s.gamma(u).meets(a)))
        .fold(s.empty(), |acc, x| acc.with(x))
}

/// Every `A ⊆ X` with `A = int_γ(A)`, canonical order.
pub fn gamma_open_family(s: &Space) -> GammaFamily {
    let opens_gamma = SubSet::all(s.carrier())
        .filter(|&a| gamma_interior(s, a) == a)
        .collect();
    GammaFamily { opens_gamma }
}

pub fn is_gamma_open(s: &Space, a: SubSet) -> bool {
    gamma_interior(s, a) == a
}

/// γ-closedness of `A`. The certificate lists, for each `x ∉ A`, an open
/// `U ∋ x` with `U^γ ∩ A = ∅`; the witness is the first point that has
/// none.
pub fn is_gamma_closed(s: &Space, a: SubSet, convention: ClosedConvention) -> Verdict {
    let bad = match convention {
        ClosedConvention::Complement => {
            let rest = a.complement();
            rest.difference(gamma_interior(s, rest))
        }
        ClosedConvention::Closure => gamma_closure(s, a).difference(a),
    };
    if let Some(x) = bad.points().next() {
        return Verdict::Fails(Query::Point(x));
    }
    let t = s.topology();
    let cert = a
        .complement()
        .points()
        .map(|x| {
            let u = t
                .neighbourhoods(x)
                .find(|&u| s.gamma(u).is_disjoint(a))
                .expect("point outside a γ-closed set has a separating neighbourhood");
            Discharge::new(Query::Point(x), vec![u])
        })
        .collect();
    Verdict::Holds(cert)
}

/// Minimum-size sub-family of a γ-open cover whose γ-closures still cover
/// `X`; among equal sizes the lexicographically first (by canonical
/// position in the cover) wins.
pub fn minimal_closure_subcover(s: &Space, cover: &SetFamily) -> Result<SetFamily, CoverError> {
    let family = gamma_open_family(s);
    if let Some(&bad) = cover.iter().find(|&&c| !family.contains(c)) {
        return Err(CoverError::NotGammaOpen(bad));
    }
    let union = cover.iter().fold(s.empty(), |acc, &c| acc.union(c));
    if let Some(x) = union.complement().points().next() {
        return Err(CoverError::Uncovered(x));
    }
    let closures: Vec<SubSet> = cover.iter().map(|&c| gamma_closure(s, c)).collect();
    let full = s.full();
    for k in 0..=cover.len() {
        let found = (0..cover.len()).combinations(k).find(|idx| {
            idx.iter()
                .fold(s.empty(), |acc, &i| acc.union(closures[i]))
                == full
        });
        if let Some(idx) = found {
            return Ok(idx.into_iter().map(|i| cover.as_slice()[i]).collect());
        }
    }
    unreachable!("the whole cover is a closure subcover")
}

/// γ₀-compactness. Always true on a finite carrier; the check still walks
/// every irredundant γ-open cover and records its minimum closure subcover.
pub fn is_gamma0_compact(s: &Space) -> Verdict {
    let members: Vec<SubSet> = gamma_open_family(s)
        .iter()
        .copied()
        .filter(|a| !a.is_empty())
        .collect();
    if members.len() > COVER_SCAN_LIMIT {
        return Verdict::Holds(Vec::new());
    }
    let full = s.full();
    let mut cert = Vec::new();
    for mask in 0u32..(1u32 << members.len()) {
        let cover: Vec<SubSet> = (0..members.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| members[i])
            .collect();
        let union = cover.iter().fold(s.empty(), |acc, &c| acc.union(c));
        if union != full {
            continue;
        }
        let irredundant = (0..cover.len()).all(|skip| {
            cover
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != skip)
                .fold(s.empty(), |acc, (_, &c)| acc.union(c))
                != full
        });
        if !irredundant {
            continue;
        }
        let fam = SetFamily::new(cover.clone());
        match minimal_closure_subcover(s, &fam) {
            Ok(sub) => cert.push(Discharge::new(Query::Family(cover), sub.into_vec())),
            Err(_) => return Verdict::Fails(Query::Family(cover)),
        }
    }
    Verdict::Holds(cert)
}

/// Candidate members for the intersection characterization.
pub fn intersection_candidates(s: &Space, reading: IntersectionReading) -> SetFamily {
    let family = gamma_open_family(s);
    let closed: Vec<SubSet> = family.iter().map(|a| a.complement()).collect();
    match reading {
        IntersectionReading::Clopen => closed.into_iter().filter(|&c| family.contains(c)).collect(),
        IntersectionReading::Mixed => family.iter().copied().chain(closed).collect(),
    }
}

/// Every class (up to `cap` members) of candidate sets with empty
/// intersection has a finite subclass with empty intersection. The
/// certificate records a smallest such subclass for each class.
pub fn finite_intersection_characterization(s: &Space, reading: IntersectionReading, cap: usize) -> Verdict {
    let cands = intersection_candidates(s, reading).into_vec();
    let meet = |sets: &[SubSet]| sets.iter().fold(s.full(), |acc, &c| acc.intersection(c));
    let mut cert = Vec::new();
    for k in 1..=cap.min(cands.len()) {
        for class in cands.iter().copied().combinations(k) {
            if !meet(&class).is_empty() {
                continue;
            }
            let sub = (1..=class.len())
                .find_map(|j| class.iter().copied().combinations(j).find(|c| meet(c).is_empty()));
            match sub {
                Some(sub) => cert.push(Discharge::new(Query::Family(class), sub)),
                None => return Verdict::Fails(Query::Family(class)),
            }
        }
    }
    Verdict::Holds(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    fn set(n: usize, pts: &[usize]) -> SubSet {
        SubSet::from_points(n, pts.iter().copied())
    }

    // Pointwise transcription of the displayed definitions.
    fn interior_oracle(s: &Space, a: SubSet) -> SubSet {
        let mut out = s.empty();
        for x in a.points() {
            for &n in s.topology().opens() {
                if n.contains(x) && s.gamma(n).is_subset(a) {
                    out = out.with(x);
                }
            }
        }
        out
    }

    fn closure_oracle(s: &Space, a: SubSet) -> SubSet {
        let mut out = s.empty();
        'points: for x in 0..s.carrier() {
            for &u in s.topology().opens() {
                if u.contains(x) && s.gamma(u).intersection(a).is_empty() {
                    continue 'points;
                }
            }
            out = out.with(x);
        }
        out
    }

    #[test]
    fn interior_and_closure_match_definitions() {
        for s in [samples::example1(), samples::example2(), samples::regular_example(), samples::normal_example()] {
            for a in SubSet::all(s.carrier()) {
                assert_eq!(gamma_interior(&s, a), interior_oracle(&s, a));
                assert_eq!(gamma_closure(&s, a), closure_oracle(&s, a));
            }
        }
    }

    #[test]
    fn worked_values() {
        let e1 = samples::example1();
        let e2 = samples::example2();
        assert_eq!(gamma_interior(&e1, set(3, &[0, 2])), set(3, &[0]));
        assert_eq!(gamma_interior(&e1, e1.full()), e1.full());
        assert_eq!(gamma_interior(&e2, set(3, &[0])), SubSet::empty(3));
        assert_eq!(gamma_closure(&e1, set(3, &[0])), set(3, &[0, 2]));
        assert_eq!(gamma_closure(&e1, e1.empty()), e1.empty());
        assert_eq!(gamma_closure(&e2, set(3, &[2])), e2.full());
    }

    #[test]
    fn gamma_open_families() {
        let fam = |s: &Space| gamma_open_family(s).family().clone().into_vec();
        assert_eq!(
            fam(&samples::example1()),
            vec![set(3, &[]), set(3, &[0]), set(3, &[1]), set(3, &[0, 1]), set(3, &[0, 1, 2])]
        );
        assert_eq!(fam(&samples::example2()), vec![set(3, &[]), set(3, &[0, 1, 2])]);
        // brute force over the 16 subsets
        let s3 = samples::normal_example();
        let brute: Vec<SubSet> = SubSet::all(4).filter(|&a| interior_oracle(&s3, a) == a).collect();
        assert_eq!(brute, vec![set(4, &[]), set(4, &[0]), set(4, &[1, 2, 3]), set(4, &[0, 1, 2, 3])]);
        assert_eq!(fam(&s3), brute);
    }

    #[test]
    fn gamma_closedness() {
        let e1 = samples::example1();
        let e2 = samples::example2();
        assert!(is_gamma_closed(&e1, set(3, &[2]), ClosedConvention::Closure).holds());
        for conv in [ClosedConvention::Closure, ClosedConvention::Complement] {
            assert!(is_gamma_closed(&e1, e1.full(), conv).holds());
        }
        assert_eq!(
            is_gamma_closed(&e2, set(3, &[0]), ClosedConvention::Complement),
            Verdict::Fails(Query::Point(2))
        );
    }

    #[test]
    fn subcovers() {
        let e1 = samples::example1();
        let cover = SetFamily::new(vec![set(3, &[0]), set(3, &[1]), e1.full()]);
        assert_eq!(minimal_closure_subcover(&e1, &cover).unwrap().into_vec(), vec![e1.full()]);
        let whole = SetFamily::new(vec![e1.full()]);
        assert_eq!(minimal_closure_subcover(&e1, &whole).unwrap(), whole);
        let partial = SetFamily::new(vec![set(3, &[0]), set(3, &[1])]);
        assert_eq!(minimal_closure_subcover(&e1, &partial), Err(CoverError::Uncovered(2)));
        let e2 = samples::example2();
        let bad = SetFamily::new(vec![set(3, &[0]), e2.full()]);
        assert_eq!(minimal_closure_subcover(&e2, &bad), Err(CoverError::NotGammaOpen(set(3, &[0]))));
    }

    #[test]
    fn compactness_and_intersections_hold() {
        for s in [samples::example1(), samples::example2(), samples::normal_example()] {
            assert!(is_gamma0_compact(&s).holds());
            for r in [IntersectionReading::Clopen, IntersectionReading::Mixed] {
                assert!(finite_intersection_characterization(&s, r, DEFAULT_CLASS_CAP).holds());
            }
        }
        // {a},{b} is an irredundant cover only when c is covered; X alone is one
        let Verdict::Holds(cert) = is_gamma0_compact(&samples::example1()) else {
            panic!()
        };
        assert!(cert.iter().any(|d| d.query == Query::Family(vec![SubSet::full(3)])));
    }
}
