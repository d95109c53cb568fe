//! Separation predicates: γ-T₁, γ-T₂, γˢ-regularity, γˢ-normality and a
//! few companions used by the implication lab.
//!
//! Every scan walks its configurations in canonical order and reports the
//! first one that cannot be separated, so witnesses are reproducible.

use crate::gamma::{gamma_closure, is_gamma_closed, ClosedConvention};
use crate::space::Space;
use crate::subset::{SetFamily, SubSet};
use crate::verdict::{Discharge, Query, Verdict};

/// Which sets count as "closed" in the regularity and normality axioms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub enum ClosedMode {
    /// Complements of opens.
    #[default]
    Tau,
    /// Sets with `cl_γ(A) ⊆ A`.
    Gamma,
}

impl ClosedMode {
    pub const ALL: [ClosedMode; 2] = [ClosedMode::Tau, ClosedMode::Gamma];

    pub fn label(self) -> &'static str {
        match self {
            ClosedMode::Tau => "tau",
            ClosedMode::Gamma => "gamma",
        }
    }

    pub fn parse(s: &str) -> Option<ClosedMode> {
        match s {
            "tau" | "tau-closed" => Some(ClosedMode::Tau),
            "gamma" | "gamma-closed" => Some(ClosedMode::Gamma),
            _ => None,
        }
    }
}

/// Closed sets under `mode`, canonical order.
pub fn closed_sets(s: &Space, mode: ClosedMode) -> SetFamily {
    match mode {
        ClosedMode::Tau => s.topology().closed_sets(),
        ClosedMode::Gamma => SubSet::all(s.carrier())
            .filter(|&a| gamma_closure(s, a).is_subset(a))
            .collect(),
    }
}

/// First pair of opens `(U, V)` in canonical order with `U ∈ left`,
/// `V ∈ right` and disjoint values.
fn separating_pair(
    s: &Space,
    left: impl Fn(SubSet) -> bool,
    right: impl Fn(SubSet) -> bool,
) -> Option<(SubSet, SubSet)> {
    let opens = s.topology().opens().as_slice();
    opens.iter().filter(|&&u| left(u)).find_map(|&u| {
        let gu = s.gamma(u);
        opens
            .iter()
            .find(|&&v| right(v) && s.gamma(v).is_disjoint(gu))
            .map(|&v| (u, v))
    })
}

/// Distinct points have neighbourhoods with disjoint values.
pub fn is_gamma_t2(s: &Space) -> Verdict {
    let n = s.carrier();
    let items = (0..n).flat_map(|x| {
        (x + 1..n).map(move |y| {
            let q = Query::Points(x, y);
            match separating_pair(s, |u| u.contains(x), |v| v.contains(y)) {
                Some((u, v)) => Ok(Discharge::new(q, vec![u, v])),
                None => Err(q),
            }
        })
    });
    Verdict::collect(items)
}

/// For every ordered pair `x ≠ y` some neighbourhood of `x` has a value
/// missing `y`.
pub fn is_gamma_t1(s: &Space) -> Verdict {
    let t = s.topology();
    let n = s.carrier();
    let items = (0..n).flat_map(|x| {
        (0..n).filter(move |&y| y != x).map(move |y| {
            let q = Query::Points(x, y);
            match t.neighbourhoods(x).find(|&u| !s.gamma(u).contains(y)) {
                Some(u) => Ok(Discharge::new(q, vec![u])),
                None => Err(q),
            }
        })
    });
    Verdict::collect(items)
}

/// Point and closed set not containing it are separated by opens with
/// disjoint values. `A = ∅` takes part.
pub fn is_gammas_regular(s: &Space, mode: ClosedMode) -> Verdict {
    let closed = closed_sets(s, mode);
    let items = closed.iter().flat_map(|&a| {
        a.complement().points().map(move |x| {
            let q = Query::PointSet { x, set: a };
            match separating_pair(s, |u| u.contains(x), |v| a.is_subset(v)) {
                Some((u, v)) => Ok(Discharge::new(q, vec![u, v])),
                None => Err(q),
            }
        })
    });
    Verdict::collect(items)
}

fn normal_pairs(s: &Space, mode: ClosedMode) -> Vec<(SubSet, SubSet)> {
    let closed = closed_sets(s, mode).into_vec();
    let mut out = Vec::new();
    for (i, &a) in closed.iter().enumerate() {
        for &b in &closed[i..] {
            if a.is_disjoint(b) {
                out.push((a, b));
            }
        }
    }
    out
}

/// Disjoint closed sets are separated by opens with disjoint values.
/// Pairs are unordered and include `(∅, ∅)`.
pub fn is_gammas_normal(s: &Space, mode: ClosedMode) -> Verdict {
    let items = normal_pairs(s, mode).into_iter().map(|(a, b)| {
        let q = Query::Sets(a, b);
        match separating_pair(s, |u| a.is_subset(u), |v| b.is_subset(v)) {
            Some((u, v)) => Ok(Discharge::new(q, vec![u, v])),
            None => Err(q),
        }
    });
    Verdict::collect(items)
}

/// Every disjoint closed pair that no opens separate, canonical order.
pub fn gammas_normal_failures(s: &Space, mode: ClosedMode) -> Vec<(SubSet, SubSet)> {
    normal_pairs(s, mode)
        .into_iter()
        .filter(|&(a, b)| separating_pair(s, |u| a.is_subset(u), |v| b.is_subset(v)).is_none())
        .collect()
}

/// For every closed `A` and open `U ⊇ A` there is an open `V ⊇ A` with
/// `V ⊆ cl_γ(V^γ) ⊆ U^γ`.
pub fn has_shrinking_property(s: &Space, mode: ClosedMode) -> Verdict {
    let opens = s.topology().opens().as_slice();
    let closed = closed_sets(s, mode);
    let items = closed.iter().flat_map(|&a| {
        opens.iter().filter(move |&&u| a.is_subset(u)).map(move |&u| {
            let q = Query::Sets(a, u);
            let gu = s.gamma(u);
            let found = opens.iter().find(|&&v| {
                let c = gamma_closure(s, s.gamma(v));
                a.is_subset(v) && v.is_subset(c) && c.is_subset(gu)
            });
            match found {
                Some(&v) => Ok(Discharge::new(q, vec![v])),
                None => Err(q),
            }
        })
    });
    Verdict::collect(items)
}

/// Disjoint opens have disjoint values.
pub fn disjoint_opens_have_disjoint_values(s: &Space) -> Verdict {
    let opens = s.topology().opens().as_slice();
    let items = opens.iter().enumerate().flat_map(|(i, &u)| {
        opens[i..].iter().filter(move |&&v| u.is_disjoint(v)).map(move |&v| {
            let q = Query::Sets(u, v);
            if s.gamma(u).is_disjoint(s.gamma(v)) {
                Ok(Discharge::new(q, vec![]))
            } else {
                Err(q)
            }
        })
    });
    Verdict::collect(items)
}

fn all_gamma_closed(s: &Space, sets: impl Iterator<Item = SubSet>) -> Verdict {
    let mut cert = Vec::new();
    for a in sets {
        match is_gamma_closed(s, a, ClosedConvention::Closure) {
            Verdict::Holds(ds) => cert.extend(ds.into_iter().map(|d| {
                let Query::Point(x) = d.query else { unreachable!() };
                Discharge::new(Query::PointSet { x, set: a }, d.sets)
            })),
            Verdict::Fails(Query::Point(x)) => return Verdict::Fails(Query::PointSet { x, set: a }),
            Verdict::Fails(q) => return Verdict::Fails(q),
        }
    }
    Verdict::Holds(cert)
}

/// Every singleton is γ-closed.
pub fn singletons_gamma_closed(s: &Space) -> Verdict {
    let n = s.carrier();
    all_gamma_closed(s, (0..n).map(|x| SubSet::singleton(n, x)))
}

/// Every subset is γ-closed.
pub fn all_subsets_gamma_closed(s: &Space) -> Verdict {
    all_gamma_closed(s, SubSet::all(s.carrier()))
}

/// Which sets carry the point and the set in [`point_set_separation`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeparationForm {
    /// `x ∈ U^γ`, `C ⊆ V^γ`.
    OnValues,
    /// `x ∈ U`, `C ⊆ V`.
    OnOpens,
}

/// For every nonempty `C` and `x ∉ C` there are opens `U, V` with
/// `U^γ ∩ V^γ = ∅`, `x` and `C` placed according to `form`.
pub fn point_set_separation(s: &Space, form: SeparationForm) -> Verdict {
    let items = SubSet::all(s.carrier()).filter(|c| !c.is_empty()).flat_map(|c| {
        c.complement().points().map(move |x| {
            let q = Query::PointSet { x, set: c };
            let found = match form {
                SeparationForm::OnValues => {
                    separating_pair(s, |u| s.gamma(u).contains(x), |v| c.is_subset(s.gamma(v)))
                }
                SeparationForm::OnOpens => separating_pair(s, |u| u.contains(x), |v| c.is_subset(v)),
            };
            match found {
                Some((u, v)) => Ok(Discharge::new(q, vec![u, v])),
                None => Err(q),
            }
        })
    });
    Verdict::collect(items)
}
