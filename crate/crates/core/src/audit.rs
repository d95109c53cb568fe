//! Re-validation of verdicts against the raw definitions.
//!
//! Nothing here calls the search code in `operation`, `gamma` or
//! `separation`. Every definition is re-stated with explicit loops over the
//! opens and the table, so a certificate that survives an audit has been
//! checked along an independent route.

use thiserror::Error;

use crate::gamma::IntersectionReading;
use crate::separation::{ClosedMode, SeparationForm};
use crate::space::Space;
use crate::subset::SubSet;
use crate::verdict::{Query, Verdict};

/// A predicate with its parameters, as the audit sees it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Claim {
    RegularOp,
    StrictlyRegularOp,
    OpenOp,
    GammaT1,
    GammaT2,
    GsRegular(ClosedMode),
    GsNormal(ClosedMode),
    Shrinking(ClosedMode),
    GammaClosed(SubSet),
    SingletonsGammaClosed,
    AllSubsetsGammaClosed,
    DisjointValues,
    PointSetSeparation(SeparationForm),
    Gamma0Compact,
    FiniteIntersection(IntersectionReading, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AuditError {
    #[error("certificate entry does not discharge {0:?}")]
    BadDischarge(Query),
    #[error("certificate is missing configuration {0:?}")]
    MissingConfiguration(Query),
    #[error("certificate lists {0:?}, which is not a configuration of the claim")]
    UnexpectedConfiguration(Query),
    #[error("witness {0:?} is not a configuration of the claim")]
    WitnessNotAConfiguration(Query),
    #[error("witness {0:?} can in fact be discharged")]
    WitnessSolvable(Query),
}

fn opens(s: &Space) -> &[SubSet] {
    s.topology().opens().as_slice()
}

fn raw_gamma_closure_contains(s: &Space, a: SubSet, x: usize) -> bool {
    opens(s)
        .iter()
        .all(|&u| !u.contains(x) || s.gamma(u).meets(a))
}

fn raw_gamma_closure(s: &Space, a: SubSet) -> SubSet {
    (0..s.carrier())
        .filter(|&x| raw_gamma_closure_contains(s, a, x))
        .fold(s.empty(), |acc, x| acc.with(x))
}

fn raw_gamma_closed(s: &Space, a: SubSet) -> bool {
    (0..s.carrier()).all(|x| a.contains(x) || !raw_gamma_closure_contains(s, a, x))
}

fn raw_gamma_open(s: &Space, a: SubSet) -> bool {
    a.points()
        .all(|x| opens(s).iter().any(|&n| n.contains(x) && s.gamma(n).is_subset(a)))
}

fn raw_closed(s: &Space, mode: ClosedMode, a: SubSet) -> bool {
    match mode {
        ClosedMode::Tau => opens(s).contains(&a.complement()),
        ClosedMode::Gamma => raw_gamma_closed(s, a),
    }
}

fn is_open(s: &Space, a: SubSet) -> bool {
    opens(s).contains(&a)
}

fn meet_of(s: &Space, family: &[SubSet]) -> SubSet {
    family.iter().fold(s.full(), |acc, &c| acc.intersection(c))
}

fn subfamilies(family: &[SubSet]) -> impl Iterator<Item = Vec<SubSet>> + '_ {
    (0u32..(1u32 << family.len())).map(move |mask| {
        family
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &c)| c)
            .collect()
    })
}

/// Every configuration the claim quantifies over, in no particular order.
fn configurations(s: &Space, claim: &Claim) -> Option<Vec<Query>> {
    let n = s.carrier();
    let all_sets: Vec<SubSet> = SubSet::all(n).collect();
    let mut out = Vec::new();
    match claim {
        Claim::RegularOp | Claim::StrictlyRegularOp => {
            for x in 0..n {
                for &u in opens(s) {
                    for &v in opens(s) {
                        if u.contains(x) && v.contains(x) && u <= v {
                            out.push(Query::PointOpens { x, u, v });
                        }
                    }
                }
            }
        }
        Claim::OpenOp => {
            for &v in opens(s) {
                for x in s.gamma(v).points() {
                    out.push(Query::OpenPoint { open: v, x });
                }
            }
        }
        Claim::GammaT1 => {
            for x in 0..n {
                for y in 0..n {
                    if x != y {
                        out.push(Query::Points(x, y));
                    }
                }
            }
        }
        Claim::GammaT2 => {
            for x in 0..n {
                for y in x + 1..n {
                    out.push(Query::Points(x, y));
                }
            }
        }
        Claim::GsRegular(mode) => {
            for &a in &all_sets {
                if raw_closed(s, *mode, a) {
                    for x in (0..n).filter(|&x| !a.contains(x)) {
                        out.push(Query::PointSet { x, set: a });
                    }
                }
            }
        }
        Claim::GsNormal(mode) => {
            for &a in &all_sets {
                for &b in &all_sets {
                    if a <= b && a.is_disjoint(b) && raw_closed(s, *mode, a) && raw_closed(s, *mode, b) {
                        out.push(Query::Sets(a, b));
                    }
                }
            }
        }
        Claim::Shrinking(mode) => {
            for &a in &all_sets {
                if raw_closed(s, *mode, a) {
                    for &u in opens(s) {
                        if a.is_subset(u) {
                            out.push(Query::Sets(a, u));
                        }
                    }
                }
            }
        }
        Claim::GammaClosed(a) => {
            for x in (0..n).filter(|&x| !a.contains(x)) {
                out.push(Query::Point(x));
            }
        }
        Claim::SingletonsGammaClosed | Claim::AllSubsetsGammaClosed => {
            for &a in &all_sets {
                if matches!(claim, Claim::SingletonsGammaClosed) && a.len() != 1 {
                    continue;
                }
                for x in (0..n).filter(|&x| !a.contains(x)) {
                    out.push(Query::PointSet { x, set: a });
                }
            }
        }
        Claim::DisjointValues => {
            for &u in opens(s) {
                for &v in opens(s) {
                    if u <= v && u.is_disjoint(v) {
                        out.push(Query::Sets(u, v));
                    }
                }
            }
        }
        Claim::PointSetSeparation(_) => {
            for &c in &all_sets {
                if !c.is_empty() {
                    for x in (0..n).filter(|&x| !c.contains(x)) {
                        out.push(Query::PointSet { x, set: c });
                    }
                }
            }
        }
        Claim::Gamma0Compact => {
            let members: Vec<SubSet> = all_sets
                .iter()
                .copied()
                .filter(|&a| !a.is_empty() && raw_gamma_open(s, a))
                .collect();
            if members.len() > crate::gamma::COVER_SCAN_LIMIT {
                return None;
            }
            for cover in subfamilies(&members) {
                let union = cover.iter().fold(s.empty(), |acc, &c| acc.union(c));
                let irredundant = (0..cover.len()).all(|skip| {
                    let rest = cover
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| *i != skip)
                        .fold(s.empty(), |acc, (_, &c)| acc.union(c));
                    rest != s.full()
                });
                if union == s.full() && irredundant {
                    out.push(Query::Family(cover));
                }
            }
        }
        Claim::FiniteIntersection(reading, cap) => {
            let cands: Vec<SubSet> = all_sets
                .iter()
                .copied()
                .filter(|&a| {
                    let open = raw_gamma_open(s, a);
                    let closed = raw_gamma_open(s, a.complement());
                    match reading {
                        IntersectionReading::Clopen => open && closed,
                        IntersectionReading::Mixed => open || closed,
                    }
                })
                .collect();
            for class in subfamilies(&cands) {
                if !class.is_empty() && class.len() <= *cap && meet_of(s, &class).is_empty() {
                    out.push(Query::Family(class));
                }
            }
        }
    }
    Some(out)
}

/// Does `sets` discharge configuration `q` under `claim`?
fn discharges(s: &Space, claim: &Claim, q: &Query, sets: &[SubSet]) -> bool {
    let g = |u: SubSet| s.gamma(u);
    let all_open = sets.iter().all(|&u| is_open(s, u));
    match (claim, q, sets) {
        (Claim::RegularOp, Query::PointOpens { x, u, v }, &[w]) => {
            all_open && w.contains(*x) && g(w).is_subset(g(*u).intersection(g(*v)))
        }
        (Claim::StrictlyRegularOp, Query::PointOpens { x, u, v }, &[w]) => {
            all_open && w.contains(*x) && g(w) == g(*u).intersection(g(*v))
        }
        (Claim::OpenOp, Query::OpenPoint { open, x }, &[nb]) => {
            all_open && nb.contains(*x) && g(nb).is_subset(g(*open))
        }
        (Claim::GammaT1, Query::Points(x, y), &[u]) => all_open && u.contains(*x) && !g(u).contains(*y),
        (Claim::GammaT2, Query::Points(x, y), &[u, v]) => {
            all_open && u.contains(*x) && v.contains(*y) && g(u).is_disjoint(g(v))
        }
        (Claim::GsRegular(_), Query::PointSet { x, set }, &[u, v]) => {
            all_open && u.contains(*x) && set.is_subset(v) && g(u).is_disjoint(g(v))
        }
        (Claim::GsNormal(_), Query::Sets(a, b), &[u, v]) => {
            all_open && a.is_subset(u) && b.is_subset(v) && g(u).is_disjoint(g(v))
        }
        (Claim::Shrinking(_), Query::Sets(a, u), &[v]) => {
            let c = raw_gamma_closure(s, g(v));
            all_open && a.is_subset(v) && v.is_subset(c) && c.is_subset(g(*u))
        }
        (Claim::GammaClosed(a), Query::Point(x), &[u]) => all_open && u.contains(*x) && g(u).is_disjoint(*a),
        (
            Claim::SingletonsGammaClosed | Claim::AllSubsetsGammaClosed,
            Query::PointSet { x, set },
            &[u],
        ) => all_open && u.contains(*x) && g(u).is_disjoint(*set),
        (Claim::DisjointValues, Query::Sets(u, v), &[]) => g(*u).is_disjoint(g(*v)),
        (Claim::PointSetSeparation(form), Query::PointSet { x, set }, &[u, v]) => {
            let (pu, pv) = match form {
                SeparationForm::OnValues => (g(u), g(v)),
                SeparationForm::OnOpens => (u, v),
            };
            all_open && pu.contains(*x) && set.is_subset(pv) && g(u).is_disjoint(g(v))
        }
        (Claim::Gamma0Compact, Query::Family(cover), sub) => {
            sub.iter().all(|c| cover.contains(c))
                && sub
                    .iter()
                    .fold(s.empty(), |acc, &c| acc.union(raw_gamma_closure(s, c)))
                    == s.full()
        }
        (Claim::FiniteIntersection(..), Query::Family(class), sub) => {
            !sub.is_empty() && sub.iter().all(|c| class.contains(c)) && meet_of(s, sub).is_empty()
        }
        _ => false,
    }
}

/// Can `q` be discharged by any choice at all?
fn solvable(s: &Space, claim: &Claim, q: &Query) -> bool {
    let os = opens(s);
    match claim {
        Claim::DisjointValues => discharges(s, claim, q, &[]),
        Claim::Gamma0Compact | Claim::FiniteIntersection(..) => match q {
            Query::Family(fam) => subfamilies(fam).any(|sub| discharges(s, claim, q, &sub)),
            _ => false,
        },
        Claim::GammaT2
        | Claim::GsRegular(_)
        | Claim::GsNormal(_)
        | Claim::PointSetSeparation(_) => os
            .iter()
            .any(|&u| os.iter().any(|&v| discharges(s, claim, q, &[u, v]))),
        _ => os.iter().any(|&u| discharges(s, claim, q, &[u])),
    }
}

/// Checks `verdict` for `claim` on `s` against the raw definition.
///
/// A passing verdict must discharge exactly the claim's configurations. A
/// failing verdict's witness must be a configuration that no choice of
/// sets discharges.
pub fn revalidate(s: &Space, claim: &Claim, verdict: &Verdict) -> Result<(), AuditError> {
    let configs = configurations(s, claim);
    match verdict {
        Verdict::Holds(cert) => {
            for d in cert {
                if !discharges(s, claim, &d.query, &d.sets) {
                    return Err(AuditError::BadDischarge(d.query.clone()));
                }
            }
            let Some(configs) = configs else {
                return Ok(());
            };
            for q in &configs {
                if !cert.iter().any(|d| &d.query == q) {
                    return Err(AuditError::MissingConfiguration(q.clone()));
                }
            }
            for d in cert {
                if !configs.contains(&d.query) {
                    return Err(AuditError::UnexpectedConfiguration(d.query.clone()));
                }
            }
            Ok(())
        }
        Verdict::Fails(w) => {
            if let (Claim::OpenOp, Query::Open(v)) = (claim, w) {
                if !is_open(s, *v) {
                    return Err(AuditError::WitnessNotAConfiguration(w.clone()));
                }
                return if raw_gamma_open(s, s.gamma(*v)) {
                    Err(AuditError::WitnessSolvable(w.clone()))
                } else {
                    Ok(())
                };
            }
            if let Some(configs) = &configs {
                if !configs.contains(w) {
                    return Err(AuditError::WitnessNotAConfiguration(w.clone()));
                }
            }
            if solvable(s, claim, w) {
                return Err(AuditError::WitnessSolvable(w.clone()));
            }
            Ok(())
        }
    }
}

/// Evaluates `claim` with the search routines.
pub fn evaluate(s: &Space, claim: &Claim) -> Verdict {
    use crate::{gamma, operation, separation};
    match claim {
        Claim::RegularOp => operation::is_regular_operation(s),
        Claim::StrictlyRegularOp => operation::is_strictly_regular_operation(s),
        Claim::OpenOp => operation::is_open_operation(s),
        Claim::GammaT1 => separation::is_gamma_t1(s),
        Claim::GammaT2 => separation::is_gamma_t2(s),
        Claim::GsRegular(m) => separation::is_gammas_regular(s, *m),
        Claim::GsNormal(m) => separation::is_gammas_normal(s, *m),
        Claim::Shrinking(m) => separation::has_shrinking_property(s, *m),
        Claim::GammaClosed(a) => gamma::is_gamma_closed(s, *a, gamma::ClosedConvention::Closure),
        Claim::SingletonsGammaClosed => separation::singletons_gamma_closed(s),
        Claim::AllSubsetsGammaClosed => separation::all_subsets_gamma_closed(s),
        Claim::DisjointValues => separation::disjoint_opens_have_disjoint_values(s),
        Claim::PointSetSeparation(f) => separation::point_set_separation(s, *f),
        Claim::Gamma0Compact => gamma::is_gamma0_compact(s),
        Claim::FiniteIntersection(r, cap) => gamma::finite_intersection_characterization(s, *r, *cap),
    }
}
