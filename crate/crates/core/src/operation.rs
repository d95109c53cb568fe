//! Operations on open sets: an expansive map `V ↦ V^γ` from each open set
//! of a topology to a superset, stored as an explicit table.
//!
//! Tables come either from an explicit listing or from a [`RuleExpr`]
//! evaluated with the classical closure and interior. The module also
//! carries the three operation-level predicates: regular, strictly regular,
//! and open.

use std::fmt;

use thiserror::Error;

use crate::gamma::gamma_open_family;
use crate::space::Space;
use crate::subset::{SetFamily, SubSet};
use crate::topology::Topology;
use crate::verdict::{Discharge, Query, Verdict};

/// Deepest allowed nesting of `if-contains`.
pub const MAX_RULE_DEPTH: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OperationError {
    #[error("no entry for open set {0:?}")]
    MissingEntry(SubSet),
    #[error("entry for {0:?}, which is not open")]
    ExtraEntry(SubSet),
    #[error("value for open set {0:?} does not contain it")]
    NotExpansive(SubSet),
    #[error("entry value {0:?} does not fit the carrier")]
    OutsideCarrier(SubSet),
    #[error("duplicate entry for {0:?}")]
    DuplicateEntry(SubSet),
    #[error("rule refers to point {point} on a carrier of {carrier} points")]
    UnknownPoint { point: usize, carrier: usize },
    #[error("conditional rules nest deeper than {MAX_RULE_DEPTH}")]
    TooDeep,
}

/// Rule describing an operation in terms of closure and interior.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RuleExpr {
    /// `V ↦ V`
    Identity,
    /// `V ↦ cl V`
    Closure,
    /// `V ↦ int cl V`
    IntClosure,
    /// `V ↦ cl int cl V`
    ClIntCl,
    /// Applies `then` when `point ∈ V`, `otherwise` when not.
    IfContains {
        point: usize,
        then: Box<RuleExpr>,
        otherwise: Box<RuleExpr>,
    },
    /// A fixed list of `(open, value)` pairs.
    Explicit(Vec<(SubSet, SubSet)>),
}

impl RuleExpr {
    pub fn if_contains(point: usize, then: RuleExpr, otherwise: RuleExpr) -> RuleExpr {
        RuleExpr::IfContains {
            point,
            then: Box::new(then),
            otherwise: Box::new(otherwise),
        }
    }

    /// Nesting depth of conditionals.
    pub fn depth(&self) -> usize {
        match self {
            RuleExpr::IfContains { then, otherwise, .. } => 1 + then.depth().max(otherwise.depth()),
            _ => 0,
        }
    }

    fn check(&self, n: usize) -> Result<(), OperationError> {
        if self.depth() > MAX_RULE_DEPTH {
            return Err(OperationError::TooDeep);
        }
        self.check_points(n)
    }

    fn check_points(&self, n: usize) -> Result<(), OperationError> {
        match self {
            RuleExpr::IfContains {
                point,
                then,
                otherwise,
            } => {
                if *point >= n {
                    return Err(OperationError::UnknownPoint {
                        point: *point,
                        carrier: n,
                    });
                }
                then.check_points(n)?;
                otherwise.check_points(n)
            }
            _ => Ok(()),
        }
    }

    /// Value of the rule at the open set `v`. Explicit leaves look `v` up
    /// and fall back to `v` itself when it is unlisted.
    pub fn eval(&self, t: &Topology, v: SubSet) -> SubSet {
        match self {
            RuleExpr::Identity => v,
            RuleExpr::Closure => t.closure(v),
            RuleExpr::IntClosure => t.interior(t.closure(v)),
            RuleExpr::ClIntCl => t.closure(t.interior(t.closure(v))),
            RuleExpr::IfContains {
                point,
                then,
                otherwise,
            } => {
                if v.contains(*point) {
                    then.eval(t, v)
                } else {
                    otherwise.eval(t, v)
                }
            }
            RuleExpr::Explicit(entries) => entries
                .iter()
                .find(|(k, _)| *k == v)
                .map(|(_, val)| *val)
                .unwrap_or(v),
        }
    }

    /// Renders in the space-file rule syntax, with point labels.
    pub fn render(&self, names: &[String]) -> String {
        match self {
            RuleExpr::Identity => "identity".into(),
            RuleExpr::Closure => "closure".into(),
            RuleExpr::IntClosure => "intclosure".into(),
            RuleExpr::ClIntCl => "clintcl".into(),
            RuleExpr::IfContains {
                point,
                then,
                otherwise,
            } => format!(
                "if-contains {} then {} else {}",
                names.get(*point).cloned().unwrap_or_else(|| point.to_string()),
                then.render(names),
                otherwise.render(names)
            ),
            RuleExpr::Explicit(entries) => {
                let parts: Vec<String> = entries
                    .iter()
                    .map(|(k, v)| format!("{}={}", k.render(names), v.render(names)))
                    .collect();
                format!("table[{}]", parts.join(" "))
            }
        }
    }
}

impl fmt::Display for RuleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..crate::subset::MAX_POINTS).map(|i| i.to_string()).collect();
        f.write_str(&self.render(&names))
    }
}

/// An expansive table over the opens of one topology. `values[i]` is the
/// value at `domain[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OperationTable {
    domain: SetFamily,
    values: Vec<SubSet>,
}

impl OperationTable {
    /// Value `V^γ` at an open set. Panics when `v` is not open in the host
    /// topology; the operation is defined on opens only.
    pub fn apply(&self, v: SubSet) -> SubSet {
        match self.domain.position(v) {
            Some(i) => self.values[i],
            None => panic!("operation evaluated at non-open set {v:?}"),
        }
    }

    pub fn get(&self, v: SubSet) -> Option<SubSet> {
        self.domain.position(v).map(|i| self.values[i])
    }

    pub fn domain(&self) -> &SetFamily {
        &self.domain
    }

    pub fn values(&self) -> &[SubSet] {
        &self.values
    }

    /// `(open, value)` pairs in canonical order of the opens.
    pub fn entries(&self) -> impl Iterator<Item = (SubSet, SubSet)> + '_ {
        self.domain.iter().copied().zip(self.values.iter().copied())
    }

    pub fn is_expansive(&self) -> bool {
        self.entries().all(|(v, g)| v.is_subset(g))
    }
}

/// Evaluates `rule` at every open set of `t`.
pub fn build_operation(t: &Topology, rule: &RuleExpr) -> Result<OperationTable, OperationError> {
    if let RuleExpr::Explicit(entries) = rule {
        return validate_operation(t, entries);
    }
    rule.check(t.carrier())?;
    let values: Vec<SubSet> = t.opens().iter().map(|&v| rule.eval(t, v)).collect();
    if let Some((v, _)) = t.opens().iter().zip(&values).find(|(v, g)| !v.is_subset(**g)) {
        return Err(OperationError::NotExpansive(*v));
    }
    Ok(OperationTable {
        domain: t.opens().clone(),
        values,
    })
}

/// Accepts an explicit table iff its keys are exactly the opens of `t` and
/// every value contains its key.
pub fn validate_operation(
    t: &Topology,
    entries: &[(SubSet, SubSet)],
) -> Result<OperationTable, OperationError> {
    let n = t.carrier();
    let mut values: Vec<Option<SubSet>> = vec![None; t.opens().len()];
    for &(k, v) in entries {
        if v.carrier() != n {
            return Err(OperationError::OutsideCarrier(v));
        }
        match t.opens().position(k) {
            Some(i) => {
                if values[i].is_some() {
                    return Err(OperationError::DuplicateEntry(k));
                }
                values[i] = Some(v);
            }
            None => return Err(OperationError::ExtraEntry(k)),
        }
    }
    let mut out = Vec::with_capacity(values.len());
    for (&open, value) in t.opens().iter().zip(values) {
        let value = value.ok_or(OperationError::MissingEntry(open))?;
        if !open.is_subset(value) {
            return Err(OperationError::NotExpansive(open));
        }
        out.push(value);
    }
    Ok(OperationTable {
        domain: t.opens().clone(),
        values: out,
    })
}

fn regularity(s: &Space, strict: bool) -> Verdict {
    let t = s.topology();
    let n = t.carrier();
    let items = (0..n).flat_map(|x| {
        let nbhds: Vec<SubSet> = t.neighbourhoods(x).collect();
        let pairs: Vec<(SubSet, SubSet)> = nbhds
            .iter()
            .enumerate()
            .flat_map(|(i, &u)| nbhds[i..].iter().map(move |&v| (u, v)))
            .collect();
        pairs.into_iter().map(move |(u, v)| {
            let meet = s.gamma(u).intersection(s.gamma(v));
            let found = t.neighbourhoods(x).find(|&w| {
                let gw = s.gamma(w);
                if strict {
                    gw == meet
                } else {
                    gw.is_subset(meet)
                }
            });
            let query = Query::PointOpens { x, u, v };
            match found {
                Some(w) => Ok(Discharge::new(query, vec![w])),
                None => Err(query),
            }
        })
    });
    Verdict::collect(items)
}

/// For every point and every pair of its open neighbourhoods `U, V` there
/// is a neighbourhood `W` with `W^γ ⊆ U^γ ∩ V^γ`.
pub fn is_regular_operation(s: &Space) -> Verdict {
    regularity(s, false)
}

/// As [`is_regular_operation`] with `W^γ = U^γ ∩ V^γ` exactly.
pub fn is_strictly_regular_operation(s: &Space) -> Verdict {
    regularity(s, true)
}

/// Every value `V^γ` is γ-open. The certificate gives, for each value and
/// each of its points, an open `N ∋ x` with `N^γ ⊆ V^γ`.
pub fn is_open_operation(s: &Space) -> Verdict {
    let t = s.topology();
    let family = gamma_open_family(s);
    let items = t.opens().iter().flat_map(|&v| {
        let gv = s.gamma(v);
        let ok = family.contains(gv);
        let mut out: Vec<Result<Discharge, Query>> = Vec::new();
        if !ok {
            out.push(Err(Query::Open(v)));
            return out;
        }
        for x in gv.points() {
            let n = t
                .neighbourhoods(x)
                .find(|&nb| s.gamma(nb).is_subset(gv))
                .expect("γ-open value has a witnessing neighbourhood at each point");
            out.push(Ok(Discharge::new(Query::OpenPoint { open: v, x }, vec![n])));
        }
        out
    });
    Verdict::collect(items)
}
