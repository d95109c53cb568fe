//! Outcomes of predicates: either a certificate that discharges every
//! quantified configuration, or the first configuration that cannot be
//! discharged.

use std::fmt::Write as _;

use crate::subset::SubSet;

/// A quantified configuration a predicate must discharge.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Query {
    /// A single point.
    Point(usize),
    /// An ordered pair of distinct points.
    Points(usize, usize),
    /// A point with two of its open neighbourhoods.
    PointOpens { x: usize, u: SubSet, v: SubSet },
    /// A point lying outside a set.
    PointSet { x: usize, set: SubSet },
    /// A pair of sets (disjoint closed pair, or closed set with an open
    /// superset).
    Sets(SubSet, SubSet),
    /// An open set on its own.
    Open(SubSet),
    /// An open set together with a point of its operation value.
    OpenPoint { open: SubSet, x: usize },
    /// A family of sets (covers, intersection classes).
    Family(Vec<SubSet>),
    /// A configuration inside the subspace on `carrier`; `inner` uses the
    /// subspace's own indices.
    Subspace {
        carrier: SubSet,
        inner: Option<Box<Query>>,
    },
}

impl Query {
    /// Renders with point labels. `names` are the labels of the carrier
    /// the query lives on.
    pub fn render(&self, names: &[String]) -> String {
        let p = |x: usize| names.get(x).cloned().unwrap_or_else(|| x.to_string());
        match self {
            Query::Point(x) => format!("x={}", p(*x)),
            Query::Points(x, y) => format!("x={} y={}", p(*x), p(*y)),
            Query::PointOpens { x, u, v } => {
                format!("x={} U={} V={}", p(*x), u.render(names), v.render(names))
            }
            Query::PointSet { x, set } => format!("x={} A={}", p(*x), set.render(names)),
            Query::Sets(a, b) => format!("A={} B={}", a.render(names), b.render(names)),
            Query::Open(v) => format!("V={}", v.render(names)),
            Query::OpenPoint { open, x } => format!("V={} x={}", open.render(names), p(*x)),
            Query::Family(sets) => {
                let mut s = String::from("family={");
                for (i, a) in sets.iter().enumerate() {
                    if i > 0 {
                        s.push(' ');
                    }
                    s.push_str(&a.render(names));
                }
                s.push('}');
                s
            }
            Query::Subspace { carrier, inner } => {
                let mut s = format!("Y={}", carrier.render(names));
                if let Some(inner) = inner {
                    let sub: Vec<String> = carrier.points().map(p).collect();
                    let _ = write!(s, ": {}", inner.render(&sub));
                }
                s
            }
        }
    }
}

/// One discharged configuration and the sets that discharge it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discharge {
    pub query: Query,
    pub sets: Vec<SubSet>,
}

impl Discharge {
    pub fn new(query: Query, sets: Vec<SubSet>) -> Self {
        Discharge { query, sets }
    }
}

/// Result of evaluating a predicate on a space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds(Vec<Discharge>),
    Fails(Query),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds(_))
    }

    pub fn certificate(&self) -> Option<&[Discharge]> {
        match self {
            Verdict::Holds(c) => Some(c),
            Verdict::Fails(_) => None,
        }
    }

    pub fn witness(&self) -> Option<&Query> {
        match self {
            Verdict::Holds(_) => None,
            Verdict::Fails(w) => Some(w),
        }
    }

    /// Collects discharges until the first failure.
    pub(crate) fn collect<I>(items: I) -> Verdict
    where
        I: IntoIterator<Item = Result<Discharge, Query>>,
    {
        let mut out = Vec::new();
        for item in items {
            match item {
                Ok(d) => out.push(d),
                Err(q) => return Verdict::Fails(q),
            }
        }
        Verdict::Holds(out)
    }
}
