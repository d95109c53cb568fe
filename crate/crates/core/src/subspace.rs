//! Operations induced on subspaces.
//!
//! A subspace open `G` is the trace `U ∩ Y` of possibly several ambient
//! opens. The two conventions differ in how the ambient values are pooled.

use crate::gamma::gamma_open_family;
use crate::space::Space;
use crate::subset::{SetFamily, SubSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub enum TraceConvention {
    /// Value of the largest ambient open with the given trace, cut to `Y`.
    #[default]
    MaxTrace,
    /// Intersection of the cut values of every ambient open with the trace.
    MinTrace,
}

impl TraceConvention {
    pub const ALL: [TraceConvention; 2] = [TraceConvention::MaxTrace, TraceConvention::MinTrace];

    pub fn label(self) -> &'static str {
        match self {
            TraceConvention::MaxTrace => "max",
            TraceConvention::MinTrace => "min",
        }
    }

    pub fn parse(s: &str) -> Option<TraceConvention> {
        match s {
            "max" | "max-trace" => Some(TraceConvention::MaxTrace),
            "min" | "min-trace" => Some(TraceConvention::MinTrace),
            _ => None,
        }
    }
}

/// The subspace on `y` with its induced operation. Points are reindexed
/// in ascending order of their ambient index; labels follow.
pub fn induced_operation(s: &Space, y: SubSet, conv: TraceConvention) -> Space {
    let t = s.topology();
    let sub = t.subspace(y);
    let entries: Vec<(SubSet, SubSet)> = sub
        .opens()
        .iter()
        .map(|&g| {
            let tracing = t.opens().iter().copied().filter(|u| u.compress(y) == g);
            let value = match conv {
                TraceConvention::MaxTrace => {
                    let top = tracing.fold(s.empty(), |acc, u| acc.union(u));
                    s.gamma(top)
                }
                TraceConvention::MinTrace => tracing.fold(s.full(), |acc, u| acc.intersection(s.gamma(u))),
            };
            (g, value.compress(y))
        })
        .collect();
    let label: Vec<&str> = y.points().map(|x| s.names()[x].as_str()).collect();
    let name = format!("{}@{}", s.name(), label.join(","));
    Space::from_table(name, sub, &entries).expect("induced operations are expansive")
}

/// Traces on `y` of the ambient γ-open sets, over the subspace's indices.
pub fn gamma_open_trace_family(s: &Space, y: SubSet) -> SetFamily {
    gamma_open_family(s).iter().map(|o| o.compress(y)).collect()
}
