use std::fmt;

use crate::enumerate::{enumerate_topologies_capped, DEFAULT_ENUMERATION_CAP, MAX_ENUMERATION_CAP};
use crate::operation::RuleExpr;
use crate::space::Space;
use crate::subset::SubSet;
use crate::topology::Topology;

use super::LabError;

/// Largest carrier for which every expansive table is scanned.
pub const ALL_TABLES_MAX_POINTS: usize = 2;

/// Where the operations of a scan come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OpSource {
    /// The rule catalog, see [`catalog`].
    Catalog,
    /// Every expansive table.
    AllTables,
}

impl OpSource {
    pub fn label(self) -> &'static str {
        match self {
            OpSource::Catalog => "catalog",
            OpSource::AllTables => "all",
        }
    }
}

/// Carriers `1..=max_points`, every topology on each, every operation from
/// `ops`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Scope {
    pub max_points: usize,
    pub ops: OpSource,
    /// Largest carrier the enumerator may be asked for.
    pub cap: usize,
}

impl Scope {
    pub fn new(max_points: usize, ops: OpSource) -> Scope {
        Scope {
            max_points,
            ops,
            cap: DEFAULT_ENUMERATION_CAP,
        }
    }

    /// Lifts the enumeration cap to its hard ceiling.
    pub fn extended(mut self) -> Scope {
        self.cap = MAX_ENUMERATION_CAP;
        self
    }

    pub fn validate(&self) -> Result<(), LabError> {
        if self.max_points == 0 {
            return Err(LabError::EmptyScope);
        }
        if self.max_points > self.cap.min(MAX_ENUMERATION_CAP) {
            return Err(LabError::ScopeTooLarge {
                points: self.max_points,
                limit: self.cap.min(MAX_ENUMERATION_CAP),
                ops: self.ops,
            });
        }
        if self.ops == OpSource::AllTables && self.max_points > ALL_TABLES_MAX_POINTS {
            return Err(LabError::ScopeTooLarge {
                points: self.max_points,
                limit: ALL_TABLES_MAX_POINTS,
                ops: self.ops,
            });
        }
        Ok(())
    }

    /// Every topology in scope, as `(carrier, index within carrier, topology)`,
    /// in canonical order.
    pub fn topologies(&self) -> Result<Vec<(usize, usize, Topology)>, LabError> {
        self.validate()?;
        let mut out = Vec::new();
        for n in 1..=self.max_points {
            let ts = enumerate_topologies_capped(n, self.cap)?;
            out.extend(ts.into_iter().enumerate().map(|(i, t)| (n, i, t)));
        }
        Ok(out)
    }

    /// Spaces over one topology, in canonical order.
    pub fn spaces_over(&self, n: usize, index: usize, t: &Topology) -> Vec<Space> {
        match self.ops {
            OpSource::Catalog => catalog(n)
                .into_iter()
                .enumerate()
                .map(|(r, rule)| {
                    Space::from_rule(format!("n{n}-t{index}-r{r}"), t.clone(), rule)
                        .expect("catalog rules are expansive")
                })
                .collect(),
            OpSource::AllTables => all_tables(t)
                .into_iter()
                .enumerate()
                .map(|(r, entries)| {
                    Space::from_table(format!("n{n}-t{index}-g{r}"), t.clone(), &entries)
                        .expect("enumerated tables are expansive")
                })
                .collect(),
        }
    }

    /// Every space in scope.
    pub fn spaces(&self) -> Result<Vec<Space>, LabError> {
        Ok(self
            .topologies()?
            .iter()
            .flat_map(|(n, i, t)| self.spaces_over(*n, *i, t))
            .collect())
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n<={} {}", self.max_points, self.ops.label())
    }
}

/// The four rule leaves.
pub fn leaves() -> [RuleExpr; 4] {
    [
        RuleExpr::Identity,
        RuleExpr::Closure,
        RuleExpr::IntClosure,
        RuleExpr::ClIntCl,
    ]
}

/// The leaves, then `if-contains(p, r1, r2)` for every point `p` and every
/// ordered pair of distinct leaves.
pub fn catalog(n: usize) -> Vec<RuleExpr> {
    let mut out: Vec<RuleExpr> = leaves().to_vec();
    for p in 0..n {
        for then in leaves() {
            for otherwise in leaves() {
                if then != otherwise {
                    out.push(RuleExpr::if_contains(p, then.clone(), otherwise));
                }
            }
        }
    }
    out
}

/// Every expansive table over `t`, opens varied in canonical order with the
/// last open varying fastest.
pub fn all_tables(t: &Topology) -> Vec<Vec<(SubSet, SubSet)>> {
    let mut tables: Vec<Vec<(SubSet, SubSet)>> = vec![Vec::new()];
    for &v in t.opens() {
        let choices: Vec<SubSet> = v
            .complement()
            .subsets()
            .map(|extra| v.union(extra))
            .collect();
        tables = tables
            .into_iter()
            .flat_map(|prefix| {
                choices.iter().map(move |&c| {
                    let mut row = prefix.clone();
                    row.push((v, c));
                    row
                })
            })
            .collect();
    }
    tables
}
