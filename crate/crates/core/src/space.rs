use thiserror::Error;

use crate::operation::{build_operation, validate_operation, OperationError, OperationTable, RuleExpr};
use crate::subset::SubSet;
use crate::topology::{Topology, TopologyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpaceError {
    #[error(transparent)]
    Topology(#[from] TopologyError),
    #[error(transparent)]
    Operation(#[from] OperationError),
    #[error("operation table is defined over a different topology")]
    ForeignTable,
}

/// A topology together with an operation on its opens.
///
/// `rule` records how the table was produced, when it came from a rule;
/// explicit tables and induced subspace operations carry `None`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Space {
    name: String,
    topology: Topology,
    gamma: OperationTable,
    rule: Option<RuleExpr>,
}

impl Space {
    pub fn new(name: impl Into<String>, topology: Topology, gamma: OperationTable) -> Result<Space, SpaceError> {
        if gamma.domain() != topology.opens() {
            return Err(SpaceError::ForeignTable);
        }
        if !gamma.is_expansive() {
            let bad = gamma.entries().find(|(v, g)| !v.is_subset(*g)).unwrap().0;
            return Err(OperationError::NotExpansive(bad).into());
        }
        Ok(Space {
            name: name.into(),
            topology,
            gamma,
            rule: None,
        })
    }

    pub fn from_rule(name: impl Into<String>, topology: Topology, rule: RuleExpr) -> Result<Space, SpaceError> {
        let gamma = build_operation(&topology, &rule)?;
        let rule = match rule {
            RuleExpr::Explicit(_) => None,
            r => Some(r),
        };
        Ok(Space {
            name: name.into(),
            topology,
            gamma,
            rule,
        })
    }

    pub fn from_table(
        name: impl Into<String>,
        topology: Topology,
        entries: &[(SubSet, SubSet)],
    ) -> Result<Space, SpaceError> {
        let gamma = validate_operation(&topology, entries)?;
        Space::new(name, topology, gamma)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn topology(&self) -> &Topology {
        &self.topology
    }

    pub fn operation(&self) -> &OperationTable {
        &self.gamma
    }

    pub fn rule(&self) -> Option<&RuleExpr> {
        self.rule.as_ref()
    }

    pub fn names(&self) -> &[String] {
        self.topology.names()
    }

    #[inline]
    pub fn carrier(&self) -> usize {
        self.topology.carrier()
    }

    /// `V^γ` for an open `V`.
    #[inline]
    pub fn gamma(&self, v: SubSet) -> SubSet {
        self.gamma.apply(v)
    }

    pub fn full(&self) -> SubSet {
        self.topology.full()
    }

    pub fn empty(&self) -> SubSet {
        self.topology.empty()
    }

    /// One-line description: open family and rule (or explicit table).
    pub fn describe(&self) -> String {
        let names = self.names();
        let op = match &self.rule {
            Some(r) => r.render(names),
            None => {
                let parts: Vec<String> = self
                    .gamma
                    .entries()
                    .map(|(k, v)| format!("{}->{}", k.render(names), v.render(names)))
                    .collect();
                format!("table[{}]", parts.join(" "))
            }
        };
        format!("tau={} gamma={}", self.topology.render(), op)
    }
}
