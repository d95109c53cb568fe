use std::fmt;

use crate::audit::{self, AuditError, Claim};
use crate::gamma::{gamma_open_family, IntersectionReading, DEFAULT_CLASS_CAP};
use crate::separation::{ClosedMode, SeparationForm};
use crate::space::Space;
use crate::subset::SubSet;
use crate::subspace::{gamma_open_trace_family, induced_operation, TraceConvention};
use crate::verdict::{Discharge, Query, Verdict};

/// A named property of a space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Atom {
    RegularOp,
    StrictlyRegularOp,
    OpenOp,
    GammaT1,
    GammaT2,
    Gamma0Compact,
    FiniteIntersection(IntersectionReading),
    GsRegular(ClosedMode),
    GsNormal(ClosedMode),
    Shrinking(ClosedMode),
    SingletonsGammaClosed,
    AllSubsetsGammaClosed,
    DisjointValues,
    PointSetSeparation(SeparationForm),
    /// Every subspace is γˢ-regular under the induced operation.
    HereditaryGsRegular(ClosedMode, TraceConvention),
    /// Every τ-closed subspace is γˢ-normal under the induced operation.
    ClosedHereditaryGsNormal(ClosedMode, TraceConvention),
    /// On every subspace the traces of ambient γ-open sets are exactly the
    /// γ-open sets of the induced operation.
    TraceFamilyAgrees(TraceConvention),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AtomParseError {
    #[error("unknown property `{0}`")]
    Unknown(String),
    #[error("bad argument `{arg}` for `{name}`")]
    BadArgument { name: String, arg: String },
}

impl Atom {
    /// Parses `name` or `name(arg, ...)`. Missing closed-mode and trace
    /// arguments take the supplied defaults.
    pub fn parse(text: &str, mode: ClosedMode, conv: TraceConvention) -> Result<Atom, AtomParseError> {
        let text = text.trim();
        let (name, args) = match text.find('(') {
            Some(i) if text.ends_with(')') => {
                let args: Vec<&str> = text[i + 1..text.len() - 1].split(',').map(str::trim).collect();
                (text[..i].trim(), args)
            }
            _ => (text, Vec::new()),
        };
        let bad = |arg: &str| AtomParseError::BadArgument {
            name: name.to_string(),
            arg: arg.to_string(),
        };
        let mut mode_arg = mode;
        let mut conv_arg = conv;
        let mut form = SeparationForm::OnValues;
        let mut reading = IntersectionReading::Clopen;
        for arg in args.iter().filter(|a| !a.is_empty()) {
            if let Some(m) = ClosedMode::parse(arg) {
                mode_arg = m;
            } else if let Some(c) = TraceConvention::parse(arg) {
                conv_arg = c;
            } else if *arg == "values" {
                form = SeparationForm::OnValues;
            } else if *arg == "opens" {
                form = SeparationForm::OnOpens;
            } else if *arg == "clopen" {
                reading = IntersectionReading::Clopen;
            } else if *arg == "mixed" {
                reading = IntersectionReading::Mixed;
            } else {
                return Err(bad(arg));
            }
        }
        let atom = match name {
            "regular-op" => Atom::RegularOp,
            "strictly-regular-op" => Atom::StrictlyRegularOp,
            "open-op" => Atom::OpenOp,
            "gamma-t1" => Atom::GammaT1,
            "gamma-t2" => Atom::GammaT2,
            "gamma0-compact" => Atom::Gamma0Compact,
            "finite-intersection" => Atom::FiniteIntersection(reading),
            "gs-regular" => Atom::GsRegular(mode_arg),
            "gs-normal" => Atom::GsNormal(mode_arg),
            "shrinking" => Atom::Shrinking(mode_arg),
            "singletons-gamma-closed" => Atom::SingletonsGammaClosed,
            "all-subsets-gamma-closed" => Atom::AllSubsetsGammaClosed,
            "disjoint-values" => Atom::DisjointValues,
            "point-set-separation" => Atom::PointSetSeparation(form),
            "hereditary-gs-regular" => Atom::HereditaryGsRegular(mode_arg, conv_arg),
            "closed-hereditary-gs-normal" => Atom::ClosedHereditaryGsNormal(mode_arg, conv_arg),
            "trace-family-agrees" => Atom::TraceFamilyAgrees(conv_arg),
            _ => return Err(AtomParseError::Unknown(name.to_string())),
        };
        Ok(atom)
    }

    /// Atoms shown by a plain `check`, for the given mode and convention.
    pub fn summary(mode: ClosedMode, conv: TraceConvention) -> Vec<Atom> {
        vec![
            Atom::RegularOp,
            Atom::StrictlyRegularOp,
            Atom::OpenOp,
            Atom::GammaT1,
            Atom::GammaT2,
            Atom::Gamma0Compact,
            Atom::FiniteIntersection(IntersectionReading::Clopen),
            Atom::GsRegular(mode),
            Atom::GsNormal(mode),
            Atom::Shrinking(mode),
            Atom::SingletonsGammaClosed,
            Atom::AllSubsetsGammaClosed,
            Atom::DisjointValues,
            Atom::PointSetSeparation(SeparationForm::OnValues),
            Atom::PointSetSeparation(SeparationForm::OnOpens),
            Atom::HereditaryGsRegular(mode, conv),
            Atom::ClosedHereditaryGsNormal(mode, conv),
            Atom::TraceFamilyAgrees(conv),
        ]
    }

    /// The audit claim behind a non-subspace atom.
    pub fn claim(self) -> Option<Claim> {
        Some(match self {
            Atom::RegularOp => Claim::RegularOp,
            Atom::StrictlyRegularOp => Claim::StrictlyRegularOp,
            Atom::OpenOp => Claim::OpenOp,
            Atom::GammaT1 => Claim::GammaT1,
            Atom::GammaT2 => Claim::GammaT2,
            Atom::Gamma0Compact => Claim::Gamma0Compact,
            Atom::FiniteIntersection(r) => Claim::FiniteIntersection(r, DEFAULT_CLASS_CAP),
            Atom::GsRegular(m) => Claim::GsRegular(m),
            Atom::GsNormal(m) => Claim::GsNormal(m),
            Atom::Shrinking(m) => Claim::Shrinking(m),
            Atom::SingletonsGammaClosed => Claim::SingletonsGammaClosed,
            Atom::AllSubsetsGammaClosed => Claim::AllSubsetsGammaClosed,
            Atom::DisjointValues => Claim::DisjointValues,
            Atom::PointSetSeparation(f) => Claim::PointSetSeparation(f),
            Atom::HereditaryGsRegular(..) | Atom::ClosedHereditaryGsNormal(..) | Atom::TraceFamilyAgrees(_) => {
                return None
            }
        })
    }

    /// Subspaces a subspace atom ranges over.
    fn subspaces(self, s: &Space) -> Vec<SubSet> {
        match self {
            Atom::ClosedHereditaryGsNormal(..) => s.topology().closed_sets().into_vec(),
            _ => SubSet::all(s.carrier()).collect(),
        }
    }

    pub fn evaluate(self, s: &Space) -> Verdict {
        if let Some(claim) = self.claim() {
            return audit::evaluate(s, &claim);
        }
        let inner_atom = match self {
            Atom::HereditaryGsRegular(m, _) => Some(Atom::GsRegular(m)),
            Atom::ClosedHereditaryGsNormal(m, _) => Some(Atom::GsNormal(m)),
            _ => None,
        };
        let conv = match self {
            Atom::HereditaryGsRegular(_, c) | Atom::ClosedHereditaryGsNormal(_, c) | Atom::TraceFamilyAgrees(c) => c,
            _ => unreachable!(),
        };
        let mut cert = Vec::new();
        for y in self.subspaces(s) {
            let sub = induced_operation(s, y, conv);
            let ok = match inner_atom {
                Some(inner) => match inner.evaluate(&sub) {
                    Verdict::Holds(_) => true,
                    Verdict::Fails(w) => {
                        return Verdict::Fails(Query::Subspace {
                            carrier: y,
                            inner: Some(Box::new(w)),
                        })
                    }
                },
                None => &gamma_open_trace_family(s, y) == gamma_open_family(&sub).family(),
            };
            let q = Query::Subspace { carrier: y, inner: None };
            if !ok {
                return Verdict::Fails(q);
            }
            cert.push(Discharge::new(q, vec![]));
        }
        Verdict::Holds(cert)
    }

    /// Re-checks a verdict of this atom against the raw definitions.
    /// Subspace atoms rebuild each induced space and audit the inner
    /// verdict there.
    pub fn revalidate(self, s: &Space, verdict: &Verdict) -> Result<(), AuditError> {
        if let Some(claim) = self.claim() {
            return audit::revalidate(s, &claim, verdict);
        }
        let (inner, conv) = match self {
            Atom::HereditaryGsRegular(m, c) => (Some(Atom::GsRegular(m)), c),
            Atom::ClosedHereditaryGsNormal(m, c) => (Some(Atom::GsNormal(m)), c),
            Atom::TraceFamilyAgrees(c) => (None, c),
            _ => unreachable!(),
        };
        let scope = self.subspaces(s);
        match verdict {
            Verdict::Holds(cert) => {
                for &y in &scope {
                    let q = Query::Subspace { carrier: y, inner: None };
                    if !cert.iter().any(|d| d.query == q) {
                        return Err(AuditError::MissingConfiguration(q));
                    }
                    let sub = induced_operation(s, y, conv);
                    match inner {
                        Some(atom) => {
                            let v = atom.evaluate(&sub);
                            if !v.holds() {
                                return Err(AuditError::BadDischarge(q));
                            }
                            atom.revalidate(&sub, &v)?;
                        }
                        None => {
                            if &gamma_open_trace_family(s, y) != gamma_open_family(&sub).family() {
                                return Err(AuditError::BadDischarge(q));
                            }
                        }
                    }
                }
                Ok(())
            }
            Verdict::Fails(w) => {
                let Query::Subspace { carrier, inner: iw } = w else {
                    return Err(AuditError::WitnessNotAConfiguration(w.clone()));
                };
                if !scope.contains(carrier) {
                    return Err(AuditError::WitnessNotAConfiguration(w.clone()));
                }
                let sub = induced_operation(s, *carrier, conv);
                match (inner, iw) {
                    (Some(atom), Some(iw)) => atom
                        .revalidate(&sub, &Verdict::Fails((**iw).clone()))
                        .map_err(|_| AuditError::WitnessSolvable(w.clone())),
                    (None, None) => {
                        if &gamma_open_trace_family(s, *carrier) == gamma_open_family(&sub).family() {
                            Err(AuditError::WitnessSolvable(w.clone()))
                        } else {
                            Ok(())
                        }
                    }
                    _ => Err(AuditError::WitnessNotAConfiguration(w.clone())),
                }
            }
        }
    }

    /// Cites the γ₀-compactness hypothesis, which every finite space meets.
    pub fn is_automatic(self) -> bool {
        matches!(self, Atom::Gamma0Compact | Atom::FiniteIntersection(_))
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::RegularOp => write!(f, "regular-op"),
            Atom::StrictlyRegularOp => write!(f, "strictly-regular-op"),
            Atom::OpenOp => write!(f, "open-op"),
            Atom::GammaT1 => write!(f, "gamma-t1"),
            Atom::GammaT2 => write!(f, "gamma-t2"),
            Atom::Gamma0Compact => write!(f, "gamma0-compact"),
            Atom::FiniteIntersection(IntersectionReading::Clopen) => write!(f, "finite-intersection(clopen)"),
            Atom::FiniteIntersection(IntersectionReading::Mixed) => write!(f, "finite-intersection(mixed)"),
            Atom::GsRegular(m) => write!(f, "gs-regular({})", m.label()),
            Atom::GsNormal(m) => write!(f, "gs-normal({})", m.label()),
            Atom::Shrinking(m) => write!(f, "shrinking({})", m.label()),
            Atom::SingletonsGammaClosed => write!(f, "singletons-gamma-closed"),
            Atom::AllSubsetsGammaClosed => write!(f, "all-subsets-gamma-closed"),
            Atom::DisjointValues => write!(f, "disjoint-values"),
            Atom::PointSetSeparation(SeparationForm::OnValues) => write!(f, "point-set-separation(values)"),
            Atom::PointSetSeparation(SeparationForm::OnOpens) => write!(f, "point-set-separation(opens)"),
            Atom::HereditaryGsRegular(m, c) => write!(f, "hereditary-gs-regular({},{})", m.label(), c.label()),
            Atom::ClosedHereditaryGsNormal(m, c) => {
                write!(f, "closed-hereditary-gs-normal({},{})", m.label(), c.label())
            }
            Atom::TraceFamilyAgrees(c) => write!(f, "trace-family-agrees({})", c.label()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    #[test]
    fn parse_display_round_trip() {
        for atom in Atom::summary(ClosedMode::Gamma, TraceConvention::MinTrace) {
            let text = atom.to_string();
            assert_eq!(Atom::parse(&text, ClosedMode::Tau, TraceConvention::MaxTrace), Ok(atom));
        }
    }

    #[test]
    fn defaults_fill_missing_arguments() {
        assert_eq!(
            Atom::parse("gs-normal", ClosedMode::Gamma, TraceConvention::MaxTrace),
            Ok(Atom::GsNormal(ClosedMode::Gamma))
        );
        assert_eq!(
            Atom::parse("hereditary-gs-regular(gamma)", ClosedMode::Tau, TraceConvention::MinTrace),
            Ok(Atom::HereditaryGsRegular(ClosedMode::Gamma, TraceConvention::MinTrace))
        );
        assert!(matches!(
            Atom::parse("gs-normal(sideways)", ClosedMode::Tau, TraceConvention::MaxTrace),
            Err(AtomParseError::BadArgument { .. })
        ));
        assert!(matches!(
            Atom::parse("t3", ClosedMode::Tau, TraceConvention::MaxTrace),
            Err(AtomParseError::Unknown(_))
        ));
    }

    #[test]
    fn subspace_atoms_revalidate() {
        for s in [samples::example1(), samples::regular_example(), samples::normal_example()] {
            for atom in Atom::summary(ClosedMode::Tau, TraceConvention::MaxTrace)
                .into_iter()
                .chain(Atom::summary(ClosedMode::Gamma, TraceConvention::MinTrace))
            {
                let v = atom.evaluate(&s);
                atom.revalidate(&s, &v)
                    .unwrap_or_else(|e| panic!("{} {atom}: {e}", s.name()));
            }
        }
    }
}
