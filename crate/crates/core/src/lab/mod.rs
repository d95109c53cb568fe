//! Extensional checking of implications between space properties.
//!
//! A scan walks every space in a [`Scope`], skips those whose hypotheses
//! fail, evaluates the conclusion on the rest, and keeps the first
//! counterexample in canonical order. Work is split by topology across a
//! rayon pool; results are merged in enumeration order, so the report does
//! not depend on the worker count.

mod atom;
mod examples;
mod scope;

use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use thiserror::Error;

pub use atom::{Atom, AtomParseError};
pub use examples::{run_paper_examples, ClaimStatus, ExampleClaim, ExampleReport};
pub use scope::{all_tables, catalog, leaves, OpSource, Scope, ALL_TABLES_MAX_POINTS};

use crate::audit::AuditError;
use crate::enumerate::EnumerationError;
use crate::separation::{ClosedMode, SeparationForm};
use crate::space::Space;
use crate::subspace::TraceConvention;
use crate::verdict::{Query, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabError {
    #[error("scope of {points} points with `{}` operations exceeds the limit of {limit}", ops.label())]
    ScopeTooLarge { points: usize, limit: usize, ops: OpSource },
    #[error("scope must include at least one point")]
    EmptyScope,
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error("implication `{0}` must have the form `a & b => c`")]
    MalformedImplication(String),
    #[error(transparent)]
    Atom(#[from] AtomParseError),
    #[error("could not build worker pool: {0}")]
    Pool(String),
}

/// `hypotheses ⇒ conclusion`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Implication {
    pub hypotheses: Vec<Atom>,
    pub conclusion: Atom,
}

/// Outcome of an implication on one space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Skipped,
    Holds,
    Fails(Query),
}

impl Implication {
    pub fn new(hypotheses: Vec<Atom>, conclusion: Atom) -> Implication {
        Implication { hypotheses, conclusion }
    }

    /// Parses `a & b => c`. An empty left side means no hypotheses.
    pub fn parse(text: &str, mode: ClosedMode, conv: TraceConvention) -> Result<Implication, LabError> {
        let malformed = || LabError::MalformedImplication(text.to_string());
        let mut parts = text.split("=>");
        let (lhs, rhs) = match (parts.next(), parts.next(), parts.next()) {
            (Some(l), Some(r), None) => (l, r),
            _ => return Err(malformed()),
        };
        let hypotheses = if lhs.trim().is_empty() {
            Vec::new()
        } else {
            lhs.split('&')
                .map(|a| {
                    if a.trim().is_empty() {
                        Err(malformed())
                    } else {
                        Atom::parse(a, mode, conv).map_err(LabError::from)
                    }
                })
                .collect::<Result<_, _>>()?
        };
        if rhs.trim().is_empty() || rhs.contains('&') {
            return Err(malformed());
        }
        Ok(Implication::new(hypotheses, Atom::parse(rhs, mode, conv)?))
    }

    pub fn evaluate(&self, s: &Space) -> Outcome {
        if !self.hypotheses.iter().all(|h| h.evaluate(s).holds()) {
            return Outcome::Skipped;
        }
        match self.conclusion.evaluate(s) {
            Verdict::Holds(_) => Outcome::Holds,
            Verdict::Fails(w) => Outcome::Fails(w),
        }
    }

    fn cites_automatic(&self) -> bool {
        self.hypotheses.iter().any(|h| h.is_automatic())
    }
}

impl fmt::Display for Implication {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let hyps: Vec<String> = self.hypotheses.iter().map(|h| h.to_string()).collect();
        if hyps.is_empty() {
            write!(f, "=> {}", self.conclusion)
        } else {
            write!(f, "{} => {}", hyps.join(" & "), self.conclusion)
        }
    }
}

/// A counterexample: the space and the conclusion's witness on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub space: Space,
    pub witness: Query,
}

impl Counterexample {
    pub fn render(&self) -> String {
        format!("{} :: {}", self.space.describe(), self.witness.render(self.space.names()))
    }
}

/// One implication scanned over one scope.
#[derive(Clone, Debug)]
pub struct LabRow {
    pub name: String,
    pub implication: Implication,
    pub scope: Scope,
    pub scanned: usize,
    pub skipped: usize,
    pub total: usize,
    pub counterexample: Option<Counterexample>,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RevalidationError {
    #[error("hypothesis {0} does not hold on the counterexample")]
    HypothesisFails(Atom),
    #[error("conclusion holds on the counterexample")]
    ConclusionHolds,
    #[error("conclusion fails with a different witness: {0:?}")]
    DifferentWitness(Query),
    #[error("audit of {atom} failed: {source}")]
    Audit { atom: Atom, source: AuditError },
}

impl LabRow {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }

    /// Re-evaluates the counterexample in isolation: hypotheses must hold,
    /// the conclusion must fail with the recorded witness, and every verdict
    /// involved must pass the raw-definition audit.
    pub fn revalidate_on(&self, space: &Space, witness: &Query) -> Result<(), RevalidationError> {
        let imp = &self.implication;
        for &h in &imp.hypotheses {
            let v = h.evaluate(space);
            if !v.holds() {
                return Err(RevalidationError::HypothesisFails(h));
            }
            h.revalidate(space, &v)
                .map_err(|source| RevalidationError::Audit { atom: h, source })?;
        }
        let v = imp.conclusion.evaluate(space);
        match &v {
            Verdict::Holds(_) => Err(RevalidationError::ConclusionHolds),
            Verdict::Fails(w) if w != witness => Err(RevalidationError::DifferentWitness(w.clone())),
            Verdict::Fails(_) => imp
                .conclusion
                .revalidate(space, &v)
                .map_err(|source| RevalidationError::Audit {
                    atom: imp.conclusion,
                    source,
                }),
        }
    }

    fn instances(&self) -> String {
        format!("scanned={} skipped={} total={}", self.scanned, self.skipped, self.total)
    }

    fn scope_label(&self) -> String {
        if self.implication.cites_automatic() {
            format!("{} gamma0-compact:automatic", self.scope)
        } else {
            self.scope.to_string()
        }
    }
}

/// Rows of a lab run.
#[derive(Clone, Debug, Default)]
pub struct LabReport {
    pub rows: Vec<LabRow>,
}

impl LabReport {
    pub fn counterexamples(&self) -> usize {
        self.rows.iter().filter(|r| !r.holds()).count()
    }

    pub fn extend(&mut self, other: LabReport) {
        self.rows.extend(other.rows);
    }

    /// Plain-text table. With `timings = false` the elapsed column shows
    /// `-`, which makes the output byte-stable.
    pub fn render(&self, timings: bool) -> String {
        let header = ["name", "scope", "instances", "verdict", "witness", "elapsed"];
        let cells: Vec<[String; 6]> = self
            .rows
            .iter()
            .map(|r| {
                let (verdict, witness) = match &r.counterexample {
                    None => ("no-counterexample".to_string(), "-".to_string()),
                    Some(c) => ("COUNTEREXAMPLE".to_string(), c.render()),
                };
                let elapsed = if timings {
                    format!("{}ms", r.elapsed.as_millis())
                } else {
                    "-".to_string()
                };
                [r.name.clone(), r.scope_label(), r.instances(), verdict, witness, elapsed]
            })
            .collect();
        let mut widths = [0usize; 4];
        for (i, w) in widths.iter_mut().enumerate() {
            *w = cells
                .iter()
                .map(|c| c[i].chars().count())
                .chain([header[i].len()])
                .max()
                .unwrap_or(0);
        }
        let line = |c: [&str; 6]| {
            format!(
                "{:<w0$} | {:<w1$} | {:<w2$} | {:<w3$} | {} | {}\n",
                c[0],
                c[1],
                c[2],
                c[3],
                c[4],
                c[5],
                w0 = widths[0],
                w1 = widths[1],
                w2 = widths[2],
                w3 = widths[3]
            )
        };
        let mut out = line(header);
        for c in &cells {
            out.push_str(&line([&c[0], &c[1], &c[2], &c[3], &c[4], &c[5]]));
        }
        out
    }
}

/// Runs `f` on a pool of `jobs` workers, or on the global pool.
pub fn with_workers<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, LabError> {
    match jobs {
        None => Ok(f()),
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k.max(1))
                .build()
                .map_err(|e| LabError::Pool(e.to_string()))?;
            Ok(pool.install(f))
        }
    }
}

struct Partial {
    scanned: usize,
    skipped: usize,
    first: Option<Counterexample>,
}

/// Scans `imp` over `scope` on the current rayon pool.
pub fn check_implication(name: impl Into<String>, imp: &Implication, scope: Scope) -> Result<LabRow, LabError> {
    let start = Instant::now();
    let topologies = scope.topologies()?;
    let partials: Vec<Partial> = topologies
        .par_iter()
        .map(|(n, i, t)| {
            let mut p = Partial {
                scanned: 0,
                skipped: 0,
                first: None,
            };
            for space in scope.spaces_over(*n, *i, t) {
                match imp.evaluate(&space) {
                    Outcome::Skipped => p.skipped += 1,
                    Outcome::Holds => p.scanned += 1,
                    Outcome::Fails(witness) => {
                        p.scanned += 1;
                        if p.first.is_none() {
                            p.first = Some(Counterexample { space, witness });
                        }
                    }
                }
            }
            p
        })
        .collect();
    let scanned = partials.iter().map(|p| p.scanned).sum();
    let skipped = partials.iter().map(|p| p.skipped).sum();
    let counterexample = partials.into_iter().find_map(|p| p.first);
    Ok(LabRow {
        name: name.into(),
        implication: imp.clone(),
        scope,
        scanned,
        skipped,
        total: scanned + skipped,
        counterexample,
        elapsed: start.elapsed(),
    })
}

fn row(name: String, hyps: Vec<Atom>, concl: Atom, scope: Scope) -> Result<LabReport, LabError> {
    let r = check_implication(name, &Implication::new(hyps, concl), scope)?;
    Ok(LabReport { rows: vec![r] })
}

/// Point-set separation for γ₀-compact sets, in the displayed form
/// (`x ∈ U^γ`, `C ⊆ V^γ`) and the alternate form (`x ∈ U`, `C ⊆ V`).
pub fn check_theorem_1(scope: Scope) -> Result<LabReport, LabError> {
    let hyps = vec![Atom::GammaT2, Atom::RegularOp, Atom::OpenOp, Atom::Gamma0Compact];
    let mut rep = row(
        "theorem-1".into(),
        hyps.clone(),
        Atom::PointSetSeparation(SeparationForm::OnValues),
        scope,
    )?;
    rep.extend(row(
        "theorem-1-alt".into(),
        hyps,
        Atom::PointSetSeparation(SeparationForm::OnOpens),
        scope,
    )?);
    Ok(rep)
}

/// γ₀-compact subsets of a γ-T₂ space are γ-closed.
pub fn check_theorem_2(scope: Scope) -> Result<LabReport, LabError> {
    row(
        "theorem-2".into(),
        vec![Atom::GammaT2, Atom::RegularOp, Atom::OpenOp],
        Atom::AllSubsetsGammaClosed,
        scope,
    )
}

/// Subspaces of γˢ-regular spaces are γˢ-regular.
pub fn check_theorem_3(scope: Scope, conv: TraceConvention, mode: ClosedMode) -> Result<LabReport, LabError> {
    row(
        format!("theorem-3[{},{}]", mode.label(), conv.label()),
        vec![Atom::RegularOp, Atom::GsRegular(mode)],
        Atom::HereditaryGsRegular(mode, conv),
        scope,
    )
}

/// The shrinking property gives γˢ-normality; the converse is scanned as
/// a supplementary row.
pub fn check_theorem_4(scope: Scope, mode: ClosedMode) -> Result<LabReport, LabError> {
    let mut rep = row(
        format!("theorem-4[{}]", mode.label()),
        vec![Atom::OpenOp, Atom::StrictlyRegularOp, Atom::Shrinking(mode)],
        Atom::GsNormal(mode),
        scope,
    )?;
    rep.extend(row(
        format!("theorem-4-converse[{}]", mode.label()),
        vec![Atom::OpenOp, Atom::StrictlyRegularOp, Atom::GsNormal(mode)],
        Atom::Shrinking(mode),
        scope,
    )?);
    Ok(rep)
}

/// γˢ-normal γ-T₁ spaces are γˢ-regular; plus the disjoint-values lemma.
pub fn check_theorem_5(scope: Scope, mode: ClosedMode) -> Result<LabReport, LabError> {
    row(
        format!("theorem-5[{}]", mode.label()),
        vec![Atom::StrictlyRegularOp, Atom::GammaT1, Atom::GsNormal(mode)],
        Atom::GsRegular(mode),
        scope,
    )
}

/// Strict regularity sends disjoint opens to disjoint values.
pub fn check_theorem_5_lemma(scope: Scope) -> Result<LabReport, LabError> {
    row(
        "theorem-5-lemma".into(),
        vec![Atom::StrictlyRegularOp],
        Atom::DisjointValues,
        scope,
    )
}

/// Closed subspaces of γˢ-normal spaces are γˢ-normal.
pub fn check_theorem_6(scope: Scope, conv: TraceConvention, mode: ClosedMode) -> Result<LabReport, LabError> {
    row(
        format!("theorem-6[{},{}]", mode.label(), conv.label()),
        vec![Atom::RegularOp, Atom::GsNormal(mode)],
        Atom::ClosedHereditaryGsNormal(mode, conv),
        scope,
    )
}

/// γ₀-compact γ-T₂ spaces are γˢ-normal.
pub fn check_theorem_7(scope: Scope, mode: ClosedMode) -> Result<LabReport, LabError> {
    row(
        format!("theorem-7[{}]", mode.label()),
        vec![Atom::GammaT2, Atom::RegularOp, Atom::OpenOp, Atom::Gamma0Compact],
        Atom::GsNormal(mode),
        scope,
    )
}

/// Trace family versus the induced γ-open family, per convention.
pub fn check_trace_agreement(scope: Scope, conv: TraceConvention) -> Result<LabReport, LabError> {
    row(
        format!("trace-family[{}]", conv.label()),
        vec![],
        Atom::TraceFamilyAgrees(conv),
        scope,
    )
}

/// Every theorem row for the given modes and conventions, in a fixed
/// order.
pub fn theorem_report(
    scope: Scope,
    modes: &[ClosedMode],
    convs: &[TraceConvention],
) -> Result<LabReport, LabError> {
    let mut rep = check_theorem_1(scope)?;
    rep.extend(check_theorem_2(scope)?);
    for &m in modes {
        for &c in convs {
            rep.extend(check_theorem_3(scope, c, m)?);
        }
    }
    for &m in modes {
        rep.extend(check_theorem_4(scope, m)?);
    }
    for &m in modes {
        rep.extend(check_theorem_5(scope, m)?);
    }
    rep.extend(check_theorem_5_lemma(scope)?);
    for &m in modes {
        for &c in convs {
            rep.extend(check_theorem_6(scope, c, m)?);
        }
    }
    for &m in modes {
        rep.extend(check_theorem_7(scope, m)?);
    }
    for &c in convs {
        rep.extend(check_trace_agreement(scope, c)?);
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    fn scope3() -> Scope {
        Scope::new(3, OpSource::Catalog)
    }

    #[test]
    fn implication_parsing() {
        let imp = Implication::parse("gamma-t2 & regular-op => gs-normal(gamma)", ClosedMode::Tau, TraceConvention::MaxTrace)
            .unwrap();
        assert_eq!(imp.hypotheses, vec![Atom::GammaT2, Atom::RegularOp]);
        assert_eq!(imp.conclusion, Atom::GsNormal(ClosedMode::Gamma));
        assert_eq!(imp.to_string(), "gamma-t2 & regular-op => gs-normal(gamma)");
        for bad in ["gamma-t2", "a => b => c", "gamma-t2 & => gamma-t1", "gamma-t1 => gamma-t2 & open-op"] {
            assert!(Implication::parse(bad, ClosedMode::Tau, TraceConvention::MaxTrace).is_err(), "{bad}");
        }
    }

    #[test]
    fn definitional_implications_hold() {
        let p = |s: &str| Implication::parse(s, ClosedMode::Tau, TraceConvention::MaxTrace).unwrap();
        for text in [
            "strictly-regular-op => regular-op",
            "gamma-t2 => gamma-t1",
            "gamma-t1 => singletons-gamma-closed",
            "singletons-gamma-closed => gamma-t1",
        ] {
            let r = check_implication(text, &p(text), scope3()).unwrap();
            assert!(r.holds(), "{text}: {:?}", r.counterexample);
            assert_eq!(r.scanned + r.skipped, r.total);
        }
    }

    #[test]
    fn reported_counterexample_revalidates() {
        let r = check_theorem_5_lemma(scope3()).unwrap().rows.remove(0);
        let c = r.counterexample.clone().expect("the lemma has counterexamples");
        r.revalidate_on(&c.space, &c.witness).unwrap();
    }

    #[test]
    fn lemma_fails_on_example2_space() {
        let imp = Implication::new(vec![Atom::StrictlyRegularOp], Atom::DisjointValues);
        assert!(matches!(imp.evaluate(&samples::example2()), Outcome::Fails(_)));
        assert_eq!(imp.evaluate(&samples::irregular_example()), Outcome::Skipped);
    }

    #[test]
    fn discrete_identity_satisfies_theorem_hypotheses_and_conclusions() {
        let d = samples::discrete_identity(3);
        let t7 = Implication::new(
            vec![Atom::GammaT2, Atom::RegularOp, Atom::OpenOp, Atom::Gamma0Compact],
            Atom::GsNormal(ClosedMode::Tau),
        );
        assert_eq!(t7.evaluate(&d), Outcome::Holds);
        let t2 = Implication::new(vec![Atom::GammaT2, Atom::RegularOp, Atom::OpenOp], Atom::AllSubsetsGammaClosed);
        assert_eq!(t2.evaluate(&d), Outcome::Holds);
        let ind = Space::from_rule("ind", crate::topology::Topology::indiscrete(2), crate::operation::RuleExpr::Identity)
            .unwrap();
        assert_eq!(t2.evaluate(&ind), Outcome::Skipped);
    }

    #[test]
    fn worker_count_does_not_change_rows() {
        let imp = Implication::new(vec![Atom::RegularOp], Atom::GsRegular(ClosedMode::Gamma));
        let one = with_workers(Some(1), || check_implication("x", &imp, scope3())).unwrap().unwrap();
        let four = with_workers(Some(4), || check_implication("x", &imp, scope3())).unwrap().unwrap();
        assert_eq!(one.counterexample, four.counterexample);
        assert_eq!((one.scanned, one.skipped), (four.scanned, four.skipped));
    }
}
