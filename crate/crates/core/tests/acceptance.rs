//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use common::{brute_force_topology_count, set, Raw};
use gammatop::audit::{self, Claim};
use gammatop::enumerate::enumerate_topologies;
use gammatop::gamma::{self, IntersectionReading, DEFAULT_CLASS_CAP};
use gammatop::lab::{self, catalog, run_paper_examples, ClaimStatus, OpSource, Scope};
use gammatop::operation::{is_open_operation, is_regular_operation, is_strictly_regular_operation};
use gammatop::samples;
use gammatop::separation::{self, gammas_normal_failures, is_gammas_normal, is_gammas_regular, SeparationForm};
use gammatop::spacefile::{parse_space_file, render_space_file};
use gammatop::{ClosedConvention, ClosedMode, Query, RuleExpr, Space, SubSet, TraceConvention, Verdict};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || format!("took {elapsed:?}, limit {limit:?}"))
}

fn family_bits(s: &Space) -> Vec<u32> {
    gamma::gamma_open_family(s).iter().map(|a| a.bits()).collect()
}

fn example1() -> Outcome {
    let start = Instant::now();
    let s = samples::example1();
    let raw = Raw::of(&s);
    let want = vec![0b000, 0b001, 0b010, 0b011, 0b111];
    ensure(family_bits(&s) == want, || format!("family {:?}", family_bits(&s)))?;
    ensure(raw.tau_g() == want, || "oracle family differs".into())?;
    ensure(is_strictly_regular_operation(&s).holds() && raw.strictly_regular(), || {
        "strictly-regular-op not true".into()
    })?;
    ensure(is_open_operation(&s).holds() && raw.open_op(), || "open-op not true".into())?;
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok("family {∅,{a},{b},{a,b},X}, strictly-regular-op, open-op".into())
}

fn example2() -> Outcome {
    let start = Instant::now();
    let s = samples::example2();
    let raw = Raw::of(&s);
    ensure(family_bits(&s) == vec![0, 0b111], || format!("family {:?}", family_bits(&s)))?;
    ensure(raw.tau_g() == vec![0, 0b111], || "oracle family differs".into())?;
    ensure(is_strictly_regular_operation(&s).holds() && raw.strictly_regular(), || {
        "strictly-regular-op not true".into()
    })?;
    let v = is_open_operation(&s);
    ensure(v.witness() == Some(&Query::Open(set(3, &[0]))), || format!("open-op verdict {v:?}"))?;
    ensure(!raw.open_op(), || "oracle says open-op".into())?;
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok("family {∅,X}, strictly-regular-op, open-op false at {a}".into())
}

fn regular_example() -> Outcome {
    let start = Instant::now();
    let s = samples::regular_example();
    let v = is_gammas_regular(&s, ClosedMode::Tau);
    ensure(v.holds(), || format!("verdict {v:?}"))?;
    ensure(Raw::of(&s).gs_regular(ClosedMode::Tau), || "oracle disagrees".into())?;
    audit::revalidate(&s, &Claim::GsRegular(ClosedMode::Tau), &v).map_err(|e| e.to_string())?;
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok("gs-regular(tau) true, certificate audited".into())
}

fn normal_example() -> Outcome {
    let start = Instant::now();
    let s = samples::normal_example();
    let raw = Raw::of(&s);
    let gamma_v = is_gammas_normal(&s, ClosedMode::Gamma);
    ensure(gamma_v.holds(), || format!("gamma-closed verdict {gamma_v:?}"))?;
    ensure(raw.normal_failures(ClosedMode::Gamma).is_empty(), || {
        "oracle finds gamma-closed failures".into()
    })?;
    let tau_v = is_gammas_normal(&s, ClosedMode::Tau);
    let Some(Query::Sets(wa, wb)) = tau_v.witness().cloned() else {
        return Err(format!("tau-closed verdict {tau_v:?}"));
    };
    let oracle = raw.normal_failures(ClosedMode::Tau);
    let ac = set(4, &[0, 2]).bits();
    let d = set(4, &[3]).bits();
    ensure(oracle.contains(&(ac, d)), || "oracle does not fail ({a,c},{d})".into())?;
    ensure(oracle.contains(&(wa.bits(), wb.bits())), || "engine witness is separable".into())?;
    let engine: Vec<(u32, u32)> = gammas_normal_failures(&s, ClosedMode::Tau)
        .into_iter()
        .map(|(a, b)| (a.bits(), b.bits()))
        .collect();
    let mut unordered: Vec<(u32, u32)> = oracle.iter().filter(|(a, b)| a <= b).copied().collect();
    unordered.sort();
    ensure(engine == unordered, || format!("failure lists differ: {engine:?} vs {unordered:?}"))?;
    for v in [&gamma_v, &tau_v] {
        let mode = if v.holds() { ClosedMode::Gamma } else { ClosedMode::Tau };
        audit::revalidate(&s, &Claim::GsNormal(mode), v).map_err(|e| e.to_string())?;
    }
    let report = run_paper_examples();
    let flagged = report
        .claims
        .iter()
        .any(|c| c.example == "NormalExample" && c.status == ClaimStatus::ModeDependent);
    ensure(flagged, || "report does not flag the mode dependence".into())?;
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!(
        "gamma-closed true; tau-closed false, ({{a c}},{{d}}) among {} oracle-confirmed pairs; flagged",
        unordered.len()
    ))
}

fn invariant_suite() -> Outcome {
    let start = Instant::now();
    for (n, want) in [(2, 4), (3, 29), (4, 355)] {
        let got = enumerate_topologies(n).map_err(|e| e.to_string())?.len();
        let brute = brute_force_topology_count(n);
        ensure(got == want && brute == want, || format!("n={n}: enumerated {got}, brute force {brute}"))?;
    }
    let mut checked = 0;
    for t in enumerate_topologies(3).map_err(|e| e.to_string())? {
        for rule in catalog(3) {
            let s = Space::from_rule("inv", t.clone(), rule.clone()).map_err(|e| e.to_string())?;
            let raw = Raw::of(&s);
            let ctx = || format!("{} ", s.describe());
            let tau_g = raw.tau_g();
            ensure(family_bits(&s) == tau_g, || ctx() + "gamma-open family")?;
            for a in SubSet::all(3) {
                let cl = gamma::gamma_closure(&s, a);
                let dual = gamma::gamma_interior(&s, a.complement()).complement();
                ensure(cl == dual && cl.bits() == raw.cl_g(a.bits()), || ctx() + "closure duality")?;
                ensure(gamma::gamma_interior(&s, a).bits() == raw.int_g(a.bits()), || ctx() + "interior")?;
                let by_complement = is_gamma_closed_holds(&s, a, ClosedConvention::Complement);
                let by_closure = is_gamma_closed_holds(&s, a, ClosedConvention::Closure);
                ensure(by_complement == by_closure, || ctx() + "closed conventions")?;
            }
            ensure(tau_g.iter().all(|a| raw.opens.contains(a)), || ctx() + "tau_g inside tau")?;
            for &a in &tau_g {
                for &b in &tau_g {
                    ensure(tau_g.contains(&(a | b)), || ctx() + "union closure")?;
                    if raw.regular() {
                        ensure(tau_g.contains(&(a & b)), || ctx() + "intersection closure")?;
                    }
                }
            }
            let reg = is_regular_operation(&s).holds();
            let strict = is_strictly_regular_operation(&s).holds();
            ensure(reg == raw.regular() && strict == raw.strictly_regular(), || ctx() + "regularity")?;
            ensure(!strict || reg, || ctx() + "strictly regular but not regular")?;
            let t1 = separation::is_gamma_t1(&s).holds();
            let t2 = separation::is_gamma_t2(&s).holds();
            ensure(t1 == raw.t1() && t2 == raw.t2(), || ctx() + "T1/T2 oracle")?;
            ensure(!t2 || t1, || ctx() + "T2 without T1")?;
            ensure(t1 == separation::singletons_gamma_closed(&s).holds(), || ctx() + "T1 vs singletons")?;
            ensure(gamma::is_gamma0_compact(&s).holds(), || ctx() + "gamma0-compact")?;
            if rule == RuleExpr::Identity {
                ensure(tau_g == raw.opens, || ctx() + "identity tau_g")?;
                for a in 0..8u32 {
                    ensure(raw.cl_g(a) == raw.closure(a), || ctx() + "identity closure")?;
                }
            }
            checked += 1;
        }
    }
    within(start.elapsed(), Duration::from_secs(60))?;
    Ok(format!("{checked} spaces, zero violations; counts 4/29/355 match brute force"))
}

fn is_gamma_closed_holds(s: &Space, a: SubSet, c: ClosedConvention) -> bool {
    gamma::is_gamma_closed(s, a, c).holds()
}

const GOLDEN: &str = include_str!("golden/theorems_n3.txt");

fn cli_theorems(jobs: usize) -> Result<String, String> {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let args = ["gammatop", "theorems", "--points", "3", "--no-timings", "--jobs", &jobs.to_string()];
    let code = gammatop::cli::run(args, &mut out, &mut err);
    ensure(code == 0 || code == 1, || format!("exit {code}: {}", String::from_utf8_lossy(&err)))?;
    String::from_utf8(out).map_err(|e| e.to_string())
}

fn theorem_report() -> Outcome {
    let start = Instant::now();
    let single = cli_theorems(1)?;
    within(start.elapsed(), Duration::from_secs(300))?;
    let multi = cli_theorems(4)?;
    ensure(single == multi, || "output depends on worker count".into())?;
    ensure(single == GOLDEN, || format!("differs from golden file:\n{single}"))?;
    let scope = Scope::new(3, OpSource::Catalog);
    let report = lab::with_workers(Some(1), || {
        lab::theorem_report(scope, &ClosedMode::ALL, &TraceConvention::ALL)
    })
    .and_then(|r| r)
    .map_err(|e| e.to_string())?;
    let mut revalidated = 0;
    for row in &report.rows {
        ensure(row.scanned + row.skipped == row.total, || format!("{}: counts", row.name))?;
        if let Some(c) = &row.counterexample {
            let parsed = parse_space_file(&render_space_file(&c.space)).map_err(|e| e.to_string())?;
            row.revalidate_on(&parsed, &c.witness)
                .map_err(|e| format!("{}: {e}", row.name))?;
            revalidated += 1;
        }
    }
    Ok(format!(
        "{} rows match golden, jobs 1 = jobs 4, {revalidated} counterexamples revalidated",
        report.rows.len()
    ))
}

fn random_claim(rng: &mut ChaCha8Rng, n: usize) -> Claim {
    let mode = if rng.gen_bool(0.5) { ClosedMode::Tau } else { ClosedMode::Gamma };
    match rng.gen_range(0..14) {
        0 => Claim::RegularOp,
        1 => Claim::StrictlyRegularOp,
        2 => Claim::OpenOp,
        3 => Claim::GammaT1,
        4 => Claim::GammaT2,
        5 => Claim::GsRegular(mode),
        6 => Claim::GsNormal(mode),
        7 => Claim::Shrinking(mode),
        8 | 9 => Claim::GammaClosed(SubSet::from_bits(n, rng.gen_range(0..1u32 << n)).unwrap()),
        10 => Claim::SingletonsGammaClosed,
        11 => Claim::DisjointValues,
        12 => Claim::PointSetSeparation(if rng.gen_bool(0.5) {
            SeparationForm::OnValues
        } else {
            SeparationForm::OnOpens
        }),
        _ => Claim::FiniteIntersection(
            if rng.gen_bool(0.5) {
                IntersectionReading::Clopen
            } else {
                IntersectionReading::Mixed
            },
            DEFAULT_CLASS_CAP,
        ),
    }
}

/// Truth value from the oracle, where one exists.
fn oracle_value(raw: &Raw, claim: &Claim) -> Option<bool> {
    Some(match claim {
        Claim::RegularOp => raw.regular(),
        Claim::StrictlyRegularOp => raw.strictly_regular(),
        Claim::OpenOp => raw.open_op(),
        Claim::GammaT1 => raw.t1(),
        Claim::GammaT2 => raw.t2(),
        Claim::GsRegular(m) => raw.gs_regular(*m),
        Claim::GsNormal(m) => raw.normal_failures(*m).is_empty(),
        Claim::GammaClosed(a) => raw.cl_g(a.bits()) & !a.bits() == 0,
        _ => return None,
    })
}

fn certificate_fuzz() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_9a11);
    let tops: Vec<_> = (1..=4).map(|n| enumerate_topologies(n).unwrap()).collect();
    let (mut holds, mut fails) = (0, 0);
    for i in 0..1000 {
        let n = rng.gen_range(1..=4);
        let t = tops[n - 1][rng.gen_range(0..tops[n - 1].len())].clone();
        let rules = catalog(n);
        let rule = rules[rng.gen_range(0..rules.len())].clone();
        let s = Space::from_rule("fuzz", t, rule).map_err(|e| e.to_string())?;
        let claim = random_claim(&mut rng, n);
        let v = audit::evaluate(&s, &claim);
        audit::revalidate(&s, &claim, &v).map_err(|e| format!("query {i} {claim:?} on {}: {e}", s.describe()))?;
        if let Some(want) = oracle_value(&Raw::of(&s), &claim) {
            ensure(want == v.holds(), || format!("query {i} {claim:?} on {}: oracle disagrees", s.describe()))?;
        }
        match v {
            Verdict::Holds(_) => holds += 1,
            Verdict::Fails(_) => fails += 1,
        }
    }
    Ok(format!("1000 queries ({holds} certificates, {fails} witnesses), zero failures"))
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("AC1 example-1 reproduction", example1),
        ("AC2 example-2 reproduction", example2),
        ("AC3 gs-regular example", regular_example),
        ("AC4 gs-normal example, both modes", normal_example),
        ("AC5 invariant suite, n=3 x catalog", invariant_suite),
        ("AC6 theorem golden report", theorem_report),
        ("AC7 certificate soundness fuzz", certificate_fuzz),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let start = Instant::now();
        let outcome = f();
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("PASS {name} ({ms} ms): {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {name} ({ms} ms): {detail}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
