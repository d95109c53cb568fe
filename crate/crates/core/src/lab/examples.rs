use std::fmt;

use crate::gamma::gamma_open_family;
use crate::operation::{is_open_operation, is_strictly_regular_operation};
use crate::samples;
use crate::separation::{gammas_normal_failures, is_gammas_normal, is_gammas_regular, ClosedMode};
use crate::space::Space;
use crate::subset::SubSet;
use crate::verdict::Verdict;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClaimStatus {
    Pass,
    Fail,
    /// Holds in one closed-set mode only.
    ModeDependent,
}

impl fmt::Display for ClaimStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClaimStatus::Pass => "pass",
            ClaimStatus::Fail => "FAIL",
            ClaimStatus::ModeDependent => "mode-dependent",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExampleClaim {
    pub example: String,
    pub property: String,
    pub claimed: String,
    pub observed: String,
    pub status: ClaimStatus,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExampleReport {
    pub claims: Vec<ExampleClaim>,
}

impl ExampleReport {
    pub fn all_reproduced(&self) -> bool {
        self.claims.iter().all(|c| c.status != ClaimStatus::Fail)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.claims {
            out.push_str(&format!(
                "{} | {} | claimed {} | observed {} | {}\n",
                c.example, c.property, c.claimed, c.observed, c.status
            ));
        }
        out
    }
}

fn observe(s: &Space, v: &Verdict) -> String {
    match v {
        Verdict::Holds(_) => "true".into(),
        Verdict::Fails(w) => format!("false ({})", w.render(s.names())),
    }
}

fn family_claim(s: &Space, claimed: &[SubSet]) -> ExampleClaim {
    let fam = gamma_open_family(s);
    let claimed_fam: crate::subset::SetFamily = claimed.iter().copied().collect();
    ExampleClaim {
        example: s.name().into(),
        property: "gamma-open-family".into(),
        claimed: claimed_fam.render(s.names()),
        observed: fam.family().render(s.names()),
        status: if fam.family() == &claimed_fam {
            ClaimStatus::Pass
        } else {
            ClaimStatus::Fail
        },
    }
}

fn bool_claim(s: &Space, property: &str, v: Verdict, claimed: bool) -> ExampleClaim {
    ExampleClaim {
        example: s.name().into(),
        property: property.into(),
        claimed: claimed.to_string(),
        observed: observe(s, &v),
        status: if v.holds() == claimed {
            ClaimStatus::Pass
        } else {
            ClaimStatus::Fail
        },
    }
}

/// One line per mode. A mode that disagrees with an unqualified claim is
/// flagged mode-dependent when another mode agrees.
fn per_mode_claims(
    s: &Space,
    property: &str,
    eval: impl Fn(ClosedMode) -> (Verdict, String),
) -> Vec<ExampleClaim> {
    let results: Vec<(ClosedMode, Verdict, String)> = ClosedMode::ALL
        .iter()
        .map(|&m| {
            let (v, obs) = eval(m);
            (m, v, obs)
        })
        .collect();
    let any_holds = results.iter().any(|(_, v, _)| v.holds());
    results
        .into_iter()
        .map(|(m, v, observed)| ExampleClaim {
            example: s.name().into(),
            property: format!("{property}({})", m.label()),
            claimed: "true".into(),
            observed,
            status: match (v.holds(), any_holds) {
                (true, _) => ClaimStatus::Pass,
                (false, true) => ClaimStatus::ModeDependent,
                (false, false) => ClaimStatus::Fail,
            },
        })
        .collect()
}

/// Builds the four worked spaces and checks each stated property.
pub fn run_paper_examples() -> ExampleReport {
    let mut claims = Vec::new();
    let set = |n: usize, pts: &[usize]| SubSet::from_points(n, pts.iter().copied());

    let e1 = samples::example1();
    claims.push(family_claim(
        &e1,
        &[set(3, &[]), set(3, &[0]), set(3, &[1]), set(3, &[0, 1]), set(3, &[0, 1, 2])],
    ));
    claims.push(bool_claim(&e1, "strictly-regular-op", is_strictly_regular_operation(&e1), true));
    claims.push(bool_claim(&e1, "open-op", is_open_operation(&e1), true));

    let e2 = samples::example2();
    claims.push(family_claim(&e2, &[set(3, &[]), set(3, &[0, 1, 2])]));
    claims.push(bool_claim(&e2, "strictly-regular-op", is_strictly_regular_operation(&e2), true));
    claims.push(bool_claim(&e2, "open-op", is_open_operation(&e2), false));

    let s2 = samples::regular_example();
    claims.extend(per_mode_claims(&s2, "gs-regular", |m| {
        let v = is_gammas_regular(&s2, m);
        let obs = observe(&s2, &v);
        (v, obs)
    }));

    let s3 = samples::normal_example();
    claims.extend(per_mode_claims(&s3, "gs-normal", |m| {
        let v = is_gammas_normal(&s3, m);
        let obs = match &v {
            Verdict::Holds(_) => "true".to_string(),
            Verdict::Fails(_) => {
                let pairs: Vec<String> = gammas_normal_failures(&s3, m)
                    .into_iter()
                    .map(|(a, b)| format!("({},{})", a.render(s3.names()), b.render(s3.names())))
                    .collect();
                format!("false (unseparated pairs: {})", pairs.join(" "))
            }
        };
        (v, obs)
    }));

    ExampleReport { claims }
}
