//! The worked example spaces, built from their rules.

use crate::operation::RuleExpr;
use crate::space::Space;
use crate::subset::{SetFamily, SubSet};
use crate::topology::{validate_topology, Topology};

fn topology(n: usize, opens: &[&[usize]]) -> Topology {
    let fam: SetFamily = opens
        .iter()
        .map(|pts| SubSet::from_points(n, pts.iter().copied()))
        .collect();
    validate_topology(fam, n).expect("sample family is a topology")
}

/// `{∅, {a}, {b}, {a,b}, X}` on `{a, b, c}`.
pub fn example1_topology() -> Topology {
    topology(3, &[&[], &[0], &[1], &[0, 1], &[0, 1, 2]])
}

/// Example-1 topology with `V ↦ int cl V`.
pub fn example1() -> Space {
    Space::from_rule("Example1", example1_topology(), RuleExpr::IntClosure).unwrap()
}

/// Example-1 topology with `V ↦ cl V`.
pub fn example2() -> Space {
    Space::from_rule("Example2", example1_topology(), RuleExpr::Closure).unwrap()
}

/// `{∅, {a}, {b,c}, X}` with `V ↦ V` when `b ∈ V`, else `cl V`.
pub fn regular_example() -> Space {
    let t = topology(3, &[&[], &[0], &[1, 2], &[0, 1, 2]]);
    let rule = RuleExpr::if_contains(1, RuleExpr::Identity, RuleExpr::Closure);
    Space::from_rule("RegularExample", t, rule).unwrap()
}

/// Ten-open topology on `{a, b, c, d}` with `V ↦ cl V` when `b ∈ V`,
/// else `cl int cl V`.
pub fn normal_example() -> Space {
    let t = topology(
        4,
        &[
            &[],
            &[0, 1, 2, 3],
            &[0],
            &[1],
            &[0, 1],
            &[1, 3],
            &[0, 1, 3],
            &[1, 2],
            &[1, 2, 3],
            &[0, 1, 2],
        ],
    );
    let rule = RuleExpr::if_contains(1, RuleExpr::Closure, RuleExpr::ClIntCl);
    Space::from_rule("NormalExample", t, rule).unwrap()
}

/// Example-1 topology with an explicit table that is not regular at `a`.
pub fn irregular_example() -> Space {
    let s = |pts: &[usize]| SubSet::from_points(3, pts.iter().copied());
    let entries = [
        (s(&[]), s(&[])),
        (s(&[0]), s(&[0, 2])),
        (s(&[1]), s(&[1])),
        (s(&[0, 1]), s(&[0, 1])),
        (s(&[0, 1, 2]), s(&[0, 1, 2])),
    ];
    Space::from_table("Irregular", example1_topology(), &entries).unwrap()
}

/// Discrete topology with the identity operation.
pub fn discrete_identity(n: usize) -> Space {
    Space::from_rule(format!("Discrete{n}"), Topology::discrete(n), RuleExpr::Identity).unwrap()
}
