mod common;

use common::Raw;
use gammatop::enumerate::enumerate_topologies;
use gammatop::gamma::{gamma_closure, gamma_interior, gamma_open_family};
use gammatop::lab::catalog;
use gammatop::subspace::{gamma_open_trace_family, induced_operation};
use gammatop::{Space, SubSet, TraceConvention};
use proptest::prelude::*;
use proptest::sample::Index;

fn arb_space(max_n: usize) -> impl Strategy<Value = Space> {
    (1..=max_n, any::<Index>(), any::<Index>()).prop_map(|(n, ti, ri)| {
        let ts = enumerate_topologies(n).unwrap();
        let rules = catalog(n);
        Space::from_rule("P", ts[ti.index(ts.len())].clone(), rules[ri.index(rules.len())].clone()).unwrap()
    })
}

proptest! {
    #[test]
    fn closure_interior_duality(s in arb_space(4), bits in any::<u32>()) {
        let a = SubSet::from_bits(s.carrier(), bits & s.full().bits()).unwrap();
        prop_assert_eq!(gamma_closure(&s, a), gamma_interior(&s, a.complement()).complement());
        let raw = Raw::of(&s);
        prop_assert_eq!(gamma_interior(&s, a).bits(), raw.int_g(a.bits()));
    }

    #[test]
    fn induced_operations_are_expansive_and_ordered(s in arb_space(4), bits in any::<u32>()) {
        let y = SubSet::from_bits(s.carrier(), bits & s.full().bits()).unwrap();
        let max = induced_operation(&s, y, TraceConvention::MaxTrace);
        let min = induced_operation(&s, y, TraceConvention::MinTrace);
        prop_assert_eq!(max.topology(), min.topology());
        for &g in max.topology().opens() {
            prop_assert!(g.is_subset(min.gamma(g)));
            prop_assert!(min.gamma(g).is_subset(max.gamma(g)));
        }
    }

    #[test]
    fn trace_family_is_union_closed(s in arb_space(4), bits in any::<u32>()) {
        let y = SubSet::from_bits(s.carrier(), bits & s.full().bits()).unwrap();
        let fam = gamma_open_trace_family(&s, y);
        for &a in &fam {
            for &b in &fam {
                prop_assert!(fam.contains(a.union(b)));
            }
        }
    }

    #[test]
    fn gamma_open_sets_are_open(s in arb_space(4)) {
        for &a in gamma_open_family(&s).iter() {
            prop_assert!(s.topology().is_open(a));
        }
    }
}
