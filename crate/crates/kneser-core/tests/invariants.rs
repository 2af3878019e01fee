//! Structural invariants over randomized instances.

use proptest::prelude::*;

use kneser_core::bits::subsets_by_size;
use kneser_core::{
    build_kneser, build_kneser_s, cd, chromatic_number, ecd, greedy_upper, ChiOutcome, Guards,
    Hypergraph, SVector, VSet,
};

fn guards() -> Guards {
    Guards::default()
}

/// Arbitrary hypergraph: n in 2..=7, up to 10 edges of size >= 2.
fn arb_hypergraph() -> impl Strategy<Value = Hypergraph> {
    (2usize..=7).prop_flat_map(|n| {
        let edge = proptest::collection::btree_set(1usize..=n, 2..=n.max(2));
        proptest::collection::vec(edge, 0..=10).prop_map(move |edges| {
            let lists: Vec<Vec<usize>> = edges
                .into_iter()
                .map(|e| e.into_iter().collect())
                .collect();
            Hypergraph::from_vertex_lists(n, &lists).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonicalization_ignores_input_order(h in arb_hypergraph(), seed in any::<u64>()) {
        let mut edges = h.edges().to_vec();
        // deterministic pseudo-shuffle driven by the seed
        let len = edges.len();
        if len > 1 {
            let mut state = seed | 1;
            for i in (1..len).rev() {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
                edges.swap(i, (state >> 33) as usize % (i + 1));
            }
        }
        let rebuilt = Hypergraph::new(h.n(), edges).unwrap();
        prop_assert_eq!(h, rebuilt);
    }

    #[test]
    fn plain_kneser_is_all_ones_specialization(h in arb_hypergraph(), r in 2usize..=3) {
        let plain = build_kneser(&h, r, &guards()).unwrap();
        let via_s = build_kneser_s(&h, r, &SVector::ones(h.n()), &guards()).unwrap();
        prop_assert_eq!(plain, via_s);
    }

    #[test]
    fn kneser_edges_grow_with_s(h in arb_hypergraph(), r in 2usize..=3, bump in 0usize..7) {
        let n = h.n();
        let lo = SVector::ones(n);
        let mut entries = vec![1u32; n];
        entries[bump % n] += 1;
        let hi = SVector::new(entries).unwrap();
        let small = build_kneser_s(&h, r, &lo, &guards()).unwrap();
        let large = build_kneser_s(&h, r, &hi, &guards()).unwrap();
        for e in small.edges() {
            prop_assert!(large.edges().binary_search(e).is_ok());
        }
    }

    #[test]
    fn independence_is_unit_chromatic(h in arb_hypergraph(), mask in any::<u64>()) {
        let s = VSet(mask & h.full_set().0);
        prop_assume!(!s.is_empty());
        let (sub, _) = h.induced(s).unwrap();
        prop_assume!(sub.singleton_edge().is_none());
        let chi = match chromatic_number(&sub, sub.n())?.outcome {
            ChiOutcome::Chromatic { chi, .. } => chi,
            ChiOutcome::LimitExceeded { .. } => unreachable!(),
        };
        prop_assert_eq!(h.is_independent(s).unwrap(), chi == 1);
    }

    #[test]
    fn chromatic_never_exceeds_greedy(h in arb_hypergraph()) {
        prop_assume!(h.singleton_edge().is_none());
        let upper = greedy_upper(&h).unwrap();
        prop_assert!(h.is_proper(&upper).unwrap());
        let chi = match chromatic_number(&h, h.n().max(1))?.outcome {
            ChiOutcome::Chromatic { chi, .. } => chi,
            ChiOutcome::LimitExceeded { .. } => unreachable!(),
        };
        prop_assert!(chi <= upper.palette());
    }

    #[test]
    fn ecd_dominates_cd_everywhere(h in arb_hypergraph(), r in 2usize..=4) {
        let s = SVector::ones(h.n());
        let c = cd(&h, r, &s, &guards()).unwrap();
        let e = ecd(&h, r, &s, &guards()).unwrap();
        prop_assert!(e.value >= c.value);
        // witnesses honor their flags
        prop_assert!(c.witness.all_independent(&h));
        prop_assert!(e.witness.all_independent(&h));
        prop_assert!(e.witness.equitable);
        prop_assert!(c.witness.is_s_disjoint(&s));
        prop_assert_eq!(e.witness.score, h.n() - e.value);
    }

    #[test]
    fn induced_idempotent(h in arb_hypergraph(), mask in any::<u64>()) {
        let s = VSet(mask & h.full_set().0);
        let (sub, _) = h.induced(s).unwrap();
        let (again, map) = sub.induced(sub.full_set()).unwrap();
        prop_assert_eq!(&sub, &again);
        prop_assert_eq!(map, (1..=sub.n()).collect::<Vec<_>>());
    }
}

#[test]
fn kneser_edge_members_pairwise_disjoint() {
    // directly checks the defining property on a midsize instance
    let h = Hypergraph::new(6, subsets_by_size(6).into_iter().filter(|s| s.len() == 2).collect())
        .unwrap();
    let kg = build_kneser(&h, 3, &guards()).unwrap();
    assert!(kg.edge_count() > 0);
    for e in kg.edges() {
        for i in 0..e.len() {
            for j in (i + 1)..e.len() {
                let a = h.edges()[e[i] as usize - 1];
                let b = h.edges()[e[j] as usize - 1];
                assert!(!a.intersects(b));
            }
        }
    }
}
