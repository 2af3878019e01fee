//! Exact chromatic numbers of derived Kneser hypergraphs against the
//! closed formula `ceil((n - r(k-1)) / (r-1))`.

use kneser_core::bits::k_subsets;
use kneser_core::{
    build_kneser, chromatic_number, greedy_upper, ChiOutcome, Guards, Hypergraph,
};

fn complete_ksets(n: usize, k: usize) -> Hypergraph {
    Hypergraph::new(n, k_subsets(n, k)).unwrap()
}

fn chi_of_kneser(n: usize, k: usize, r: usize) -> usize {
    let ground = complete_ksets(n, k);
    let kg = build_kneser(&ground, r, &Guards::default()).unwrap();
    let hg = kg.to_hypergraph().unwrap();
    match chromatic_number(&hg, hg.n()).unwrap().outcome {
        ChiOutcome::Chromatic { chi, witness } => {
            assert!(hg.is_proper(&witness).unwrap());
            chi
        }
        ChiOutcome::LimitExceeded { .. } => panic!("limit reached"),
    }
}

#[test]
fn petersen_graph_chi_three() {
    assert_eq!(chi_of_kneser(5, 2, 2), 3);
}

#[test]
fn triple_kneser_9_2_chi_three() {
    let ground = complete_ksets(9, 2);
    let kg = build_kneser(&ground, 3, &Guards::default()).unwrap();
    assert_eq!(kg.vertex_count(), 36);
    assert_eq!(kg.edge_count(), 1260); // C(9,2) C(7,2) C(5,2) / 3!
    assert_eq!(chi_of_kneser(9, 2, 3), 3);
}

#[test]
fn formula_on_small_grid() {
    for (n, k, r) in [(4usize, 2usize, 2usize), (5, 2, 2), (6, 2, 2), (6, 3, 2), (6, 2, 3), (7, 3, 2)] {
        let expect = (n - r * (k - 1)).div_ceil(r - 1);
        assert_eq!(chi_of_kneser(n, k, r), expect, "n={n} k={k} r={r}");
    }
}

#[test]
fn greedy_bounds_exact_chi_on_petersen() {
    let ground = complete_ksets(5, 2);
    let kg = build_kneser(&ground, 2, &Guards::default()).unwrap();
    let hg = kg.to_hypergraph().unwrap();
    let upper = greedy_upper(&hg).unwrap().palette();
    assert!((3..=10).contains(&upper));
}
