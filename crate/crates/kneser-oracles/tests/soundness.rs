//! Lower-bound soundness on sampled instances: every bound evaluator must
//! sit at or below the exactly computed chromatic number.

use kneser_core::{
    alt_sigma, build_kneser, build_kneser_s, cd, check_lemma1, chromatic_number, ecd, mu, Guards,
};
use kneser_oracles::sampler::Sampler;

fn guards() -> Guards {
    Guards::default()
}

fn exact_chi(h: &kneser_core::Hypergraph) -> usize {
    match chromatic_number(h, h.n().max(1)).unwrap().outcome {
        ChiOutcomes::Chromatic { chi, .. } => chi,
        ChiOutcomes::LimitExceeded { .. } => unreachable!(),
    }
}

use kneser_core::ChiOutcome as ChiOutcomes;

#[test]
fn alternation_bound_below_chi_for_every_ordering() {
    let mut sampler = Sampler::new(2024);
    for _ in 0..12usize {
        let n = sampler.usize_in(4, 5);
        let h = sampler.hypergraph(n, n + 2, 2, 3);
        for r in [2usize, 3] {
            let kg = build_kneser(&h, r, &guards()).unwrap();
            let hg = kg.to_hypergraph().unwrap();
            let chi = exact_chi(&hg);
            let mut sigma: Vec<usize> = (1..=n).collect();
            loop {
                let alt = alt_sigma(&h, r, &sigma, &guards()).unwrap().value;
                let bound = (n - alt).div_ceil(r - 1);
                assert!(
                    bound <= chi,
                    "ordering bound {bound} above chi {chi} at sigma={sigma:?} on {h:?}"
                );
                if !kneser_core::bits::next_permutation(&mut sigma) {
                    break;
                }
            }
        }
    }
}

#[test]
fn defect_bounds_below_chi_on_random_instances() {
    let mut sampler = Sampler::new(9001);
    let mut checked = 0usize;
    while checked < 60 {
        let n = sampler.usize_in(4, 7);
        let h = sampler.hypergraph(n, 2 * n, 2, 3);
        let r = sampler.usize_in(2, 3);
        // entries strictly below the largest prime factor of r
        let s = sampler.svector(n, (mu(r).unwrap() - 1) as u32);
        let kg = build_kneser_s(&h, r, &s, &guards()).unwrap();
        if kg.vertex_count() > 40 {
            continue;
        }
        let hg = kg.to_hypergraph().unwrap();
        let chi = exact_chi(&hg);
        let cd_v = cd(&h, r, &s, &guards()).unwrap().value;
        let ecd_v = ecd(&h, r, &s, &guards()).unwrap().value;
        assert!(ecd_v >= cd_v);
        assert!(
            ecd_v.div_ceil(r - 1) <= chi,
            "equitable bound broke on {h:?} r={r} s={s:?}: ecd={ecd_v} chi={chi}"
        );
        checked += 1;
    }
}

#[test]
fn product_split_inequality_on_random_instances() {
    let mut sampler = Sampler::new(5150);
    for _ in 0..40usize {
        let n = sampler.usize_in(3, 6);
        let h = sampler.hypergraph(n, 2 * n, 2, 3);
        for (rp, rdp) in [(2usize, 2usize), (2, 3), (3, 2)] {
            let s = sampler.svector(n, (rdp - 1) as u32);
            for big_c in 1..=3usize {
                let rep = check_lemma1(&h, rp, rdp, &s, big_c, &guards()).unwrap();
                assert!(
                    rep.holds,
                    "inequality violated on {h:?} r'={rp} r''={rdp} C={big_c}: {rep:?}"
                );
            }
        }
    }
}
