//! Brute-force reference implementations.
//!
//! Everything here enumerates the raw definition with no pruning and no
//! code shared with the optimized search paths (only the data types are
//! reused). The point is independence: when the main crate and this crate
//! agree on every instance below the caps, both would have to be wrong in
//! the same way for a bug to slip through.
//!
//! Compiled into test builds only; nothing in the workspace depends on
//! this crate outside `[dev-dependencies]`.

use kneser_core::{AltVector, Error, Hypergraph, Result, SVector, VSet};

pub mod sampler;

/// Hard cap for [`oracle_defect`] and [`oracle_alt_sigma`]; the tuple
/// space is `(2^n)^r` resp. `(r+1)^n`.
pub const DEFECT_CAP_N: usize = 6;
/// Hard cap for [`oracle_chi`]; the assignment space is `t^n`.
pub const CHI_CAP_N: usize = 12;
/// Hard cap for [`oracle_alt`]; the subsequence space is `2^n`.
pub const ALT_CAP_N: usize = 12;

fn cap(what: &'static str, limit: usize, requested: usize) -> Result<()> {
    if requested > limit {
        Err(Error::Guard {
            what,
            limit: limit as u64,
            requested: requested as u64,
        })
    } else {
        Ok(())
    }
}

/// Literal defect maximization: every ordered `r`-tuple of vertex subsets
/// is tested for independence, the multiplicity bounds, and (optionally)
/// equitability.
pub fn oracle_defect(h: &Hypergraph, r: usize, s: &SVector, equitable: bool) -> Result<usize> {
    cap("oracle defect n", DEFECT_CAP_N, h.n())?;
    if s.len() != h.n() {
        return Err(Error::Input("multiplicity vector dimension".into()));
    }
    let n = h.n();
    let space = 1u64 << n;
    let mut tuple = vec![0u64; r];
    let mut best = 0usize;
    loop {
        // evaluate the current tuple
        let mut ok = true;
        for &mask in &tuple {
            if !h.is_independent(VSet(mask))? {
                ok = false;
                break;
            }
        }
        if ok {
            for v in 1..=n {
                let count = tuple
                    .iter()
                    .filter(|&&mask| mask & (1u64 << (v - 1)) != 0)
                    .count();
                if count as u32 > s.of(v) {
                    ok = false;
                    break;
                }
            }
        }
        if ok && equitable {
            let sizes: Vec<usize> = tuple.iter().map(|m| m.count_ones() as usize).collect();
            let max = sizes.iter().max().unwrap();
            let min = sizes.iter().min().unwrap();
            if max - min > 1 {
                ok = false;
            }
        }
        if ok {
            let total: usize = tuple.iter().map(|m| m.count_ones() as usize).sum();
            best = best.max(total);
        }
        // odometer
        let mut i = 0;
        loop {
            if i == r {
                return Ok(s.nbar() - best);
            }
            tuple[i] += 1;
            if tuple[i] < space {
                break;
            }
            tuple[i] = 0;
            i += 1;
        }
    }
}

/// Literal chromatic number: try every palette size and every assignment.
pub fn oracle_chi(h: &Hypergraph) -> Result<usize> {
    cap("oracle chi n", CHI_CAP_N, h.n())?;
    if let Some(vertex) = h.singleton_edge() {
        return Err(Error::Uncolorable { vertex });
    }
    let n = h.n();
    if n == 0 {
        return Ok(1);
    }
    for t in 1..=n {
        let mut assign = vec![1usize; n];
        loop {
            let proper = h.edges().iter().all(|e| {
                let mut it = e.iter();
                let first = assign[it.next().unwrap() - 1];
                !it.all(|v| assign[v - 1] == first)
            });
            if proper {
                return Ok(t);
            }
            let mut i = 0;
            loop {
                if i == n {
                    break;
                }
                if assign[i] < t {
                    assign[i] += 1;
                    break;
                }
                assign[i] = 1;
                i += 1;
            }
            if i == n {
                break;
            }
        }
    }
    unreachable!("n colors always suffice without singleton edges")
}

/// Literal longest alternating subsequence: every subsequence is tested.
pub fn oracle_alt(x: &AltVector) -> Result<usize> {
    cap("oracle alt n", ALT_CAP_N, x.len())?;
    let n = x.len();
    let mut best = 0usize;
    for pick in 0u32..(1 << n) {
        let mut ok = true;
        let mut count = 0usize;
        let mut last = 0u8;
        for (i, &v) in x.entries().iter().enumerate() {
            if pick & (1 << i) == 0 {
                continue;
            }
            if v == 0 || v == last {
                ok = false;
                break;
            }
            count += 1;
            last = v;
        }
        if ok {
            best = best.max(count);
        }
    }
    Ok(best)
}

/// Literal single-ordering alternation number: every vector in
/// `({0} ∪ {1..r})^n` is tested for independent classes, then scored with
/// [`oracle_alt`].
pub fn oracle_alt_sigma(h: &Hypergraph, r: usize, sigma: &[usize]) -> Result<usize> {
    cap("oracle alt_sigma n", DEFECT_CAP_N, h.n())?;
    let n = h.n();
    if sigma.len() != n {
        return Err(Error::Input("ordering length".into()));
    }
    let mut entries = vec![0u8; n];
    let mut best = 0usize;
    loop {
        let x = AltVector::new(r, entries.clone())?;
        let mut ok = true;
        for class in x.classes() {
            let image = VSet::from_vertices(class.iter().map(|pos| sigma[pos - 1]));
            if !h.is_independent(image)? {
                ok = false;
                break;
            }
        }
        if ok {
            best = best.max(oracle_alt(&x)?);
        }
        let mut i = 0;
        loop {
            if i == n {
                return Ok(best);
            }
            if (entries[i] as usize) < r {
                entries[i] += 1;
                break;
            }
            entries[i] = 0;
            i += 1;
        }
    }
}

/// Literal Kneser edge enumeration: every nondecreasing index multiset of
/// size `r`, filtered by the per-vertex occurrence counts.
pub fn oracle_kneser_edges(h: &Hypergraph, r: usize, s: &SVector) -> Result<Vec<Vec<u32>>> {
    let m = h.edge_count();
    cap("oracle kneser ground edges", 30, m)?;
    let mut out = Vec::new();
    let mut tuple = vec![1usize; r];
    if m == 0 {
        return Ok(out);
    }
    loop {
        let nondecreasing = tuple.windows(2).all(|w| w[0] <= w[1]);
        if nondecreasing {
            let mut counts = vec![0u32; h.n() + 1];
            let mut ok = true;
            'count: for &ei in &tuple {
                for v in h.edges()[ei - 1].iter() {
                    counts[v] += 1;
                    if counts[v] > s.of(v) {
                        ok = false;
                        break 'count;
                    }
                }
            }
            if ok {
                out.push(tuple.iter().map(|&i| i as u32).collect());
            }
        }
        let mut i = 0;
        loop {
            if i == r {
                out.sort(); // canonical form: lexicographic tuple order
                return Ok(out);
            }
            tuple[i] += 1;
            if tuple[i] <= m {
                break;
            }
            tuple[i] = 1;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use kneser_core::bits::k_subsets;

    #[test]
    fn chi_examples() {
        let k4 = Hypergraph::new(4, k_subsets(4, 2)).unwrap();
        assert_eq!(oracle_chi(&k4).unwrap(), 4);
        assert_eq!(oracle_chi(&Hypergraph::edgeless(5)).unwrap(), 1);
        let singleton = Hypergraph::from_vertex_lists(2, &[vec![1]]).unwrap();
        assert!(matches!(
            oracle_chi(&singleton),
            Err(Error::Uncolorable { .. })
        ));
    }

    #[test]
    fn petersen_chi_three() {
        let ground = Hypergraph::new(5, k_subsets(5, 2)).unwrap();
        let kg = kneser_core::build_kneser(&ground, 2, &kneser_core::Guards::default()).unwrap();
        let hg = kg.to_hypergraph().unwrap();
        assert_eq!(oracle_chi(&hg).unwrap(), 3);
    }

    #[test]
    fn alt_examples() {
        let x = AltVector::new(2, vec![1, 2, 0, 2]).unwrap();
        assert_eq!(oracle_alt(&x).unwrap(), 2);
        let x = AltVector::new(2, vec![1, 2, 1]).unwrap();
        assert_eq!(oracle_alt(&x).unwrap(), 3);
    }

    #[test]
    fn alt_sigma_example() {
        let h = Hypergraph::from_vertex_lists(2, &[vec![1, 2]]).unwrap();
        assert_eq!(oracle_alt_sigma(&h, 2, &[1, 2]).unwrap(), 2);
    }

    #[test]
    fn defect_examples() {
        // ([4], all 2-subsets), r = 2, equitable: best family is two
        // disjoint singletons
        let k4 = Hypergraph::new(4, k_subsets(4, 2)).unwrap();
        let s = SVector::ones(4);
        assert_eq!(oracle_defect(&k4, 2, &s, true).unwrap(), 2);
        assert_eq!(
            oracle_defect(&Hypergraph::edgeless(4), 2, &SVector::ones(4), true).unwrap(),
            0
        );
        // K_{2,3}: one part of each size covers everything, and for the
        // equitable variant min{t, c-1} = min{2, 0} = 0
        let mut edges = Vec::new();
        for a in 1..=2usize {
            for b in 3..=5usize {
                edges.push(VSet::from_vertices([a, b]));
            }
        }
        let k23 = Hypergraph::new(5, edges).unwrap();
        assert_eq!(oracle_defect(&k23, 2, &SVector::ones(5), false).unwrap(), 0);
        assert_eq!(oracle_defect(&k23, 2, &SVector::ones(5), true).unwrap(), 0);
    }

    #[test]
    fn caps_refuse() {
        let h = Hypergraph::edgeless(7);
        assert!(matches!(
            oracle_defect(&h, 2, &SVector::ones(7), false),
            Err(Error::Guard { .. })
        ));
    }
}
