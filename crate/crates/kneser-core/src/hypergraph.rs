//! Ground hypergraphs, colorings, and per-vertex multiplicity vectors.
//!
//! A [`Hypergraph`] is a vertex count `n` (ids `1..=n`) plus a duplicate-free
//! set of nonempty edges held in canonical order (size, then lex). The
//! canonical order makes every downstream construction deterministic, file
//! output byte-stable, and vertex indexing of derived Kneser hypergraphs
//! well-defined.

use alloc::vec::Vec;

use crate::bits::{VSet, MAX_VERTICES};
use crate::error::{input_err, Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<VSet>,
}

/// Side information from canonicalizing raw edge input.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BuildStats {
    /// Duplicate edges dropped while canonicalizing.
    pub duplicates_removed: usize,
}

impl Hypergraph {
    /// Builds a hypergraph, validating ranges and canonicalizing the edge
    /// set. Duplicate edges are dropped silently; use [`Self::with_stats`]
    /// to observe how many.
    pub fn new(n: usize, edges: Vec<VSet>) -> Result<Self> {
        Self::with_stats(n, edges).map(|(h, _)| h)
    }

    pub fn with_stats(n: usize, mut edges: Vec<VSet>) -> Result<(Self, BuildStats)> {
        if n > MAX_VERTICES {
            return Err(Error::Guard {
                what: "vertex count (bitmask width)",
                limit: MAX_VERTICES as u64,
                requested: n as u64,
            });
        }
        let full = VSet::full(n);
        for e in &edges {
            if e.is_empty() {
                return input_err("empty edge");
            }
            if !e.is_subset_of(full) {
                return input_err(alloc::format!(
                    "edge {e} has a vertex outside 1..={n}"
                ));
            }
        }
        edges.sort_by(|a, b| VSet::canon_cmp(*a, *b));
        let before = edges.len();
        edges.dedup();
        let stats = BuildStats {
            duplicates_removed: before - edges.len(),
        };
        Ok((Hypergraph { n, edges }, stats))
    }

    /// Convenience constructor from 1-based vertex lists.
    pub fn from_vertex_lists(n: usize, lists: &[Vec<usize>]) -> Result<Self> {
        let mut edges = Vec::with_capacity(lists.len());
        for l in lists {
            for &v in l {
                if v < 1 || v > n {
                    return input_err(alloc::format!("vertex {v} outside 1..={n}"));
                }
            }
            edges.push(VSet::from_vertices(l.iter().copied()));
        }
        Self::new(n, edges)
    }

    pub fn edgeless(n: usize) -> Self {
        Hypergraph::new(n, Vec::new()).expect("edgeless construction cannot fail for n <= 63")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order.
    pub fn edges(&self) -> &[VSet] {
        &self.edges
    }

    pub fn full_set(&self) -> VSet {
        VSet::full(self.n)
    }

    /// First singleton edge, if any. A hypergraph with a singleton edge has
    /// no proper coloring at all.
    pub fn singleton_edge(&self) -> Option<usize> {
        self.edges
            .iter()
            .find(|e| e.len() == 1)
            .and_then(|e| e.min_vertex())
    }

    /// True iff every edge has size 2.
    pub fn is_graph(&self) -> bool {
        self.edges.iter().all(|e| e.len() == 2)
    }

    fn check_subset(&self, s: VSet) -> Result<()> {
        if !s.is_subset_of(self.full_set()) {
            return input_err(alloc::format!(
                "set {s} has a vertex outside 1..={}",
                self.n
            ));
        }
        Ok(())
    }

    /// True iff no edge is entirely contained in `s`.
    pub fn is_independent(&self, s: VSet) -> Result<bool> {
        self.check_subset(s)?;
        Ok(self.is_independent_unchecked(s))
    }

    pub(crate) fn is_independent_unchecked(&self, s: VSet) -> bool {
        self.edges.iter().all(|e| !e.is_subset_of(s))
    }

    /// Inclusion-minimal edges. Independence against these is equivalent to
    /// independence against the full edge set.
    pub fn minimal_edges(&self) -> Vec<VSet> {
        let mut min = Vec::new();
        // canonical order sorts by size, so any strict subset precedes its superset
        for &e in &self.edges {
            if !min.iter().any(|m: &VSet| m.is_subset_of(e)) {
                min.push(e);
            }
        }
        min
    }

    /// Induced subhypergraph on `s`, relabeled to `1..=|s|` preserving id
    /// order. Also returns the relabeling map: entry `i` holds the original
    /// id of new vertex `i + 1`.
    pub fn induced(&self, s: VSet) -> Result<(Hypergraph, Vec<usize>)> {
        self.check_subset(s)?;
        let old_ids = s.vertices();
        let mut new_of_old = [0usize; MAX_VERTICES + 1];
        for (i, &v) in old_ids.iter().enumerate() {
            new_of_old[v] = i + 1;
        }
        let mut edges = Vec::new();
        for &e in &self.edges {
            if e.is_subset_of(s) {
                edges.push(VSet::from_vertices(e.iter().map(|v| new_of_old[v])));
            }
        }
        Ok((Hypergraph::new(old_ids.len(), edges)?, old_ids))
    }

    /// True iff `c` leaves no edge monochromatic. Singleton edges are
    /// monochromatic under every coloring.
    pub fn is_proper(&self, c: &Coloring) -> Result<bool> {
        if c.assignment().len() != self.n {
            return input_err(alloc::format!(
                "coloring covers {} vertices, hypergraph has {}",
                c.assignment().len(),
                self.n
            ));
        }
        Ok(self.edges.iter().all(|e| !c.is_monochromatic(*e)))
    }

    /// Edges containing each vertex, as indices into [`Self::edges`].
    pub(crate) fn edges_by_vertex(&self) -> Vec<Vec<usize>> {
        let mut by_v = alloc::vec![Vec::new(); self.n + 1];
        for (i, e) in self.edges.iter().enumerate() {
            for v in e.iter() {
                by_v[v].push(i);
            }
        }
        by_v
    }
}

/// A total color assignment with a declared palette `1..=t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    t: usize,
    assign: Vec<usize>,
}

impl Coloring {
    pub fn new(t: usize, assign: Vec<usize>) -> Result<Self> {
        if t == 0 {
            return input_err("palette size must be positive");
        }
        for (i, &c) in assign.iter().enumerate() {
            if c < 1 || c > t {
                return input_err(alloc::format!(
                    "vertex {} has color {c} outside 1..={t}",
                    i + 1
                ));
            }
        }
        Ok(Coloring { t, assign })
    }

    pub fn palette(&self) -> usize {
        self.t
    }

    /// 1-based color per vertex, vertex `v` at index `v - 1`.
    pub fn assignment(&self) -> &[usize] {
        &self.assign
    }

    pub fn color_of(&self, v: usize) -> usize {
        self.assign[v - 1]
    }

    /// Sizes of all `t` declared classes; empty classes count as 0.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = alloc::vec![0usize; self.t];
        for &c in &self.assign {
            sizes[c - 1] += 1;
        }
        sizes
    }

    /// True iff the declared class sizes pairwise differ by at most one.
    pub fn is_equitable(&self) -> bool {
        let sizes = self.class_sizes();
        match (sizes.iter().max(), sizes.iter().min()) {
            (Some(max), Some(min)) => max - min <= 1,
            _ => true,
        }
    }

    fn is_monochromatic(&self, e: VSet) -> bool {
        let mut it = e.iter();
        let first = match it.next() {
            Some(v) => self.assign[v - 1],
            None => return false,
        };
        it.all(|v| self.assign[v - 1] == first)
    }
}

/// Per-vertex multiplicity bounds `s = (s_1, ..., s_n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SVector {
    entries: Vec<u32>,
}

impl SVector {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.contains(&0) {
            return input_err("multiplicity entries must be >= 1");
        }
        Ok(SVector { entries })
    }

    /// The all-ones vector, recovering plain pairwise disjointness.
    pub fn ones(n: usize) -> Self {
        SVector {
            entries: alloc::vec![1; n],
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Bound for vertex `v` (1-based).
    pub fn of(&self, v: usize) -> u32 {
        self.entries[v - 1]
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// Total multiplicity `Σ s_i`.
    pub fn nbar(&self) -> usize {
        self.entries.iter().map(|&s| s as usize).sum()
    }

    pub fn max_entry(&self) -> u32 {
        self.entries.iter().copied().max().unwrap_or(1)
    }

    pub fn is_all_ones(&self) -> bool {
        self.entries.iter().all(|&s| s == 1)
    }

    pub(crate) fn check_dim(&self, n: usize) -> Result<()> {
        if self.len() != n {
            return input_err(alloc::format!(
                "multiplicity vector has {} entries, hypergraph has {n} vertices",
                self.len()
            ));
        }
        Ok(())
    }
}

/// First-fit coloring in canonical vertex order. The palette size is an
/// upper bound for the chromatic number and seeds the exact solver.
pub fn greedy_upper(h: &Hypergraph) -> Result<Coloring> {
    if let Some(v) = h.singleton_edge() {
        return Err(Error::Uncolorable { vertex: v });
    }
    if h.n() == 0 {
        return Coloring::new(1, Vec::new());
    }
    let by_v = h.edges_by_vertex();
    let mut assign = alloc::vec![0usize; h.n()];
    let mut used = 1usize;
    for v in 1..=h.n() {
        let mut c = 1usize;
        'try_color: loop {
            for &ei in &by_v[v] {
                let e = h.edges()[ei];
                let mut all_same = true;
                for u in e.iter() {
                    if u == v {
                        continue;
                    }
                    if assign[u - 1] != c {
                        all_same = false;
                        break;
                    }
                }
                if all_same {
                    // coloring v with c would finish edge e monochromatically
                    c += 1;
                    continue 'try_color;
                }
            }
            break;
        }
        assign[v - 1] = c;
        used = used.max(c);
    }
    Coloring::new(used, assign)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn h(n: usize, lists: &[&[usize]]) -> Hypergraph {
        Hypergraph::from_vertex_lists(n, &lists.iter().map(|l| l.to_vec()).collect::<Vec<_>>())
            .unwrap()
    }

    #[test]
    fn independence_examples() {
        let g = h(3, &[&[1, 2]]);
        assert!(g.is_independent(VSet::from_vertices([1, 3])).unwrap());
        assert!(!g.is_independent(VSet::from_vertices([1, 2])).unwrap());
        assert!(g.is_independent(VSet::EMPTY).unwrap());
        assert!(g.is_independent(VSet::from_vertices([4])).is_err());
    }

    #[test]
    fn induced_examples() {
        let g = h(4, &[&[1, 2], &[3, 4]]);
        let (sub, map) = g.induced(VSet::from_vertices([3, 4])).unwrap();
        assert_eq!(sub, h(2, &[&[1, 2]]));
        assert_eq!(map, vec![3, 4]);

        let (sub, _) = g.induced(VSet::from_vertices([1, 3])).unwrap();
        assert_eq!(sub, h(2, &[]));

        let g = h(3, &[&[1, 2, 3]]);
        let (sub, map) = g.induced(g.full_set()).unwrap();
        assert_eq!(sub, g);
        assert_eq!(map, vec![1, 2, 3]);
    }

    #[test]
    fn induced_restriction_is_idempotent() {
        let g = h(5, &[&[1, 2], &[2, 3, 4], &[4, 5]]);
        let (sub, _) = g.induced(VSet::from_vertices([2, 3, 4])).unwrap();
        let (sub2, _) = sub.induced(sub.full_set()).unwrap();
        assert_eq!(sub, sub2);
    }

    #[test]
    fn properness_examples() {
        let g = h(2, &[&[1, 2]]);
        assert!(g.is_proper(&Coloring::new(2, vec![1, 2]).unwrap()).unwrap());
        assert!(!g.is_proper(&Coloring::new(2, vec![1, 1]).unwrap()).unwrap());

        let singleton = h(3, &[&[1], &[2, 3]]);
        for assign in [vec![1, 1, 1], vec![1, 2, 1], vec![2, 2, 1]] {
            assert!(!singleton.is_proper(&Coloring::new(2, assign).unwrap()).unwrap());
        }
    }

    #[test]
    fn equitability_examples() {
        let c = Coloring::new(2, vec![1, 1, 1, 2, 2]).unwrap();
        assert!(c.is_equitable());
        let c = Coloring::new(2, vec![1, 1, 1, 1, 2, 2]).unwrap();
        assert!(!c.is_equitable());
        // empty class counts as size 0
        let c = Coloring::new(3, vec![1, 2]).unwrap();
        assert!(c.is_equitable());
    }

    #[test]
    fn canonical_order_and_dedup() {
        let (g, stats) = Hypergraph::with_stats(
            4,
            vec![
                VSet::from_vertices([2, 3]),
                VSet::from_vertices([1, 2, 3]),
                VSet::from_vertices([1, 4]),
                VSet::from_vertices([2, 3]),
                VSet::from_vertices([4]),
            ],
        )
        .unwrap();
        assert_eq!(stats.duplicates_removed, 1);
        let got: Vec<Vec<usize>> = g.edges().iter().map(|e| e.vertices()).collect();
        assert_eq!(
            got,
            vec![vec![4], vec![1, 4], vec![2, 3], vec![1, 2, 3]]
        );
    }

    #[test]
    fn minimal_edges_preserve_independence() {
        let g = h(5, &[&[1, 2], &[1, 2, 3], &[3, 4, 5], &[2, 4]]);
        let min = Hypergraph::new(5, g.minimal_edges()).unwrap();
        for mask in 0..(1u64 << 5) {
            let s = VSet(mask);
            assert_eq!(
                g.is_independent(s).unwrap(),
                min.is_independent(s).unwrap()
            );
        }
        assert_eq!(min.edge_count(), 3);
    }

    #[test]
    fn greedy_examples() {
        assert_eq!(greedy_upper(&Hypergraph::edgeless(5)).unwrap().palette(), 1);
        assert_eq!(greedy_upper(&h(2, &[&[1, 2]])).unwrap().palette(), 2);
        assert!(matches!(
            greedy_upper(&h(2, &[&[1]])),
            Err(Error::Uncolorable { vertex: 1 })
        ));
        // greedy output is always proper
        let g = h(6, &[&[1, 2], &[2, 3], &[3, 4, 5], &[5, 6], &[1, 6]]);
        let c = greedy_upper(&g).unwrap();
        assert!(g.is_proper(&c).unwrap());
    }

    #[test]
    fn rejects_out_of_cap() {
        assert!(Hypergraph::new(64, vec![]).is_err());
        assert!(Hypergraph::new(63, vec![]).is_ok());
    }
}
