//! Derived Kneser hypergraphs.
//!
//! `KG^r(H)` has one vertex per edge of the ground hypergraph `H` (in
//! canonical edge order) and one edge per `r`-set of pairwise disjoint
//! ground edges. The multiplicity-bounded variant `KG^r_s(H)` instead
//! admits every size-`r` multiset of ground edges in which ground vertex
//! `i` occurs, counting repetitions, at most `s_i` times; its edges can be
//! genuine multisets.

use alloc::vec::Vec;

use crate::bits::{k_subsets, VSet, MAX_VERTICES};
use crate::error::{input_err, Error, Result};
use crate::guards::Guards;
use crate::hypergraph::{Coloring, Hypergraph, SVector};

/// An `r`-uniform multiset hypergraph derived from a ground hypergraph.
///
/// Vertices are `1..=vertex_count`, vertex `i` standing for the `i`-th
/// ground edge in canonical order. Edges are sorted index sequences of
/// length `r` (repetition allowed), listed in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiHypergraph {
    r: usize,
    s: SVector,
    ground_n: usize,
    ground_edges: Vec<VSet>,
    edges: Vec<Vec<u32>>,
}

impl MultiHypergraph {
    pub fn vertex_count(&self) -> usize {
        self.ground_edges.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn s(&self) -> &SVector {
        &self.s
    }

    pub fn ground_n(&self) -> usize {
        self.ground_n
    }

    /// The ground edge represented by vertex `i` (1-based).
    pub fn ground_edge(&self, i: usize) -> VSet {
        self.ground_edges[i - 1]
    }

    pub fn ground_edges(&self) -> &[VSet] {
        &self.ground_edges
    }

    /// Edges as sorted 1-based vertex-index sequences.
    pub fn edges(&self) -> &[Vec<u32>] {
        &self.edges
    }

    /// True iff no edge has all members (distinct vertices of its support)
    /// the same color. An edge whose support is a single vertex is
    /// monochromatic under every coloring.
    pub fn is_proper(&self, c: &Coloring) -> Result<bool> {
        if c.assignment().len() != self.vertex_count() {
            return input_err(alloc::format!(
                "coloring covers {} vertices, Kneser hypergraph has {}",
                c.assignment().len(),
                self.vertex_count()
            ));
        }
        Ok(self.edges.iter().all(|e| {
            let first = c.color_of(e[0] as usize);
            !e.iter().all(|&v| c.color_of(v as usize) == first)
        }))
    }

    /// Plain hypergraph on the same vertices whose edges are the distinct
    /// supports of the multiset edges. Proper colorings coincide, so
    /// chromatic numbers agree. Requires the vertex count to fit the
    /// bitmask cap.
    pub fn to_hypergraph(&self) -> Result<Hypergraph> {
        if self.vertex_count() > MAX_VERTICES {
            return Err(Error::Guard {
                what: "Kneser vertex count (bitmask width)",
                limit: MAX_VERTICES as u64,
                requested: self.vertex_count() as u64,
            });
        }
        let supports: Vec<VSet> = self
            .edges
            .iter()
            .map(|e| VSet::from_vertices(e.iter().map(|&v| v as usize)))
            .collect();
        Hypergraph::new(self.vertex_count(), supports)
    }
}

/// True iff each ground vertex `i` occurs in at most `s_i` members of the
/// multiset, counting repetitions. `members` holds 1-based ground-edge
/// indices in any order.
pub fn is_s_disjoint(h: &Hypergraph, members: &[usize], s: &SVector) -> Result<bool> {
    s.check_dim(h.n())?;
    let mut counts = alloc::vec![0u32; h.n() + 1];
    for &ei in members {
        if ei < 1 || ei > h.edge_count() {
            return input_err(alloc::format!(
                "edge index {ei} outside 1..={}",
                h.edge_count()
            ));
        }
        for v in h.edges()[ei - 1].iter() {
            counts[v] += 1;
            if counts[v] > s.of(v) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Builds `KG^r_s(H)`: all size-`r` multisets of ground-edge indices whose
/// per-vertex occurrence counts respect `s`.
pub fn build_kneser_s(
    h: &Hypergraph,
    r: usize,
    s: &SVector,
    guards: &Guards,
) -> Result<MultiHypergraph> {
    if r < 2 {
        return input_err(alloc::format!("r must be >= 2, got {r}"));
    }
    s.check_dim(h.n())?;
    let m = h.edge_count();
    guards.check("Kneser vertex count", guards.max_kg_vertices as u64, m as u64)?;

    let mut edges: Vec<Vec<u32>> = Vec::new();
    let mut usage = alloc::vec![0u32; h.n() + 1];
    let mut stack: Vec<u32> = Vec::with_capacity(r);

    #[allow(clippy::too_many_arguments)]
    fn extend(
        h: &Hypergraph,
        s: &SVector,
        r: usize,
        start: usize,
        usage: &mut [u32],
        stack: &mut Vec<u32>,
        edges: &mut Vec<Vec<u32>>,
        cap: u64,
    ) -> Result<()> {
        if stack.len() == r {
            if edges.len() as u64 >= cap {
                return Err(Error::Guard {
                    what: "Kneser edge count",
                    limit: cap,
                    requested: cap + 1,
                });
            }
            edges.push(stack.clone());
            return Ok(());
        }
        for i in start..=h.edge_count() {
            let e = h.edges()[i - 1];
            let mut ok = true;
            for v in e.iter() {
                if usage[v] + 1 > s.of(v) {
                    ok = false;
                    break;
                }
            }
            if !ok {
                continue;
            }
            for v in e.iter() {
                usage[v] += 1;
            }
            stack.push(i as u32);
            let res = extend(h, s, r, i, usage, stack, edges, cap);
            stack.pop();
            for v in e.iter() {
                usage[v] -= 1;
            }
            res?;
        }
        Ok(())
    }

    extend(
        h,
        s,
        r,
        1,
        &mut usage,
        &mut stack,
        &mut edges,
        guards.max_kg_edges,
    )?;

    Ok(MultiHypergraph {
        r,
        s: s.clone(),
        ground_n: h.n(),
        ground_edges: h.edges().to_vec(),
        edges,
    })
}

/// Builds `KG^r(H)`: all `r`-sets of pairwise disjoint ground edges.
/// Identical to [`build_kneser_s`] with the all-ones vector.
pub fn build_kneser(h: &Hypergraph, r: usize, guards: &Guards) -> Result<MultiHypergraph> {
    build_kneser_s(h, r, &SVector::ones(h.n()), guards)
}

/// All `k`-subsets of `[n]` whose elements are pairwise at cyclic distance
/// at least `s`: `s <= |x - y| <= n - s` for every pair.
pub fn s_stable_vertices(n: usize, k: usize, s: usize) -> Result<Vec<VSet>> {
    if s < 2 {
        return input_err(alloc::format!("stability parameter must be >= 2, got {s}"));
    }
    if n < s * k {
        return input_err(alloc::format!("need n >= s*k, got n={n}, s*k={}", s * k));
    }
    if n > MAX_VERTICES {
        return Err(Error::Guard {
            what: "vertex count (bitmask width)",
            limit: MAX_VERTICES as u64,
            requested: n as u64,
        });
    }
    Ok(k_subsets(n, k)
        .into_iter()
        .filter(|set| {
            let vs = set.vertices();
            vs.iter().enumerate().all(|(i, &x)| {
                vs[i + 1..].iter().all(|&y| {
                    let d = y - x;
                    d >= s && d <= n - s
                })
            })
        })
        .collect())
}
