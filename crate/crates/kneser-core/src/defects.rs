//! Colorability defects with extractable witnesses.
//!
//! `cd^r_s(H) = n̄ - max Σ|N_j|` over size-`r` multiset families of
//! independent sets in which vertex `i` occurs at most `s_i` times
//! (`n̄ = Σ s_i`); `ecd^r_s` restricts the maximization to families whose
//! part sizes pairwise differ by at most one. For the all-ones vector both
//! coincide with their removal formulations (fewest vertices to delete so
//! the rest is properly / equitably `r`-colorable), which this module also
//! computes directly as an independent cross-check.
//!
//! The maximizer enumerates part-size profiles in decreasing total, then
//! packs parts by backtracking over the independent sets of each size,
//! pruning on remaining per-vertex capacity. Everything is deterministic.

use alloc::vec::Vec;

use crate::alt::{alt_r, AltReport};
use crate::bits::{ceil_div, k_subsets, VSet};
use crate::chi::{equitable_colorable, is_t_colorable};
use crate::error::{input_err, Error, Result};
use crate::guards::Guards;
use crate::hypergraph::{Hypergraph, SVector};

/// An ordered record of the family `{N_1, ..., N_r}` behind a defect value.
/// Parts are reported size-descending, then lexicographic; the maximization
/// is over unordered families, so this is a canonical representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DisjointFamily {
    pub parts: Vec<VSet>,
    /// `Σ|N_j|`.
    pub score: usize,
    /// Sizes pairwise differ by at most one.
    pub equitable: bool,
}

impl DisjointFamily {
    fn from_parts(mut parts: Vec<VSet>) -> Self {
        parts.sort_by(|a, b| b.len().cmp(&a.len()).then(VSet::canon_cmp(*a, *b)));
        let score = parts.iter().map(|p| p.len()).sum();
        let equitable = match (parts.first(), parts.last()) {
            (Some(max), Some(min)) => max.len() - min.len() <= 1,
            _ => true,
        };
        DisjointFamily {
            parts,
            score,
            equitable,
        }
    }

    /// Each vertex occurs in at most `s_i` parts, counting repetitions.
    pub fn is_s_disjoint(&self, s: &SVector) -> bool {
        for v in 1..=s.len() {
            let count = self.parts.iter().filter(|p| p.contains(v)).count();
            if count as u32 > s.of(v) {
                return false;
            }
        }
        true
    }

    /// Every part is independent in `h`.
    pub fn all_independent(&self, h: &Hypergraph) -> bool {
        self.parts
            .iter()
            .all(|p| h.is_independent(*p).unwrap_or(false))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DefectMethod {
    Family,
    Removal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefectReport {
    pub value: usize,
    pub witness: DisjointFamily,
    pub method: DefectMethod,
    pub r: usize,
    pub s: SVector,
    /// Packing nodes visited; deterministic cost measure.
    pub nodes: u64,
}

/// All independent sets grouped by size, each size list in canonical order.
fn independent_sets_by_size(h: &Hypergraph) -> Vec<Vec<VSet>> {
    let n = h.n();
    let by_v = h.edges_by_vertex();
    let mut by_size: Vec<Vec<VSet>> = alloc::vec![Vec::new(); n + 1];
    by_size[0].push(VSet::EMPTY);

    fn extend(
        h: &Hypergraph,
        by_v: &[Vec<usize>],
        cur: VSet,
        next: usize,
        by_size: &mut [Vec<VSet>],
    ) {
        for v in next..=h.n() {
            let cand = cur.with(v);
            let ok = by_v[v]
                .iter()
                .all(|&ei| !h.edges()[ei].is_subset_of(cand));
            if ok {
                by_size[cand.len()].push(cand);
                extend(h, by_v, cand, v + 1, by_size);
            }
        }
    }

    extend(h, &by_v, VSet::EMPTY, 1, &mut by_size);
    // DFS emits each size class in increasing lexicographic order already,
    // but sort defensively so canonical order never depends on It.
    for list in by_size.iter_mut() {
        list.sort_by(|a, b| VSet::canon_cmp(*a, *b));
    }
    by_size
}

struct Packer<'a> {
    by_size: &'a [Vec<VSet>],
    caps: Vec<u32>,
    chosen: Vec<(usize, usize)>, // (size, index into by_size[size])
    nodes: u64,
}

impl<'a> Packer<'a> {
    fn pack(&mut self, profile: &[usize], j: usize) -> bool {
        self.nodes += 1;
        if j == profile.len() {
            return true;
        }
        let m = profile[j];
        // unordered family: for a run of equal sizes only nondecreasing
        // candidate indices need to be tried (repeats allowed)
        let start = match self.chosen.last() {
            Some(&(psize, pidx)) if psize == m => pidx,
            _ => 0,
        };
        let parts_left = profile.len() - j - 1;
        let remaining: usize = profile[j + 1..].iter().sum();
        'cand: for idx in start..self.by_size[m].len() {
            let set = self.by_size[m][idx];
            for v in set.iter() {
                if self.caps[v] == 0 {
                    continue 'cand;
                }
            }
            for v in set.iter() {
                self.caps[v] -= 1;
            }
            // capacity bound: the rest of the profile must still fit
            let cap_total: usize = (1..self.caps.len())
                .map(|v| (self.caps[v] as usize).min(parts_left))
                .sum();
            let feasible = remaining <= cap_total;
            self.chosen.push((m, idx));
            if feasible && self.pack(profile, j + 1) {
                return true;
            }
            self.chosen.pop();
            for v in set.iter() {
                self.caps[v] += 1;
            }
        }
        false
    }
}

/// Nonincreasing size profiles of length `r` summing to `m`, entries at
/// most `max_part`, in decreasing lexicographic order.
fn size_profiles(m: usize, r: usize, max_part: usize, equitable: bool) -> Vec<Vec<usize>> {
    if equitable {
        let q = m / r;
        let rem = m % r;
        let top = if rem > 0 { q + 1 } else { q };
        if top > max_part {
            return Vec::new();
        }
        let mut p = alloc::vec![q + 1; rem];
        p.extend(core::iter::repeat_n(q, r - rem));
        return alloc::vec![p];
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(r);
    fn rec(m: usize, slots: usize, max_part: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 0 {
            if m == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let hi = m.min(max_part);
        let lo = ceil_div(m, slots);
        if lo > hi {
            return;
        }
        for first in (lo..=hi).rev() {
            cur.push(first);
            rec(m - first, slots - 1, first, cur, out);
            cur.pop();
        }
    }
    rec(m, r, max_part, &mut cur, &mut out);
    out
}

fn defect_family(
    h: &Hypergraph,
    r: usize,
    s: &SVector,
    equitable: bool,
    guards: &Guards,
) -> Result<DefectReport> {
    if r < 2 {
        return input_err(alloc::format!("r must be >= 2, got {r}"));
    }
    s.check_dim(h.n())?;
    guards.check("defect ground size", guards.max_n as u64, h.n() as u64)?;

    let by_size = independent_sets_by_size(h);
    let max_part = by_size.iter().rposition(|l| !l.is_empty()).unwrap_or(0);
    let nbar = s.nbar();
    let upper = (r * max_part).min(s.entries().iter().map(|&x| (x as usize).min(r)).sum());

    let mut nodes = 0u64;
    for total in (0..=upper).rev() {
        for profile in size_profiles(total, r, max_part, equitable) {
            let mut packer = Packer {
                by_size: &by_size,
                caps: core::iter::once(0)
                    .chain(s.entries().iter().copied())
                    .collect(),
                chosen: Vec::with_capacity(r),
                nodes: 0,
            };
            let ok = packer.pack(&profile, 0);
            nodes += packer.nodes;
            if ok {
                let parts: Vec<VSet> = packer
                    .chosen
                    .iter()
                    .map(|&(sz, idx)| by_size[sz][idx])
                    .collect();
                let witness = DisjointFamily::from_parts(parts);
                debug_assert!(witness.is_s_disjoint(s));
                debug_assert!(witness.all_independent(h));
                debug_assert_eq!(witness.score, total);
                return Ok(DefectReport {
                    value: nbar - total,
                    witness,
                    method: DefectMethod::Family,
                    r,
                    s: s.clone(),
                    nodes,
                });
            }
        }
    }
    // total = 0 always packs with r empty parts
    Err(Error::Inconsistency(alloc::string::String::from(
        "defect search exhausted without packing the empty profile",
    )))
}

/// Exact `cd^r_s(H)` with a maximizing family.
pub fn cd(h: &Hypergraph, r: usize, s: &SVector, guards: &Guards) -> Result<DefectReport> {
    defect_family(h, r, s, false, guards)
}

/// Exact `ecd^r_s(H)` with a maximizing equitable family.
pub fn ecd(h: &Hypergraph, r: usize, s: &SVector, guards: &Guards) -> Result<DefectReport> {
    defect_family(h, r, s, true, guards)
}

/// Removal formulation of `cd^r`: brute force over removal sets in
/// increasing size until the induced subhypergraph is properly
/// `r`-colorable.
pub fn cd_removal_oracle(h: &Hypergraph, r: usize, guards: &Guards) -> Result<usize> {
    removal_oracle(h, r, guards, false)
}

/// Removal formulation of `ecd^r`: smallest removal after which the rest
/// admits an equitable `r`-coloring.
pub fn ecd_removal_oracle(h: &Hypergraph, r: usize, guards: &Guards) -> Result<usize> {
    removal_oracle(h, r, guards, true)
}

fn removal_oracle(h: &Hypergraph, r: usize, guards: &Guards, equitable: bool) -> Result<usize> {
    if r < 2 {
        return input_err(alloc::format!("r must be >= 2, got {r}"));
    }
    guards.check("removal ground size", guards.max_n as u64, h.n() as u64)?;
    let full = h.full_set();
    for size in 0..=h.n() {
        for removed in k_subsets(h.n(), size) {
            let (sub, _) = h.induced(full.difference(removed))?;
            let ok = if equitable {
                equitable_colorable(&sub, r)?
            } else if sub.singleton_edge().is_some() {
                false
            } else {
                is_t_colorable(&sub, r)?
            };
            if ok {
                return Ok(size);
            }
        }
    }
    unreachable!("removing all vertices always leaves a colorable hypergraph")
}

/// Largest prime factor of `r`.
pub fn mu(r: usize) -> Result<usize> {
    if r < 2 {
        return input_err(alloc::format!("mu requires r >= 2, got {r}"));
    }
    let mut x = r;
    let mut largest = 1;
    let mut p = 2;
    while p * p <= x {
        while x.is_multiple_of(p) {
            largest = p;
            x /= p;
        }
        p += 1;
    }
    if x > 1 {
        largest = x;
    }
    Ok(largest)
}

/// The chromatic-number lower bounds derivable from the defect and
/// alternation parameters.
#[derive(Clone, Debug)]
pub struct BoundValues {
    pub cd: DefectReport,
    pub ecd: DefectReport,
    /// Present only for the all-ones vector within the ordering guard.
    pub alt: Option<AltReport>,
    pub alt_skipped: Option<&'static str>,
    /// `ceil(cd^r_s / (r-1))`.
    pub cd_bound: usize,
    /// `ceil(ecd^r_s / (r-1))`.
    pub ecd_bound: usize,
    /// `ceil((n - alt^r) / (r-1))`.
    pub alt_bound: Option<usize>,
    /// The defect bounds are valid lower bounds only when
    /// `max s_i < mu(r)`.
    pub defect_bounds_applicable: bool,
    /// Maximum over the applicable bounds; 0 when none applies.
    pub best: usize,
}

pub fn bound_values(h: &Hypergraph, r: usize, s: &SVector, guards: &Guards) -> Result<BoundValues> {
    let cd_rep = cd(h, r, s, guards)?;
    let ecd_rep = ecd(h, r, s, guards)?;
    let cd_bound = ceil_div(cd_rep.value, r - 1);
    let ecd_bound = ceil_div(ecd_rep.value, r - 1);
    let applicable = (s.max_entry() as usize) < mu(r)?;

    let (alt, alt_skipped) = if !s.is_all_ones() {
        (None, Some("alternation bound is defined for the all-ones vector"))
    } else if h.n() > guards.max_alt_n {
        (None, Some("ordering enumeration guard"))
    } else {
        (Some(alt_r(h, r, guards)?), None)
    };
    let alt_bound = alt.as_ref().map(|a| ceil_div(h.n() - a.value, r - 1));

    let mut best = 0;
    if applicable {
        best = best.max(cd_bound).max(ecd_bound);
    }
    if let Some(ab) = alt_bound {
        best = best.max(ab);
    }
    Ok(BoundValues {
        cd: cd_rep,
        ecd: ecd_rep,
        alt,
        alt_skipped,
        cd_bound,
        ecd_bound,
        alt_bound,
        defect_bounds_applicable: applicable,
        best,
    })
}
