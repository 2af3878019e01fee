//! Benchmark families, their closed-form parameters, and explicit
//! colorings.
//!
//! The central family is `H(n, k, A)`: vertex set `[n]`, edges all
//! `k`-subsets not contained in the distinguished set `A`. Its defects have
//! closed forms, its Kneser hypergraphs have known or conjectured chromatic
//! numbers, and explicit alternation witnesses and proper colorings exist
//! for every parameter range. The module also generates complete
//! multipartite graphs, the `r`-fold join used in the hardness reduction,
//! and drives a grid explorer for the exact-chromatic-number conjecture.

use alloc::string::String;
use alloc::vec::Vec;

use crate::alt::AltVector;
use crate::bits::{ceil_div, k_subsets, VSet, MAX_VERTICES};
use crate::chi::{chromatic_number_budgeted, ChiOutcome};
use crate::defects::ecd;
use crate::error::{input_err, Error, Result};
use crate::guards::Guards;
use crate::hypergraph::{Coloring, Hypergraph, SVector};
use crate::kneser::build_kneser;

/// Parameters of `H(n, k, A)`. The distinguished set is normalized to
/// `{1..|A|}` internally; the original labels are kept for reporting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HnkaParams {
    n: usize,
    k: usize,
    a_size: usize,
    r: usize,
    original_a: Vec<usize>,
    relaxed: bool,
}

impl HnkaParams {
    /// Standard constructor: requires `n >= r*k`.
    pub fn new(n: usize, k: usize, a: &[usize], r: usize) -> Result<Self> {
        Self::build(n, k, a, r, false)
    }

    /// Relaxed constructor for cross-checks: only `n >= k` is required.
    /// Values computed in this mode are for oracle comparison, not for
    /// chromatic-number claims.
    pub fn new_relaxed(n: usize, k: usize, a: &[usize], r: usize) -> Result<Self> {
        Self::build(n, k, a, r, true)
    }

    fn build(n: usize, k: usize, a: &[usize], r: usize, relaxed: bool) -> Result<Self> {
        if n == 0 || k == 0 {
            return input_err("n and k must be positive");
        }
        if n > MAX_VERTICES {
            return Err(Error::Guard {
                what: "vertex count (bitmask width)",
                limit: MAX_VERTICES as u64,
                requested: n as u64,
            });
        }
        if r < 2 {
            return input_err(alloc::format!("r must be >= 2, got {r}"));
        }
        if relaxed {
            if n < k {
                return input_err(alloc::format!("need n >= k, got n={n}, k={k}"));
            }
        } else if n < r * k {
            return input_err(alloc::format!("need n >= r*k, got n={n}, r*k={}", r * k));
        }
        let mut sorted = a.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != a.len() {
            return input_err("distinguished set has repeated elements");
        }
        if sorted.iter().any(|&v| v < 1 || v > n) {
            return input_err(alloc::format!("distinguished set not inside 1..={n}"));
        }
        if sorted.len() >= n {
            return input_err("distinguished set must be a proper subset of the vertices");
        }
        Ok(HnkaParams {
            n,
            k,
            a_size: sorted.len(),
            r,
            original_a: a.to_vec(),
            relaxed,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn a_size(&self) -> usize {
        self.a_size
    }

    /// The normalized distinguished set `{1..|A|}`.
    pub fn a_set(&self) -> VSet {
        VSet::full(self.a_size)
    }

    pub fn original_a(&self) -> &[usize] {
        &self.original_a
    }

    pub fn is_relaxed(&self) -> bool {
        self.relaxed
    }
}

/// `H(n, k, A)`: all `k`-subsets of `[n]` not contained in `A`.
pub fn hnka(p: &HnkaParams) -> Hypergraph {
    let a = p.a_set();
    let edges: Vec<VSet> = k_subsets(p.n, p.k)
        .into_iter()
        .filter(|e| !e.is_subset_of(a))
        .collect();
    Hypergraph::new(p.n, edges).expect("validated parameters")
}

/// Closed form for `cd^r(H(n,k,A))`:
/// `max(0, n - (r-1)(k-1) - max(|A|, k-1))`. The subtraction saturates at
/// zero, where an all-covering family exists outright.
pub fn cd_hnka_closed(p: &HnkaParams) -> usize {
    let raw = p.n as i64
        - ((p.r - 1) * (p.k - 1)) as i64
        - (p.a_size.max(p.k - 1)) as i64;
    raw.max(0) as usize
}

/// Closed form for `ecd^r(H(n,k,A))`, piecewise in `|A|`.
pub fn ecd_hnka_closed(p: &HnkaParams) -> usize {
    let (n, k, r, a) = (p.n, p.k, p.r, p.a_size);
    if a < k {
        n - r * (k - 1)
    } else if a <= r * k - 2 {
        n - r * (k - 1) - a / k
    } else {
        n - a
    }
}

/// The explicit alternation witness for `H(n,k,A)` under an arbitrary
/// ordering, together with its guaranteed value:
/// `r(k-1)` when `|A| <= k-1`, else `|A|` for `r = 2`, `|A| + 1` for
/// `r = 3`, and `|A| + min(n-|A|, (r-2)(k-1))` for `r >= 4`.
pub fn alt_witness_hnka(p: &HnkaParams, sigma: &[usize]) -> Result<(AltVector, usize)> {
    if p.k < 2 {
        return input_err("the alternation witness construction needs k >= 2");
    }
    if sigma.len() != p.n {
        return input_err("ordering length mismatch");
    }
    let mut position_of = alloc::vec![0usize; p.n + 1];
    let mut seen = alloc::vec![false; p.n + 1];
    for (pos, &v) in sigma.iter().enumerate() {
        if v < 1 || v > p.n || seen[v] {
            return input_err(alloc::format!("not a bijection on 1..={}", p.n));
        }
        seen[v] = true;
        position_of[v] = pos + 1;
    }

    let (n, k, r, a) = (p.n, p.k, p.r, p.a_size);
    let mut entries = alloc::vec![0u8; n];

    if a < k {
        // block witness: positions 1..r(k-1) cycle through the values; all
        // classes have size k-1 and are independent under any ordering
        for i in 1..=r * (k - 1) {
            entries[i - 1] = ((i - 1) % r + 1) as u8;
        }
        return Ok((AltVector::new(r, entries)?, r * (k - 1)));
    }

    // positions of A = {1..a}, in increasing position order, alternate
    // between the first two values
    let mut a_positions: Vec<usize> = (1..=a).map(|v| position_of[v]).collect();
    a_positions.sort_unstable();
    for (rank, &pos) in a_positions.iter().enumerate() {
        entries[pos - 1] = if (rank + 1) % 2 == 0 { 1 } else { 2 };
    }

    let claimed = match r {
        2 => a,
        3 => {
            // one extra position outside A carrying the third value
            entries[position_of[a + 1] - 1] = 3;
            a + 1
        }
        _ => {
            let b = (n - a).min((r - 2) * (k - 1));
            let mut b_positions: Vec<usize> = (a + 1..=a + b).map(|v| position_of[v]).collect();
            b_positions.sort_unstable();
            for (rank, &pos) in b_positions.iter().enumerate() {
                // values 3..r cycle along the positions of B
                entries[pos - 1] = (3 + (rank + 1) % (r - 2)) as u8;
            }
            a + b
        }
    };
    Ok((AltVector::new(r, entries)?, claimed))
}

/// A proper coloring of `KG^r(n,k)` with exactly
/// `t = ceil((n - r(k-1)) / (r-1))` colors: vertex `e` (a `k`-subset, in
/// lex order) gets `min(ceil(min(e)/(r-1)), t)`. Disjoint edges sharing a
/// color below `t` would force `r` distinct minima into an `(r-1)`-window,
/// and color `t` confines all `r` of them to a block too small for `rk`
/// vertices.
pub fn afl_coloring(n: usize, k: usize, r: usize) -> Result<Coloring> {
    if r < 2 || k == 0 {
        return input_err("need r >= 2 and k >= 1");
    }
    if n < r * k {
        return input_err(alloc::format!("need n >= r*k, got n={n}, r*k={}", r * k));
    }
    let t = ceil_div(n - r * (k - 1), r - 1);
    let assign: Vec<usize> = k_subsets(n, k)
        .iter()
        .map(|e| {
            let m = e.min_vertex().expect("k >= 1");
            ceil_div(m, r - 1).min(t)
        })
        .collect();
    Coloring::new(t, assign)
}

/// The partition coloring of `KG^r(H(n,k,A))` with
/// `t = ceil((n - |A|) / (r-1))` colors: split `[n] \ A` into consecutive
/// blocks of size `r-1` (the last possibly smaller) and color each edge by
/// the first block it meets. `r` disjoint edges sharing a color would all
/// meet one block of size `r-1`.
pub fn prop1_coloring(p: &HnkaParams) -> Result<Coloring> {
    let (n, k, r, a) = (p.n, p.k, p.r, p.a_size);
    let t = ceil_div(n - a, r - 1);
    let hg = hnka(p);
    let assign: Vec<usize> = hg
        .edges()
        .iter()
        .map(|e| {
            let outside = e.difference(VSet::full(a));
            let m = outside
                .min_vertex()
                .expect("every edge leaves the distinguished set");
            ceil_div(m - a, r - 1)
        })
        .collect();
    let _ = k;
    Coloring::new(t, assign)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChiClaim {
    Exact(usize),
    Interval { lo: usize, hi: usize },
}

/// Chromatic number of `KG^r(H(n,k,A))` by the closed formulas: exact when
/// `|A| <= 2(k-1)` or `|A| >= rk-1`, a bracketing interval in between.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChiClosed {
    pub claim: ChiClaim,
    /// The exactness hypothesis `n >= 2rk` holds; when false the values are
    /// still reported for exploration but carry no guarantee.
    pub guaranteed: bool,
}

pub fn chi_hnka_closed(p: &HnkaParams) -> ChiClosed {
    let (n, k, r, a) = (p.n, p.k, p.r, p.a_size);
    let upper = ceil_div(n - a.max(r * (k - 1)), r - 1);
    let guaranteed = n >= 2 * r * k && !p.is_relaxed();
    let claim = if a <= 2 * (k - 1) || a >= r * k - 1 {
        ChiClaim::Exact(upper)
    } else {
        let lo = ceil_div(n - r * (k - 1) - a / k, r - 1);
        if lo == upper {
            ChiClaim::Exact(upper)
        } else {
            ChiClaim::Interval { lo, hi: upper }
        }
    };
    ChiClosed { claim, guaranteed }
}

/// Complete multipartite graph with the given part sizes; parts are
/// consecutive vertex blocks and edges are all cross-part pairs.
pub fn complete_multipartite(sizes: &[usize]) -> Result<Hypergraph> {
    if sizes.len() < 2 {
        return input_err("need at least two parts");
    }
    if sizes.contains(&0) {
        return input_err("part sizes must be positive");
    }
    let n: usize = sizes.iter().sum();
    if n > MAX_VERTICES {
        return Err(Error::Guard {
            what: "vertex count (bitmask width)",
            limit: MAX_VERTICES as u64,
            requested: n as u64,
        });
    }
    let mut part_of = alloc::vec![0usize; n + 1];
    let mut v = 1;
    for (i, &sz) in sizes.iter().enumerate() {
        for _ in 0..sz {
            part_of[v] = i;
            v += 1;
        }
    }
    let mut edges = Vec::new();
    for a in 1..=n {
        for b in (a + 1)..=n {
            if part_of[a] != part_of[b] {
                edges.push(VSet::from_vertices([a, b]));
            }
        }
    }
    Hypergraph::new(n, edges)
}

/// `r` vertex-disjoint copies of the graph `g` with every cross-copy pair
/// added.
pub fn gbar(g: &Hypergraph, r: usize) -> Result<Hypergraph> {
    if !g.is_graph() {
        return input_err("the join construction requires a graph (all edges size 2)");
    }
    if r < 1 {
        return input_err("need at least one copy");
    }
    let n = g.n();
    let total = r * n;
    if total > MAX_VERTICES {
        return Err(Error::Guard {
            what: "vertex count (bitmask width)",
            limit: MAX_VERTICES as u64,
            requested: total as u64,
        });
    }
    let mut edges = Vec::new();
    for copy in 0..r {
        let off = copy * n;
        for e in g.edges() {
            edges.push(VSet::from_vertices(e.iter().map(|v| v + off)));
        }
    }
    for c1 in 0..r {
        for c2 in (c1 + 1)..r {
            for u in 1..=n {
                for w in 1..=n {
                    edges.push(VSet::from_vertices([c1 * n + u, c2 * n + w]));
                }
            }
        }
    }
    Hypergraph::new(total, edges)
}

/// Exact independence number of a graph with a witness set, by
/// branch-and-bound (include/exclude on the highest-degree candidate).
pub fn independence_number(g: &Hypergraph, guards: &Guards) -> Result<(usize, VSet)> {
    if !g.is_graph() {
        return input_err("independence number is implemented for graphs");
    }
    guards.check("independence ground size", guards.max_n as u64, g.n() as u64)?;
    let n = g.n();
    let mut adj = alloc::vec![VSet::EMPTY; n + 1];
    for e in g.edges() {
        let vs = e.vertices();
        adj[vs[0]] = adj[vs[0]].with(vs[1]);
        adj[vs[1]] = adj[vs[1]].with(vs[0]);
    }

    struct Bb<'a> {
        adj: &'a [VSet],
        best: usize,
        best_set: VSet,
    }

    fn rec(bb: &mut Bb<'_>, cur: VSet, cand: VSet) {
        if cur.len() + cand.len() <= bb.best {
            return;
        }
        if cand.is_empty() {
            if cur.len() > bb.best {
                bb.best = cur.len();
                bb.best_set = cur;
            }
            return;
        }
        // branch on the candidate with the most candidate-neighbors
        let mut pick = 0;
        let mut deg = usize::MAX;
        for v in cand.iter() {
            let d = bb.adj[v].intersection(cand).len();
            if deg == usize::MAX || d > deg {
                deg = d;
                pick = v;
                if deg == usize::MAX {
                    deg = d;
                }
            }
        }
        rec(bb, cur.with(pick), cand.without(pick).difference(bb.adj[pick]));
        rec(bb, cur, cand.without(pick));
    }

    let mut bb = Bb {
        adj: &adj,
        best: 0,
        best_set: VSet::EMPTY,
    };
    rec(&mut bb, VSet::EMPTY, VSet::full(n));
    Ok((bb.best, bb.best_set))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GbarReport {
    pub ecd: usize,
    pub alpha: usize,
    /// `r * (|V(G)| - alpha)`.
    pub rhs: usize,
    pub holds: bool,
}

/// Checks `ecd^r(gbar(G, r)) = r(|V(G)| - alpha(G))` by computing both
/// sides exactly.
pub fn verify_gbar_identity(g: &Hypergraph, r: usize, guards: &Guards) -> Result<GbarReport> {
    let joined = gbar(g, r)?;
    let value = ecd(&joined, r, &SVector::ones(joined.n()), guards)?.value;
    let (alpha, _) = independence_number(g, guards)?;
    let rhs = r * (g.n() - alpha);
    Ok(GbarReport {
        ecd: value,
        alpha,
        rhs,
        holds: value == rhs,
    })
}

/// Inclusive parameter ranges for the conjecture explorer. When `a` is
/// absent, each `(n, k, r)` point sweeps the whole conjectured range
/// `2k-1 <= a <= rk-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureGrid {
    pub n: (usize, usize),
    pub k: (usize, usize),
    pub r: (usize, usize),
    pub a: Option<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Matches { chi: usize },
    Counterexample { chi: usize, conjectured: usize },
    Skipped { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjecturePoint {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub a: usize,
    pub verdict: Verdict,
}

/// Compares the exact chromatic number of `KG^r(H(n,k,{1..a}))` against
/// the conjectured `ceil((n - max(r(k-1), a)) / (r-1))` on every grid
/// point in range. Out-of-budget or out-of-guard points are reported as
/// skipped, never silently dropped.
pub fn explore_conjecture(
    grid: &ConjectureGrid,
    node_budget_per_point: u64,
    guards: &Guards,
) -> Vec<ConjecturePoint> {
    let mut out = Vec::new();
    for n in grid.n.0..=grid.n.1 {
        for k in grid.k.0..=grid.k.1 {
            for r in grid.r.0..=grid.r.1 {
                let (alo, ahi) = grid
                    .a
                    .unwrap_or(((2 * k).saturating_sub(1), (r * k).saturating_sub(1)));
                for a in alo..=ahi.min(n.saturating_sub(1)) {
                    out.push(ConjecturePoint {
                        n,
                        k,
                        r,
                        a,
                        verdict: conjecture_point(n, k, r, a, node_budget_per_point, guards),
                    });
                }
            }
        }
    }
    out
}

fn conjecture_point(
    n: usize,
    k: usize,
    r: usize,
    a: usize,
    budget: u64,
    guards: &Guards,
) -> Verdict {
    if k < 2 || r < 2 {
        return Verdict::Skipped {
            reason: String::from("need k >= 2 and r >= 2"),
        };
    }
    if a < 2 * k - 1 || a > r * k - 1 {
        return Verdict::Skipped {
            reason: String::from("outside conjecture range"),
        };
    }
    if n < r * k {
        return Verdict::Skipped {
            reason: String::from("n < r*k"),
        };
    }
    let params = match HnkaParams::new(n, k, &(1..=a).collect::<Vec<_>>(), r) {
        Ok(p) => p,
        Err(e) => {
            return Verdict::Skipped {
                reason: alloc::format!("{e}"),
            }
        }
    };
    let ground = hnka(&params);
    let kg = match build_kneser(&ground, r, guards) {
        Ok(kg) => kg,
        Err(e) => {
            return Verdict::Skipped {
                reason: alloc::format!("{e}"),
            }
        }
    };
    let hg = match kg.to_hypergraph() {
        Ok(h) => h,
        Err(e) => {
            return Verdict::Skipped {
                reason: alloc::format!("{e}"),
            }
        }
    };
    let conjectured = ceil_div(n - a.max(r * (k - 1)), r - 1);
    match chromatic_number_budgeted(&hg, hg.n().max(1), budget) {
        Ok(report) => match report.outcome {
            ChiOutcome::Chromatic { chi, .. } => {
                if chi == conjectured {
                    Verdict::Matches { chi }
                } else {
                    Verdict::Counterexample { chi, conjectured }
                }
            }
            ChiOutcome::LimitExceeded { .. } => Verdict::Skipped {
                reason: String::from("solver limit exhausted"),
            },
        },
        Err(e) => Verdict::Skipped {
            reason: alloc::format!("{e}"),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alt::{alt_sigma, alt_value};
    use crate::bits::next_permutation;
    use crate::defects::cd;
    use alloc::vec;

    fn guards() -> Guards {
        Guards::default()
    }

    fn params(n: usize, k: usize, a: usize, r: usize) -> HnkaParams {
        HnkaParams::new(n, k, &(1..=a).collect::<Vec<_>>(), r).unwrap()
    }

    #[test]
    fn hnka_edge_counts() {
        assert_eq!(hnka(&params(5, 2, 3, 2)).edge_count(), 7);
        assert_eq!(hnka(&params(5, 2, 0, 2)).edge_count(), 10);
        assert_eq!(hnka(&params(4, 2, 2, 2)).edge_count(), 5);
    }

    #[test]
    fn closed_form_spot_values() {
        assert_eq!(cd_hnka_closed(&params(6, 2, 0, 2)), 4);
        assert_eq!(cd_hnka_closed(&params(8, 2, 3, 2)), 4);
        assert_eq!(cd_hnka_closed(&params(10, 2, 3, 3)), 5);

        assert_eq!(ecd_hnka_closed(&params(9, 3, 2, 2)), 5);
        assert_eq!(ecd_hnka_closed(&params(10, 2, 3, 3)), 6);
        assert_eq!(ecd_hnka_closed(&params(8, 2, 3, 2)), 5);
    }

    #[test]
    fn closed_forms_match_enumeration_on_a_slice() {
        for n in 4..=7usize {
            for (k, r) in [(2usize, 2usize), (2, 3), (3, 2)] {
                if n < r * k {
                    continue;
                }
                for a in 0..=(n - k) {
                    let p = params(n, k, a, r);
                    let h = hnka(&p);
                    let s = SVector::ones(n);
                    assert_eq!(
                        cd_hnka_closed(&p),
                        cd(&h, r, &s, &guards()).unwrap().value,
                        "cd mismatch at n={n} k={k} r={r} a={a}"
                    );
                    assert_eq!(
                        ecd_hnka_closed(&p),
                        ecd(&h, r, &s, &guards()).unwrap().value,
                        "ecd mismatch at n={n} k={k} r={r} a={a}"
                    );
                }
            }
        }
    }

    #[test]
    fn alt_witness_cases() {
        // r = 2: alternation runs along A
        let p = params(6, 2, 3, 2);
        let id: Vec<usize> = (1..=6).collect();
        let (x, claimed) = alt_witness_hnka(&p, &id).unwrap();
        assert_eq!(claimed, 3);
        assert_eq!(alt_value(&x), 3);

        // r = 3: one extra value outside A
        let p = params(10, 2, 3, 3);
        let id: Vec<usize> = (1..=10).collect();
        let (x, claimed) = alt_witness_hnka(&p, &id).unwrap();
        assert_eq!(claimed, 4);
        assert_eq!(alt_value(&x), 4);

        // small A: block witness of value r(k-1)
        let p = params(9, 3, 0, 2);
        let id: Vec<usize> = (1..=9).collect();
        let (x, claimed) = alt_witness_hnka(&p, &id).unwrap();
        assert_eq!(claimed, 4);
        assert_eq!(alt_value(&x), 4);

        // r >= 4 exercises the cyclic tail over B
        let p = HnkaParams::new(13, 2, &[1, 2, 3], 4).unwrap();
        let id: Vec<usize> = (1..=13).collect();
        let (x, claimed) = alt_witness_hnka(&p, &id).unwrap();
        assert_eq!(claimed, 3 + 2usize);
        assert_eq!(alt_value(&x), claimed);
    }

    #[test]
    fn alt_witness_classes_independent_for_every_ordering() {
        let p = params(6, 2, 3, 2);
        let h = hnka(&p);
        let mut sigma: Vec<usize> = (1..=6).collect();
        loop {
            let (x, claimed) = alt_witness_hnka(&p, &sigma).unwrap();
            assert_eq!(alt_value(&x), claimed);
            for class in x.classes() {
                let image = VSet::from_vertices(class.iter().map(|pos| sigma[pos - 1]));
                assert!(h.is_independent(image).unwrap(), "sigma={sigma:?}");
            }
            if !next_permutation(&mut sigma) {
                break;
            }
        }
    }

    #[test]
    fn alt_witness_is_attained_by_search() {
        // the witness value never exceeds the exact single-ordering optimum
        let p = params(7, 2, 3, 2);
        let h = hnka(&p);
        let id: Vec<usize> = (1..=7).collect();
        let (_, claimed) = alt_witness_hnka(&p, &id).unwrap();
        let exact = alt_sigma(&h, 2, &id, &guards()).unwrap().value;
        assert!(claimed <= exact);
    }

    #[test]
    fn afl_coloring_is_proper_with_declared_palette() {
        for (n, k, r, want_t) in [(5, 2, 2, 3), (9, 2, 3, 3), (6, 3, 2, 2)] {
            let c = afl_coloring(n, k, r).unwrap();
            assert_eq!(c.palette(), want_t);
            let ground = Hypergraph::new(n, k_subsets(n, k)).unwrap();
            let kg = build_kneser(&ground, r, &guards()).unwrap();
            assert!(kg.is_proper(&c).unwrap(), "n={n} k={k} r={r}");
            // every declared color is actually used
            let mut used = vec![false; want_t + 1];
            for &col in c.assignment() {
                used[col] = true;
            }
            assert!(used[1..].iter().all(|&u| u));
        }
        assert!(afl_coloring(5, 3, 2).is_err());
    }

    #[test]
    fn prop1_coloring_examples() {
        let p = params(8, 2, 3, 2);
        let c = prop1_coloring(&p).unwrap();
        assert_eq!(c.palette(), 5);
        let kg = build_kneser(&hnka(&p), 2, &guards()).unwrap();
        assert!(kg.is_proper(&c).unwrap());

        // A empty: the partition scheme needs ceil(n/(r-1)) colors even
        // though the minimum-based coloring needs fewer
        let p = params(6, 2, 0, 2);
        let c = prop1_coloring(&p).unwrap();
        assert_eq!(c.palette(), 6);
        let kg = build_kneser(&hnka(&p), 2, &guards()).unwrap();
        assert!(kg.is_proper(&c).unwrap());
        let combined = c.palette().min(afl_coloring(6, 2, 2).unwrap().palette());
        assert_eq!(combined, 4);

        let p = params(10, 2, 7, 3);
        let c = prop1_coloring(&p).unwrap();
        assert_eq!(c.palette(), 2);
        let kg = build_kneser(&hnka(&p), 3, &guards()).unwrap();
        assert!(kg.is_proper(&c).unwrap());
    }

    #[test]
    fn chi_closed_cases() {
        let got = chi_hnka_closed(&params(8, 2, 3, 2));
        assert_eq!(got.claim, ChiClaim::Exact(5));
        assert!(got.guaranteed); // n = 2rk exactly
        let got = chi_hnka_closed(&params(9, 3, 2, 2));
        assert_eq!(got.claim, ChiClaim::Exact(5));
        assert!(!got.guaranteed); // 9 < 2rk = 12
        let got = chi_hnka_closed(&HnkaParams::new(20, 2, &(1..=5).collect::<Vec<_>>(), 4).unwrap());
        assert_eq!(got.claim, ChiClaim::Exact(5));
        assert!(got.guaranteed);
    }

    #[test]
    fn multipartite_examples() {
        let k25 = complete_multipartite(&[2, 5]).unwrap();
        assert_eq!(k25.n(), 7);
        assert_eq!(k25.edge_count(), 10);
        let k116 = complete_multipartite(&[1, 1, 6]).unwrap();
        assert_eq!(k116.edge_count(), 1 + 6 + 6);
        let k33 = complete_multipartite(&[3, 3]).unwrap();
        assert_eq!(k33.edge_count(), 9);
        assert!(complete_multipartite(&[4]).is_err());
    }

    #[test]
    fn gbar_examples() {
        let k3 = complete_multipartite(&[1, 1, 1]).unwrap();
        let doubled = gbar(&k3, 2).unwrap();
        assert_eq!(doubled.n(), 6);
        assert_eq!(doubled.edge_count(), 15); // K6

        let p3 = Hypergraph::from_vertex_lists(3, &[vec![1, 2], vec![2, 3]]).unwrap();
        let doubled = gbar(&p3, 2).unwrap();
        assert_eq!(doubled.edge_count(), 2 + 2 + 9);

        let e2 = Hypergraph::edgeless(2);
        let doubled = gbar(&e2, 2).unwrap();
        assert_eq!(doubled.edge_count(), 4);

        let tri = Hypergraph::from_vertex_lists(3, &[vec![1, 2, 3]]).unwrap();
        assert!(gbar(&tri, 2).is_err());
    }

    #[test]
    fn independence_examples() {
        let k3 = complete_multipartite(&[1, 1, 1]).unwrap();
        assert_eq!(independence_number(&k3, &guards()).unwrap().0, 1);
        let p3 = Hypergraph::from_vertex_lists(3, &[vec![1, 2], vec![2, 3]]).unwrap();
        let (alpha, witness) = independence_number(&p3, &guards()).unwrap();
        assert_eq!(alpha, 2);
        assert!(p3.is_independent(witness).unwrap());
        assert_eq!(witness.len(), alpha);
        assert_eq!(independence_number(&Hypergraph::edgeless(5), &guards()).unwrap().0, 5);
    }

    #[test]
    fn gbar_identity_examples() {
        let k3 = complete_multipartite(&[1, 1, 1]).unwrap();
        let rep = verify_gbar_identity(&k3, 2, &guards()).unwrap();
        assert_eq!(rep.ecd, 4);
        assert_eq!(rep.rhs, 4);
        assert!(rep.holds);

        let p3 = Hypergraph::from_vertex_lists(3, &[vec![1, 2], vec![2, 3]]).unwrap();
        let rep = verify_gbar_identity(&p3, 2, &guards()).unwrap();
        assert_eq!(rep.ecd, 2);
        assert!(rep.holds);

        let rep = verify_gbar_identity(&Hypergraph::edgeless(2), 2, &guards()).unwrap();
        assert_eq!(rep.ecd, 0);
        assert!(rep.holds);
    }

    #[test]
    fn conjecture_explorer_verdicts() {
        let grid = ConjectureGrid {
            n: (8, 8),
            k: (2, 2),
            r: (2, 2),
            a: None,
        };
        let pts = explore_conjecture(&grid, u64::MAX, &guards());
        assert_eq!(pts.len(), 1); // a = 3 is the whole range for k=2, r=2
        assert_eq!(pts[0].a, 3);
        assert_eq!(pts[0].verdict, Verdict::Matches { chi: 5 });

        // explicit out-of-range a is reported as skipped
        let grid = ConjectureGrid {
            n: (8, 8),
            k: (2, 2),
            r: (2, 2),
            a: Some((1, 1)),
        };
        let pts = explore_conjecture(&grid, u64::MAX, &guards());
        assert!(matches!(pts[0].verdict, Verdict::Skipped { .. }));

        // a tiny budget forces a skip, not a wrong answer
        let grid = ConjectureGrid {
            n: (8, 8),
            k: (2, 2),
            r: (2, 2),
            a: None,
        };
        let pts = explore_conjecture(&grid, 3, &guards());
        assert!(matches!(pts[0].verdict, Verdict::Skipped { .. }));
    }

    #[test]
    fn balanced_multipartite_has_zero_ecd_but_large_alt_gap() {
        // K_{n,...,n} with r parts: ecd^r = 0 while the identity-ordering
        // alternation bound stays large
        for (r, n) in [(2usize, 2usize), (2, 3), (3, 2), (3, 3)] {
            let sizes = vec![n; r];
            let h = complete_multipartite(&sizes).unwrap();
            let s = SVector::ones(r * n);
            assert_eq!(ecd(&h, r, &s, &guards()).unwrap().value, 0);
            let id: Vec<usize> = (1..=r * n).collect();
            let alt_id = alt_sigma(&h, r, &id, &guards()).unwrap().value;
            let expect_gap = if r % 2 == 0 {
                r * n / 2
            } else {
                r.div_ceil(2) * n - 1
            };
            assert_eq!(r * n - alt_id, expect_gap, "r={r} n={n}");
        }
    }

    #[test]
    fn params_validation() {
        assert!(HnkaParams::new(3, 2, &[1], 2).is_err()); // n < rk
        assert!(HnkaParams::new_relaxed(3, 2, &[1], 2).is_ok());
        assert!(HnkaParams::new(6, 2, &[1, 1], 2).is_err());
        assert!(HnkaParams::new(6, 2, &(1..=6).collect::<Vec<_>>(), 2).is_err()); // A = [n]
        assert!(HnkaParams::new(6, 2, &[7], 2).is_err());
    }
}
