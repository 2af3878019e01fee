//! Machine-checkable witnesses and inequality checks.
//!
//! Given a proper coloring of `KG^p_s(H)` for prime `p`, a colorful
//! subhypergraph witness is a family of disjoint Kneser-vertex parts
//! `V_1..V_p` with total size `ecd^p_s(H)`, near-equal part sizes, rainbow
//! colors inside each part, and every transversal an edge of `KG^p_s(H)`.
//! Such a witness always exists, so [`find_colorful`] failing on valid
//! input is reported as an internal inconsistency, never as data.
//!
//! The module also builds the reduction hypergraph `T_{H,C,r}` (edges: all
//! vertex subsets whose induced equitable defect exceeds `(r-1)C`), checks
//! the product-splitting inequality
//! `ecd^{r'r''}_s(H) <= r''(r'-1)C + ecd^{r''}_s(T_{H,C,r'})`, and derives
//! the reduced coloring behind it.

use alloc::string::String;
use alloc::vec::Vec;

use crate::bits::VSet;
use crate::defects::ecd;
use crate::error::{input_err, Error, Result};
use crate::guards::Guards;
use crate::hypergraph::{Coloring, Hypergraph, SVector};
use crate::kneser::{build_kneser_s, is_s_disjoint, MultiHypergraph};

fn is_prime(p: usize) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Exhaustive-transversal cost threshold; above it the per-vertex
/// occupancy check is used instead.
const TRANSVERSAL_EXHAUSTIVE_CAP: u128 = 100_000;

/// A colorful-subhypergraph witness, self-contained for re-verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorfulWitness {
    /// Kneser-vertex indices (1-based, ascending) per part; always `p`
    /// parts, possibly empty.
    pub parts: Vec<Vec<u32>>,
    /// The proper coloring the witness was found in.
    pub coloring: Coloring,
    pub ground: Hypergraph,
    pub p: usize,
    pub s: SVector,
    /// The `ecd^p_s` value the total part size must equal.
    pub target: usize,
    /// True when `ecd^p_s(H) = 0` and the witness is the empty family.
    pub vacuous: bool,
}

impl ColorfulWitness {
    pub fn total(&self) -> usize {
        self.parts.iter().map(|p| p.len()).sum()
    }
}

/// Per-property verification outcome for a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorfulVerify {
    /// Parts well-formed: `p` of them, indices valid, sorted, disjoint.
    pub structure_ok: bool,
    /// Total part size equals the independently recomputed `ecd^p_s`.
    pub total_ok: bool,
    /// Every transversal of the nonempty parts is s-disjoint.
    pub transversals_ok: bool,
    /// Part sizes pairwise differ by at most one.
    pub equitable_ok: bool,
    /// Colors are distinct within each part.
    pub rainbow_ok: bool,
    pub recomputed_ecd: usize,
    pub total: usize,
    /// A violating transversal (ground-edge indices), when one exists.
    pub failing_transversal: Option<Vec<u32>>,
    /// Two same-colored vertices in one part, when they exist.
    pub color_collision: Option<(u32, u32)>,
}

impl ColorfulVerify {
    pub fn all_pass(&self) -> bool {
        self.structure_ok
            && self.total_ok
            && self.transversals_ok
            && self.equitable_ok
            && self.rainbow_ok
    }
}

fn validate_colorful_input(
    h: &Hypergraph,
    p: usize,
    s: &SVector,
    c: &Coloring,
    kg: &MultiHypergraph,
) -> Result<()> {
    if !is_prime(p) {
        return input_err(alloc::format!("p must be prime, got {p}"));
    }
    s.check_dim(h.n())?;
    if let Some(&bad) = s.entries().iter().find(|&&x| x as usize >= p) {
        return input_err(alloc::format!("multiplicity entry {bad} must be < p = {p}"));
    }
    if !kg.is_proper(c)? {
        return input_err("coloring is not proper on the derived Kneser hypergraph");
    }
    Ok(())
}

/// Finds a colorful-subhypergraph witness for a proper coloring `c` of
/// `KG^p_s(H)`.
pub fn find_colorful(
    h: &Hypergraph,
    p: usize,
    s: &SVector,
    c: &Coloring,
    guards: &Guards,
) -> Result<ColorfulWitness> {
    let kg = build_kneser_s(h, p, s, guards)?;
    validate_colorful_input(h, p, s, c, &kg)?;
    let target = ecd(h, p, s, guards)?.value;

    if target == 0 {
        return Ok(ColorfulWitness {
            parts: alloc::vec![Vec::new(); p],
            coloring: c.clone(),
            ground: h.clone(),
            p,
            s: s.clone(),
            target,
            vacuous: true,
        });
    }

    // equitable size profile, larger parts first
    let q = target / p;
    let rem = target % p;
    let sizes: Vec<usize> = (0..p).map(|i| if i < rem { q + 1 } else { q }).collect();

    let m = h.edge_count();
    let mut used = alloc::vec![false; m + 1];
    // number of parts currently containing an edge through each ground vertex
    let mut touch_count = alloc::vec![0u32; h.n() + 1];
    let mut part_touched: Vec<VSet> = alloc::vec![VSet::EMPTY; p];
    let mut parts: Vec<Vec<u32>> = alloc::vec![Vec::new(); p];

    struct Ctx<'a> {
        h: &'a Hypergraph,
        c: &'a Coloring,
        s: &'a SVector,
        sizes: &'a [usize],
    }

    fn fill(
        cx: &Ctx<'_>,
        part: usize,
        next_idx: usize,
        used: &mut [bool],
        touch_count: &mut [u32],
        part_touched: &mut [VSet],
        parts: &mut [Vec<u32>],
    ) -> bool {
        if part == cx.sizes.len() {
            return true;
        }
        if parts[part].len() == cx.sizes[part] {
            // equal-size parts are interchangeable: force increasing minima
            let start = if part + 1 < cx.sizes.len()
                && cx.sizes[part + 1] == cx.sizes[part]
                && cx.sizes[part] > 0
            {
                parts[part][0] as usize + 1
            } else {
                1
            };
            return fill(cx, part + 1, start, used, touch_count, part_touched, parts);
        }
        let m = cx.h.edge_count();
        for idx in next_idx..=m {
            if used[idx] {
                continue;
            }
            // rainbow within the part
            let color = cx.c.color_of(idx);
            if parts[part].iter().any(|&e| cx.c.color_of(e as usize) == color) {
                continue;
            }
            // worst-case occupancy: a part touching a ground vertex can
            // always route one of its edges through it
            let ge = cx.h.edges()[idx - 1];
            let newly = ge.difference(part_touched[part]);
            let ok = newly
                .iter()
                .all(|v| touch_count[v] < cx.s.of(v));
            if !ok {
                continue;
            }
            used[idx] = true;
            for v in newly.iter() {
                touch_count[v] += 1;
            }
            let saved = part_touched[part];
            part_touched[part] = part_touched[part].union(ge);
            parts[part].push(idx as u32);

            if fill(cx, part, idx + 1, used, touch_count, part_touched, parts) {
                return true;
            }

            parts[part].pop();
            part_touched[part] = saved;
            for v in newly.iter() {
                touch_count[v] -= 1;
            }
            used[idx] = false;
        }
        false
    }

    let cx = Ctx { h, c, s, sizes: &sizes };
    if fill(
        &cx,
        0,
        1,
        &mut used,
        &mut touch_count,
        &mut part_touched,
        &mut parts,
    ) {
        let w = ColorfulWitness {
            parts,
            coloring: c.clone(),
            ground: h.clone(),
            p,
            s: s.clone(),
            target,
            vacuous: false,
        };
        debug_assert!(verify_colorful(&w, guards)?.all_pass());
        Ok(w)
    } else {
        Err(Error::Inconsistency(alloc::format!(
            "no colorful witness of total {target} found for a proper coloring; \
             the search or the defect computation is buggy"
        )))
    }
}

/// Re-checks every witness property from scratch, including an independent
/// recomputation of `ecd^p_s`.
pub fn verify_colorful(w: &ColorfulWitness, guards: &Guards) -> Result<ColorfulVerify> {
    let m = w.ground.edge_count();
    let mut structure_ok = w.parts.len() == w.p;
    let mut seen = alloc::vec![false; m + 1];
    for part in &w.parts {
        for (i, &e) in part.iter().enumerate() {
            let e = e as usize;
            if e < 1 || e > m || seen[e] || (i > 0 && part[i - 1] as usize >= e) {
                structure_ok = false;
            } else {
                seen[e] = true;
            }
        }
    }
    if w.coloring.assignment().len() != m {
        structure_ok = false;
    }

    let recomputed_ecd = ecd(&w.ground, w.p, &w.s, guards)?.value;
    let total = w.total();
    let total_ok = structure_ok && total == recomputed_ecd && total == w.target;

    let sizes: Vec<usize> = w.parts.iter().map(|p| p.len()).collect();
    let equitable_ok = match (sizes.iter().max(), sizes.iter().min()) {
        (Some(max), Some(min)) => max - min <= 1,
        _ => true,
    };

    let mut rainbow_ok = true;
    let mut color_collision = None;
    if structure_ok {
        'parts: for part in &w.parts {
            for i in 0..part.len() {
                for j in (i + 1)..part.len() {
                    if w.coloring.color_of(part[i] as usize)
                        == w.coloring.color_of(part[j] as usize)
                    {
                        rainbow_ok = false;
                        color_collision = Some((part[i], part[j]));
                        break 'parts;
                    }
                }
            }
        }
    }

    let (transversals_ok, failing_transversal) = if structure_ok {
        check_transversals(&w.ground, &w.parts, &w.s)?
    } else {
        (false, None)
    };

    Ok(ColorfulVerify {
        structure_ok,
        total_ok,
        transversals_ok,
        equitable_ok,
        rainbow_ok,
        recomputed_ecd,
        total,
        failing_transversal,
        color_collision,
    })
}

/// Every choice of one edge from each nonempty part must be s-disjoint.
/// Small products are enumerated outright; larger ones use the per-vertex
/// occupancy bound and fall back to a directly constructed worst-case
/// transversal when it fails.
fn check_transversals(
    h: &Hypergraph,
    parts: &[Vec<u32>],
    s: &SVector,
) -> Result<(bool, Option<Vec<u32>>)> {
    let nonempty: Vec<&Vec<u32>> = parts.iter().filter(|p| !p.is_empty()).collect();
    if nonempty.is_empty() {
        return Ok((true, None));
    }
    let product = nonempty
        .iter()
        .fold(1u128, |acc, p| acc.saturating_mul(p.len() as u128));

    if product <= TRANSVERSAL_EXHAUSTIVE_CAP {
        let mut pick = alloc::vec![0usize; nonempty.len()];
        loop {
            let members: Vec<usize> = nonempty
                .iter()
                .zip(&pick)
                .map(|(part, &i)| part[i] as usize)
                .collect();
            if !is_s_disjoint(h, &members, s)? {
                return Ok((
                    false,
                    Some(members.into_iter().map(|e| e as u32).collect()),
                ));
            }
            let mut d = 0;
            loop {
                if d == pick.len() {
                    return Ok((true, None));
                }
                pick[d] += 1;
                if pick[d] < nonempty[d].len() {
                    break;
                }
                pick[d] = 0;
                d += 1;
            }
        }
    }

    // occupancy bound: vertex v can be hit by at most one edge per part
    for v in 1..=h.n() {
        let touching: u32 = nonempty
            .iter()
            .filter(|part| part.iter().any(|&e| h.edges()[e as usize - 1].contains(v)))
            .count() as u32;
        if touching > s.of(v) {
            // materialize the worst case: pick a v-edge wherever possible
            let members: Vec<u32> = nonempty
                .iter()
                .map(|part| {
                    *part
                        .iter()
                        .find(|&&e| h.edges()[e as usize - 1].contains(v))
                        .unwrap_or(&part[0])
                })
                .collect();
            return Ok((false, Some(members)));
        }
    }
    Ok((true, None))
}

/// The reduction hypergraph: edges are all vertex subsets `V` with
/// `ecd^r(H[V]) > (r-1)C`. By monotonicity the edge set is upward closed,
/// so independence semantics are preserved by keeping only the
/// inclusion-minimal edges (the default); `full_edges` materializes the
/// definition verbatim.
pub fn kriz_t(
    h: &Hypergraph,
    big_c: usize,
    r: usize,
    full_edges: bool,
    guards: &Guards,
) -> Result<Hypergraph> {
    if r < 2 {
        return input_err(alloc::format!("r must be >= 2, got {r}"));
    }
    if big_c == 0 {
        return input_err("C must be positive");
    }
    guards.check(
        "reduction hypergraph ground size",
        guards.max_kriz_n as u64,
        h.n() as u64,
    )?;
    let threshold = (r - 1) * big_c;
    let mut violators: Vec<VSet> = Vec::new();
    // canonical subset order is by size, so minimal violators are found first
    for subset in crate::bits::subsets_by_size(h.n()) {
        if subset.is_empty() {
            continue;
        }
        let dominated = violators.iter().any(|&v| v.is_subset_of(subset));
        if dominated {
            if full_edges {
                violators.push(subset);
            }
            continue;
        }
        let (induced, _) = h.induced(subset)?;
        let value = ecd(&induced, r, &SVector::ones(induced.n()), guards)?.value;
        if value > threshold {
            violators.push(subset);
        }
    }
    Hypergraph::new(h.n(), violators)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma1Report {
    /// `ecd^{r'r''}_s(H)`.
    pub lhs: usize,
    /// `ecd^{r''}_s(T_{H,C,r'})`.
    pub reduction_ecd: usize,
    /// `r''(r'-1)C + reduction_ecd`.
    pub rhs: usize,
    pub holds: bool,
}

/// Checks `ecd^{r'r''}_s(H) <= r''(r'-1)C + ecd^{r''}_s(T_{H,C,r'})`
/// exactly. A violation on valid input indicates a bug.
pub fn check_lemma1(
    h: &Hypergraph,
    r_prime: usize,
    r_dprime: usize,
    s: &SVector,
    big_c: usize,
    guards: &Guards,
) -> Result<Lemma1Report> {
    if r_prime < 2 || r_dprime < 2 {
        return input_err("both factors must be >= 2");
    }
    s.check_dim(h.n())?;
    if let Some(&bad) = s.entries().iter().find(|&&x| (x as usize) >= r_dprime) {
        return input_err(alloc::format!(
            "multiplicity entry {bad} must be < r'' = {r_dprime}"
        ));
    }
    let lhs = ecd(h, r_prime * r_dprime, s, guards)?.value;
    let t = kriz_t(h, big_c, r_prime, false, guards)?;
    let reduction_ecd = ecd(&t, r_dprime, s, guards)?.value;
    let rhs = r_dprime * (r_prime - 1) * big_c + reduction_ecd;
    Ok(Lemma1Report {
        lhs,
        reduction_ecd,
        rhs,
        holds: lhs <= rhs,
    })
}

#[derive(Clone, Debug)]
pub struct ReductionReport {
    /// `T_{H,C,r'}` with its full edge set.
    pub reduction: Hypergraph,
    /// The derived coloring on the edges of `reduction` (vertex `i` of
    /// `KG^{r''}_s(T)` is the `i`-th edge of `T` in canonical order).
    pub derived: Coloring,
    /// Properness of the derived coloring on `KG^{r''}_s(T)`; false
    /// indicates an internal inconsistency.
    pub proper: bool,
    /// A monochromatic edge when properness fails.
    pub violation: Option<Vec<u32>>,
}

/// Derives the reduced coloring: for each edge `e` of `T_{H,C,r'}` (where
/// `C` is the palette size of `c`), take the largest color among the
/// monochromatic edges of `KG^{r'}(H[e])` under `c`, then verify the result
/// is proper on `KG^{r''}_s(T)`.
pub fn check_reduction_coloring(
    h: &Hypergraph,
    r_prime: usize,
    r_dprime: usize,
    s: &SVector,
    c: &Coloring,
    guards: &Guards,
) -> Result<ReductionReport> {
    if r_prime < 2 || r_dprime < 2 {
        return input_err("both factors must be >= 2");
    }
    s.check_dim(h.n())?;
    let r = r_prime * r_dprime;
    let kg = build_kneser_s(h, r, s, guards)?;
    if !kg.is_proper(c)? {
        return input_err("coloring is not proper on the derived Kneser hypergraph");
    }
    let big_c = c.palette();
    let t = kriz_t(h, big_c, r_prime, true, guards)?;

    let mut derived = Vec::with_capacity(t.edge_count());
    for &edge in t.edges() {
        let inside: Vec<usize> = (1..=h.edge_count())
            .filter(|&i| h.edges()[i - 1].is_subset_of(edge))
            .collect();
        let color = (1..=big_c)
            .rev()
            .find(|&color| {
                let same: Vec<usize> = inside
                    .iter()
                    .copied()
                    .filter(|&i| c.color_of(i) == color)
                    .collect();
                has_disjoint_subfamily(h, &same, r_prime)
            })
            .ok_or_else(|| {
                Error::Inconsistency(String::from(
                    "an edge of the reduction hypergraph has no monochromatic \
                     derived edge; the guaranteed structure is missing",
                ))
            })?;
        derived.push(color);
    }

    let derived = Coloring::new(big_c, derived)?;
    let kg_t = build_kneser_s(&t, r_dprime, s, guards)?;
    let mut violation = None;
    let proper = kg_t.is_proper(&derived)?;
    if !proper {
        violation = kg_t
            .edges()
            .iter()
            .find(|e| {
                let first = derived.color_of(e[0] as usize);
                e.iter().all(|&v| derived.color_of(v as usize) == first)
            })
            .cloned();
    }
    Ok(ReductionReport {
        reduction: t,
        derived,
        proper,
        violation,
    })
}

/// True iff `pool` (ground-edge indices) contains `r` pairwise disjoint
/// edges.
fn has_disjoint_subfamily(h: &Hypergraph, pool: &[usize], r: usize) -> bool {
    fn rec(h: &Hypergraph, pool: &[usize], from: usize, taken: VSet, left: usize) -> bool {
        if left == 0 {
            return true;
        }
        if pool.len() - from < left {
            return false;
        }
        for i in from..pool.len() {
            let e = h.edges()[pool[i] - 1];
            if !e.intersects(taken) && rec(h, pool, i + 1, taken.union(e), left - 1) {
                return true;
            }
        }
        false
    }
    rec(h, pool, 0, VSet::EMPTY, r)
}
