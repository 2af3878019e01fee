//! Alternation numbers.
//!
//! A vector `X` over `{0} ∪ {1..r}` has `alt(X)` = length of its longest
//! subsequence of nonzero entries with consecutive values distinct
//! (`alt(0) = 0`). Positions holding value `j` form the class `X^j`. For a
//! vertex ordering `σ`, `alt_σ` maximizes `alt(X)` over vectors whose
//! classes map to independent sets; the alternation number of the
//! hypergraph minimizes `alt_σ` over all orderings.

use alloc::vec::Vec;

use crate::bits::{next_permutation, VSet};
use crate::error::{input_err, Result};
use crate::guards::Guards;
use crate::hypergraph::Hypergraph;

/// A vector in `({0} ∪ {1..r})^n`; value `j > 0` encodes the `j`-th group
/// element, 0 encodes "unused position".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AltVector {
    r: usize,
    entries: Vec<u8>,
}

impl AltVector {
    pub fn new(r: usize, entries: Vec<u8>) -> Result<Self> {
        if r < 1 || r > u8::MAX as usize {
            return input_err(alloc::format!("r out of range: {r}"));
        }
        if let Some(&bad) = entries.iter().find(|&&x| x as usize > r) {
            return input_err(alloc::format!("entry {bad} exceeds r = {r}"));
        }
        Ok(AltVector { r, entries })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    /// Position classes `X^1..X^r`; class `j` holds the 1-based positions
    /// carrying value `j`.
    pub fn classes(&self) -> Vec<VSet> {
        let mut cls = alloc::vec![VSet::EMPTY; self.r];
        for (pos, &x) in self.entries.iter().enumerate() {
            if x > 0 {
                cls[x as usize - 1] = cls[x as usize - 1].with(pos + 1);
            }
        }
        cls
    }
}

/// Longest alternating subsequence of nonzero entries. A single
/// left-to-right scan retaining every value change is optimal.
pub fn alt_value(x: &AltVector) -> usize {
    let mut count = 0usize;
    let mut last = 0u8;
    for &v in x.entries() {
        if v != 0 && v != last {
            count += 1;
            last = v;
        }
    }
    count
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AltSigmaReport {
    pub value: usize,
    pub witness: AltVector,
    pub nodes: u64,
}

struct AltSearch<'a> {
    h: &'a Hypergraph,
    by_v: &'a [Vec<usize>],
    sigma: &'a [usize],
    r: usize,
    classes: Vec<VSet>, // vertex sets, index 1..=r
    entries: Vec<u8>,
    best: usize,
    best_entries: Vec<u8>,
    abort_at: usize,
    nodes: u64,
}

impl<'a> AltSearch<'a> {
    /// Returns true when the incumbent threshold was reached (minimization
    /// callers discard this ordering immediately).
    fn dfs(&mut self, pos: usize, count: usize, last: u8) -> bool {
        self.nodes += 1;
        if count > self.best {
            self.best = count;
            self.best_entries.clear();
            self.best_entries.extend_from_slice(&self.entries);
        }
        if self.best >= self.abort_at {
            return true;
        }
        let n = self.sigma.len();
        if pos > n || count + (n - pos + 1) <= self.best {
            return false;
        }
        let vertex = self.sigma[pos - 1];
        for value in 1..=self.r {
            let grown = self.classes[value].with(vertex);
            let independent = self.by_v[vertex]
                .iter()
                .all(|&ei| !self.h.edges()[ei].is_subset_of(grown));
            if !independent {
                continue;
            }
            self.classes[value] = grown;
            self.entries[pos - 1] = value as u8;
            let next_count = if value as u8 != last { count + 1 } else { count };
            let aborted = self.dfs(pos + 1, next_count, value as u8);
            self.entries[pos - 1] = 0;
            self.classes[value] = self.classes[value].without(vertex);
            if aborted {
                return true;
            }
        }
        // leave the position unused
        self.dfs(pos + 1, count, last)
    }
}

fn alt_sigma_search(
    h: &Hypergraph,
    by_v: &[Vec<usize>],
    r: usize,
    sigma: &[usize],
    abort_at: usize,
) -> (usize, Vec<u8>, u64, bool) {
    let mut search = AltSearch {
        h,
        by_v,
        sigma,
        r,
        classes: alloc::vec![VSet::EMPTY; r + 1],
        entries: alloc::vec![0; sigma.len()],
        best: 0,
        best_entries: alloc::vec![0; sigma.len()],
        abort_at,
        nodes: 0,
    };
    let aborted = search.dfs(1, 0, 0);
    (search.best, search.best_entries, search.nodes, aborted)
}

fn validate_sigma(h: &Hypergraph, sigma: &[usize]) -> Result<()> {
    if sigma.len() != h.n() {
        return input_err(alloc::format!(
            "ordering has {} entries, hypergraph has {} vertices",
            sigma.len(),
            h.n()
        ));
    }
    let mut seen = alloc::vec![false; h.n() + 1];
    for &v in sigma {
        if v < 1 || v > h.n() || seen[v] {
            return input_err(alloc::format!("not a bijection on 1..={}", h.n()));
        }
        seen[v] = true;
    }
    Ok(())
}

/// Exact `alt_σ`: maximum `alt(X)` over vectors whose classes `σ(X^j)` are
/// all independent, with a maximizing witness.
pub fn alt_sigma(
    h: &Hypergraph,
    r: usize,
    sigma: &[usize],
    guards: &Guards,
) -> Result<AltSigmaReport> {
    if r < 2 {
        return input_err(alloc::format!("r must be >= 2, got {r}"));
    }
    validate_sigma(h, sigma)?;
    guards.check("alternation ground size", guards.max_n as u64, h.n() as u64)?;
    let by_v = h.edges_by_vertex();
    let (value, entries, nodes, _) = alt_sigma_search(h, &by_v, r, sigma, usize::MAX);
    let witness = AltVector::new(r, entries)?;
    debug_assert_eq!(alt_value(&witness), value);
    Ok(AltSigmaReport {
        value,
        witness,
        nodes,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AltReport {
    pub value: usize,
    /// Lexicographically first minimizing ordering: `sigma[j-1]` is the
    /// vertex at position `j`.
    pub sigma: Vec<usize>,
    pub nodes: u64,
}

/// Exact alternation number: minimum of `alt_σ` over all `n!` orderings.
/// Each ordering's inner search aborts as soon as it provably reaches the
/// incumbent minimum.
pub fn alt_r(h: &Hypergraph, r: usize, guards: &Guards) -> Result<AltReport> {
    if r < 2 {
        return input_err(alloc::format!("r must be >= 2, got {r}"));
    }
    guards.check(
        "alternation ordering enumeration",
        guards.max_alt_n as u64,
        h.n() as u64,
    )?;
    let by_v = h.edges_by_vertex();
    let mut sigma: Vec<usize> = (1..=h.n()).collect();
    let mut nodes = 0u64;

    let (mut best, _, n0, _) = alt_sigma_search(h, &by_v, r, &sigma, usize::MAX);
    nodes += n0;
    let mut best_sigma = sigma.clone();

    while best > 0 && next_permutation(&mut sigma) {
        let (value, _, n, aborted) = alt_sigma_search(h, &by_v, r, &sigma, best);
        nodes += n;
        if !aborted && value < best {
            best = value;
            best_sigma = sigma.clone();
        }
    }
    Ok(AltReport {
        value: best,
        sigma: best_sigma,
        nodes,
    })
}
