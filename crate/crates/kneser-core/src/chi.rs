//! Exact chromatic numbers for small hypergraphs.
//!
//! The solver decides `t`-colorability for `t = 1, 2, ...` by depth-first
//! search, branching on the uncolored vertex that sits in the most
//! near-monochromatic edges (ties to the smallest id). Candidate colors are
//! restricted to the colors already in use plus one fresh representative,
//! which is complete because unused colors are interchangeable. Once the
//! smallest feasible `t` is known, the witness is lexicographically
//! minimized color by color, so equal inputs always produce byte-equal
//! witnesses.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hypergraph::{greedy_upper, Coloring, Hypergraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChiOutcome {
    Chromatic { chi: usize, witness: Coloring },
    /// No proper coloring with at most `limit` colors exists. This is a
    /// reported outcome, not an error.
    LimitExceeded { limit: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiReport {
    pub outcome: ChiOutcome,
    /// Search nodes expanded; deterministic for fixed input, usable as a
    /// machine-independent cost measure.
    pub nodes: u64,
}

struct Search<'a> {
    h: &'a Hypergraph,
    by_v: Vec<Vec<usize>>,
    t: usize,
    assign: Vec<usize>, // 0 = uncolored
    color_uses: Vec<u32>,
    scores: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl<'a> Search<'a> {
    fn new(h: &'a Hypergraph, t: usize, budget: u64) -> Self {
        Search {
            h,
            by_v: h.edges_by_vertex(),
            t,
            assign: alloc::vec![0; h.n()],
            color_uses: alloc::vec![0; t + 1],
            scores: alloc::vec![0; h.n() + 1],
            nodes: 0,
            budget,
        }
    }

    fn spend(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::Guard {
                what: "solver node budget",
                limit: self.budget,
                requested: self.nodes,
            });
        }
        Ok(())
    }

    /// Branch vertex: uncolored vertex contained in the most edges whose
    /// colored vertices all share one color, smallest id on ties.
    fn pick_vertex(&mut self) -> Option<usize> {
        for s in self.scores.iter_mut() {
            *s = 0;
        }
        for e in self.h.edges() {
            let mut shared = 0usize;
            let mut near = true;
            let mut uncolored = false;
            for u in e.iter() {
                let c = self.assign[u - 1];
                if c == 0 {
                    uncolored = true;
                    continue;
                }
                if shared == 0 {
                    shared = c;
                } else if shared != c {
                    near = false;
                    break;
                }
            }
            if near && shared != 0 && uncolored {
                for u in e.iter() {
                    if self.assign[u - 1] == 0 {
                        self.scores[u] += 1;
                    }
                }
            }
        }
        let mut best: Option<(usize, usize)> = None; // (score, v)
        for v in 1..=self.h.n() {
            if self.assign[v - 1] != 0 {
                continue;
            }
            let better = match best {
                None => true,
                Some((s, _)) => self.scores[v] > s,
            };
            if better {
                best = Some((self.scores[v], v));
            }
        }
        best.map(|(_, v)| v)
    }

    /// Colors `v` must avoid: any color that would complete an edge
    /// monochromatically.
    fn forbidden_mask(&self, v: usize) -> u64 {
        let mut forbid = 0u64;
        'edges: for &ei in &self.by_v[v] {
            let mut shared = 0usize;
            for u in self.h.edges()[ei].iter() {
                if u == v {
                    continue;
                }
                let c = self.assign[u - 1];
                if c == 0 {
                    continue 'edges;
                }
                if shared == 0 {
                    shared = c;
                } else if shared != c {
                    continue 'edges;
                }
            }
            if shared != 0 {
                forbid |= 1u64 << shared;
            } else if self.h.edges()[ei].len() == 1 {
                return u64::MAX; // singleton edge: every color forbidden
            }
        }
        forbid
    }

    fn set(&mut self, v: usize, c: usize) {
        self.assign[v - 1] = c;
        self.color_uses[c] += 1;
    }

    fn unset(&mut self, v: usize) {
        let c = self.assign[v - 1];
        self.assign[v - 1] = 0;
        self.color_uses[c] -= 1;
    }

    fn dfs(&mut self, uncolored: usize) -> Result<bool> {
        self.spend()?;
        if uncolored == 0 {
            return Ok(true);
        }
        let v = match self.pick_vertex() {
            Some(v) => v,
            None => return Ok(true),
        };
        let forbid = self.forbidden_mask(v);
        let min_unused = (1..=self.t).find(|&c| self.color_uses[c] == 0);
        for c in 1..=self.t {
            if self.color_uses[c] == 0 && Some(c) != min_unused {
                continue; // unused colors are interchangeable; try one representative
            }
            if forbid & (1u64 << c) != 0 {
                continue;
            }
            self.set(v, c);
            if self.dfs(uncolored - 1)? {
                return Ok(true);
            }
            self.unset(v);
        }
        Ok(false)
    }

    /// Searches for a proper `t`-coloring extending `prefix` (vertex,
    /// color pairs). Returns the full assignment found, if any.
    fn find_any(&mut self, prefix: &[(usize, usize)]) -> Result<Option<Vec<usize>>> {
        for c in self.color_uses.iter_mut() {
            *c = 0;
        }
        for a in self.assign.iter_mut() {
            *a = 0;
        }
        for &(v, c) in prefix {
            self.set(v, c);
        }
        // an edge fully colored by the prefix may already be monochromatic
        for e in self.h.edges() {
            let mut shared = 0usize;
            let mut complete = true;
            for u in e.iter() {
                let c = self.assign[u - 1];
                if c == 0 {
                    complete = false;
                    break;
                }
                if shared == 0 {
                    shared = c;
                } else if shared != c {
                    complete = false;
                    break;
                }
            }
            if complete && shared != 0 {
                return Ok(None);
            }
        }
        if self.dfs(self.h.n() - prefix.len())? {
            Ok(Some(self.assign.clone()))
        } else {
            Ok(None)
        }
    }
}

/// Decides whether `h` admits a proper `t`-coloring. Returns the decision
/// plus the node count.
pub fn is_t_colorable_budgeted(h: &Hypergraph, t: usize, budget: u64) -> Result<(bool, u64)> {
    if let Some(v) = h.singleton_edge() {
        return Err(Error::Uncolorable { vertex: v });
    }
    if t == 0 {
        return Ok((h.n() == 0, 0));
    }
    if h.n() == 0 {
        return Ok((true, 0));
    }
    let mut s = Search::new(h, t, budget);
    let found = s.find_any(&[])?;
    Ok((found.is_some(), s.nodes))
}

pub fn is_t_colorable(h: &Hypergraph, t: usize) -> Result<bool> {
    is_t_colorable_budgeted(h, t, u64::MAX).map(|(ok, _)| ok)
}

/// Smallest `t <= limit` admitting a proper `t`-coloring, with the
/// lexicographically least witness, or [`ChiOutcome::LimitExceeded`].
pub fn chromatic_number(h: &Hypergraph, limit: usize) -> Result<ChiReport> {
    chromatic_number_budgeted(h, limit, u64::MAX)
}

pub fn chromatic_number_budgeted(h: &Hypergraph, limit: usize, budget: u64) -> Result<ChiReport> {
    if let Some(v) = h.singleton_edge() {
        return Err(Error::Uncolorable { vertex: v });
    }
    if limit == 0 {
        return Err(Error::Input(alloc::string::String::from("limit must be >= 1")));
    }
    if h.n() == 0 {
        return Ok(ChiReport {
            outcome: ChiOutcome::Chromatic {
                chi: 1,
                witness: Coloring::new(1, Vec::new())?,
            },
            nodes: 0,
        });
    }
    let upper = greedy_upper(h)?.palette();
    let mut nodes = 0u64;
    for t in 1..=limit.min(upper.max(1)) {
        let mut s = Search::new(h, t, budget.saturating_sub(nodes));
        let found = match s.find_any(&[]) {
            Ok(f) => f,
            Err(e) => {
                return Err(adjust_budget_error(e, nodes));
            }
        };
        nodes += s.nodes;
        if let Some(mut sol) = found {
            // lexicographic minimization, one vertex at a time
            let mut prefix: Vec<(usize, usize)> = Vec::with_capacity(h.n());
            for v in 1..=h.n() {
                for c in 1..sol[v - 1] {
                    prefix.push((v, c));
                    let mut s = Search::new(h, t, budget.saturating_sub(nodes));
                    let improved = match s.find_any(&prefix) {
                        Ok(f) => f,
                        Err(e) => return Err(adjust_budget_error(e, nodes)),
                    };
                    nodes += s.nodes;
                    prefix.pop();
                    if let Some(better) = improved {
                        sol = better;
                        break;
                    }
                }
                prefix.push((v, sol[v - 1]));
            }
            return Ok(ChiReport {
                outcome: ChiOutcome::Chromatic {
                    chi: t,
                    witness: Coloring::new(t, sol)?,
                },
                nodes,
            });
        }
        if t >= limit {
            break;
        }
    }
    Ok(ChiReport {
        outcome: ChiOutcome::LimitExceeded { limit },
        nodes,
    })
}

fn adjust_budget_error(e: Error, spent_before: u64) -> Error {
    match e {
        Error::Guard {
            what,
            limit,
            requested,
        } => Error::Guard {
            what,
            limit: limit.saturating_add(spent_before),
            requested: requested.saturating_add(spent_before),
        },
        other => other,
    }
}

/// Decides whether `h` admits an equitable proper `r`-coloring: a proper
/// coloring with exactly `r` declared classes whose sizes pairwise differ
/// by at most one.
pub(crate) fn equitable_colorable(h: &Hypergraph, r: usize) -> Result<bool> {
    if h.singleton_edge().is_some() {
        return Ok(false);
    }
    let n = h.n();
    if n == 0 {
        return Ok(true);
    }
    // class sizes are forced up to relabeling: `rem` classes of size q+1
    let q = n / r;
    let rem = n % r;
    let mut caps: Vec<usize> = (0..r).map(|i| if i < rem { q + 1 } else { q }).collect();
    let by_v = h.edges_by_vertex();
    let mut assign = alloc::vec![0usize; n];

    fn dfs(
        h: &Hypergraph,
        by_v: &[Vec<usize>],
        caps: &mut [usize],
        assign: &mut [usize],
        v: usize,
    ) -> bool {
        if v > h.n() {
            return true;
        }
        'colors: for c in 1..=caps.len() {
            if caps[c - 1] == 0 {
                continue;
            }
            for &ei in &by_v[v] {
                let mut all_same = true;
                for u in h.edges()[ei].iter() {
                    if u == v {
                        continue;
                    }
                    if assign[u - 1] != c {
                        all_same = false;
                        break;
                    }
                }
                if all_same {
                    continue 'colors;
                }
            }
            caps[c - 1] -= 1;
            assign[v - 1] = c;
            if dfs(h, by_v, caps, assign, v + 1) {
                return true;
            }
            assign[v - 1] = 0;
            caps[c - 1] += 1;
        }
        false
    }

    Ok(dfs(h, &by_v, &mut caps, &mut assign, 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::k_subsets;
    use alloc::vec;

    fn h(n: usize, lists: &[&[usize]]) -> Hypergraph {
        Hypergraph::from_vertex_lists(n, &lists.iter().map(|l| l.to_vec()).collect::<Vec<_>>())
            .unwrap()
    }

    fn chi(g: &Hypergraph) -> usize {
        match chromatic_number(g, g.n().max(1)).unwrap().outcome {
            ChiOutcome::Chromatic { chi, .. } => chi,
            ChiOutcome::LimitExceeded { .. } => panic!("limit hit"),
        }
    }

    #[test]
    fn small_graphs() {
        assert_eq!(chi(&Hypergraph::edgeless(4)), 1);
        assert_eq!(chi(&h(2, &[&[1, 2]])), 2);
        assert_eq!(chi(&h(3, &[&[1, 2], &[2, 3], &[1, 3]])), 3);
        // odd cycle C5
        assert_eq!(chi(&h(5, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[1, 5]])), 3);
        // K4
        let k4 = Hypergraph::new(4, k_subsets(4, 2)).unwrap();
        assert_eq!(chi(&k4), 4);
        // a 3-uniform hypergraph is 2-colorable unless a monochromatic triple is forced
        assert_eq!(chi(&h(3, &[&[1, 2, 3]])), 2);
    }

    #[test]
    fn limit_outcome_and_errors() {
        let k4 = Hypergraph::new(4, k_subsets(4, 2)).unwrap();
        match chromatic_number(&k4, 3).unwrap().outcome {
            ChiOutcome::LimitExceeded { limit } => assert_eq!(limit, 3),
            _ => panic!("expected limit outcome"),
        }
        assert!(matches!(
            chromatic_number(&h(2, &[&[1]]), 5),
            Err(Error::Uncolorable { vertex: 1 })
        ));
        assert!(chromatic_number(&Hypergraph::edgeless(2), 0).is_err());
    }

    #[test]
    fn witness_is_proper_and_lex_least() {
        // brute-force lex minimum over all proper t-colorings, small cases
        for g in [
            h(4, &[&[1, 2], &[2, 3], &[3, 4]]),
            h(4, &[&[1, 2], &[1, 3], &[1, 4], &[2, 3], &[2, 4], &[3, 4]]),
            h(5, &[&[1, 2, 3], &[3, 4, 5], &[1, 5]]),
            h(5, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[1, 5]]),
        ] {
            let rep = chromatic_number(&g, g.n()).unwrap();
            let ChiOutcome::Chromatic { chi, witness } = rep.outcome else {
                panic!("limit hit");
            };
            assert!(g.is_proper(&witness).unwrap());
            let n = g.n();
            let mut best: Option<Vec<usize>> = None;
            let mut any_smaller = false;
            let mut assign = vec![1usize; n];
            loop {
                let c = Coloring::new(chi, assign.clone()).unwrap();
                if g.is_proper(&c).unwrap() {
                    let distinct = {
                        let mut s = assign.clone();
                        s.sort_unstable();
                        s.dedup();
                        s.len()
                    };
                    if distinct < chi {
                        any_smaller = true;
                    }
                    if best.as_ref().is_none_or(|b| assign < *b) {
                        best = Some(assign.clone());
                    }
                }
                // odometer over palette
                let mut i = 0;
                loop {
                    if i == n {
                        break;
                    }
                    if assign[i] < chi {
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
            assert!(!any_smaller, "chi is not minimal");
            assert_eq!(witness.assignment(), best.unwrap().as_slice());
        }
    }

    #[test]
    fn budget_guard_fires() {
        let k4 = Hypergraph::new(4, k_subsets(4, 2)).unwrap();
        assert!(matches!(
            chromatic_number_budgeted(&k4, 4, 2),
            Err(Error::Guard { .. })
        ));
    }

    #[test]
    fn equitable_decision() {
        // K_{1,3}: proper 2-colorings exist but the classes are (1,3); with
        // 4 vertices an equitable 2-coloring needs sizes (2,2).
        let star = h(4, &[&[1, 2], &[1, 3], &[1, 4]]);
        assert!(!equitable_colorable(&star, 2).unwrap());
        assert!(equitable_colorable(&star, 3).unwrap());
        assert!(equitable_colorable(&Hypergraph::edgeless(5), 2).unwrap());
        assert!(!equitable_colorable(&h(2, &[&[1]]), 2).unwrap());
    }
}
