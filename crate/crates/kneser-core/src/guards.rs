//! Resource guards.
//!
//! Every exponential search refuses instances above a configured size
//! instead of running away. Guards are plain data so callers (tests, the
//! CLI) can widen or tighten them per run.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Guards {
    /// Ground vertex cap for exhaustive per-subset work: defect
    /// maximization, removal brute force, single-ordering alternation
    /// search.
    pub max_n: usize,
    /// Ground vertex cap for full vertex-ordering enumeration (`n!`
    /// orderings).
    pub max_alt_n: usize,
    /// Ground vertex cap for reduction-hypergraph construction (`2^n`
    /// induced-defect evaluations).
    pub max_kriz_n: usize,
    /// Derived Kneser hypergraph vertex cap.
    pub max_kg_vertices: usize,
    /// Derived Kneser hypergraph edge cap.
    pub max_kg_edges: u64,
    /// Search-node budget for the exact coloring solver; `u64::MAX` means
    /// unbounded.
    pub node_budget: u64,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            max_n: 20,
            max_alt_n: 9,
            max_kriz_n: 12,
            max_kg_vertices: 5000,
            max_kg_edges: 10_000_000,
            node_budget: u64::MAX,
        }
    }
}

impl Guards {
    pub fn check(&self, what: &'static str, limit: u64, requested: u64) -> Result<()> {
        if requested > limit {
            Err(Error::Guard {
                what,
                limit,
                requested,
            })
        } else {
            Ok(())
        }
    }
}
