//! Seeded instance generation for randomized cross-checks.
//!
//! ChaCha8 keeps every sampled instance reproducible from the recorded
//! seed.

use kneser_core::{Hypergraph, SVector, VSet};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn usize_in(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.random_range(lo..=hi)
    }

    /// Random hypergraph on `n` vertices with up to `max_edges` edges of
    /// sizes in `[min_size, max_size]` (duplicates collapse).
    pub fn hypergraph(
        &mut self,
        n: usize,
        max_edges: usize,
        min_size: usize,
        max_size: usize,
    ) -> Hypergraph {
        let max_size = max_size.min(n);
        let m = self.rng.random_range(1..=max_edges.max(1));
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let size = self.rng.random_range(min_size..=max_size.max(min_size));
            let mut verts: Vec<usize> = (1..=n).collect();
            verts.shuffle(&mut self.rng);
            verts.truncate(size);
            edges.push(VSet::from_vertices(verts));
        }
        Hypergraph::new(n, edges).expect("sampled edges are valid")
    }

    /// Random graph on `n` vertices, each pair an edge with probability
    /// `density` percent.
    pub fn graph(&mut self, n: usize, density: u32) -> Hypergraph {
        let mut edges = Vec::new();
        for a in 1..=n {
            for b in (a + 1)..=n {
                if self.rng.random_range(0..100) < density {
                    edges.push(VSet::from_vertices([a, b]));
                }
            }
        }
        Hypergraph::new(n, edges).expect("sampled edges are valid")
    }

    /// Random multiplicity vector with entries in `[1, max_entry]`.
    pub fn svector(&mut self, n: usize, max_entry: u32) -> SVector {
        SVector::new(
            (0..n)
                .map(|_| self.rng.random_range(1..=max_entry.max(1)))
                .collect(),
        )
        .expect("entries are positive")
    }

    pub fn permutation(&mut self, n: usize) -> Vec<usize> {
        let mut p: Vec<usize> = (1..=n).collect();
        p.shuffle(&mut self.rng);
        p
    }
}
