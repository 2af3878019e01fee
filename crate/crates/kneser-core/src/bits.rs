//! Fixed-width vertex sets.
//!
//! Every vertex subset in this crate is a single `u64` bitmask: vertex `i`
//! (1-based) lives at bit `i - 1`. This caps ground hypergraphs at
//! [`MAX_VERTICES`] vertices and keeps all set operations single-word.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// Hard cap on ground-hypergraph vertex counts.
pub const MAX_VERTICES: usize = 63;

/// A subset of `{1..n}` for some `n <= 63`, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VSet(pub u64);

impl VSet {
    pub const EMPTY: VSet = VSet(0);

    /// The full set `{1..n}`.
    pub fn full(n: usize) -> VSet {
        debug_assert!(n <= MAX_VERTICES);
        if n == 0 {
            VSet(0)
        } else {
            VSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> VSet {
        debug_assert!((1..=MAX_VERTICES).contains(&v));
        VSet(1u64 << (v - 1))
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> VSet {
        let mut m = 0u64;
        for v in vs {
            debug_assert!((1..=MAX_VERTICES).contains(&v));
            m |= 1u64 << (v - 1);
        }
        VSet(m)
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 & (1u64 << (v - 1)) != 0
    }

    #[must_use]
    pub fn with(self, v: usize) -> VSet {
        VSet(self.0 | VSet::singleton(v).0)
    }

    #[must_use]
    pub fn without(self, v: usize) -> VSet {
        VSet(self.0 & !VSet::singleton(v).0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: VSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: VSet) -> bool {
        self.0 & other.0 != 0
    }

    #[must_use]
    pub fn union(self, other: VSet) -> VSet {
        VSet(self.0 | other.0)
    }

    #[must_use]
    pub fn intersection(self, other: VSet) -> VSet {
        VSet(self.0 & other.0)
    }

    #[must_use]
    pub fn difference(self, other: VSet) -> VSet {
        VSet(self.0 & !other.0)
    }

    /// Smallest vertex id, or `None` if empty.
    pub fn min_vertex(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize + 1)
        }
    }

    /// Ascending vertex ids.
    pub fn iter(self) -> VSetIter {
        VSetIter(self.0)
    }

    pub fn vertices(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Canonical edge order: by size, then lexicographically on the
    /// ascending vertex lists.
    pub fn canon_cmp(a: VSet, b: VSet) -> Ordering {
        match a.len().cmp(&b.len()) {
            Ordering::Equal => {
                if a == b {
                    return Ordering::Equal;
                }
                // With equal sizes, lex order on sorted lists is decided by
                // the lowest bit where the two masks differ.
                let d = a.0 ^ b.0;
                let low = d & d.wrapping_neg();
                if a.0 & low != 0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
            o => o,
        }
    }
}

pub struct VSetIter(u64);

impl Iterator for VSetIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize + 1;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

impl fmt::Debug for VSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for VSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// All subsets of `{1..n}` in canonical (size, then lex) order.
pub fn subsets_by_size(n: usize) -> Vec<VSet> {
    let mut all: Vec<VSet> = (0..(1u64 << n)).map(VSet).collect();
    all.sort_by(|a, b| VSet::canon_cmp(*a, *b));
    all
}

/// All `k`-subsets of `{1..n}` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<VSet> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    if k == 0 {
        out.push(VSet::EMPTY);
        return out;
    }
    let mut cur: Vec<usize> = (1..=k).collect();
    loop {
        out.push(VSet::from_vertices(cur.iter().copied()));
        // advance to the next combination
        let mut i = k;
        while i > 0 && cur[i - 1] == n - (k - i) {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        cur[i - 1] += 1;
        for j in i..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
    out
}

/// In-place lexicographic successor. Returns `false` when `perm` was the
/// last permutation.
pub fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// Binomial coefficient, saturating at `u64::MAX`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// `ceil(a / b)` for nonnegative `a` and positive `b`.
pub fn ceil_div(a: usize, b: usize) -> usize {
    debug_assert!(b > 0);
    a.div_ceil(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn canon_order_is_size_then_lex() {
        // {1,4} precedes {2,3} lexicographically even though its mask is larger.
        let a = VSet::from_vertices([1, 4]);
        let b = VSet::from_vertices([2, 3]);
        assert_eq!(VSet::canon_cmp(a, b), Ordering::Less);
        assert_eq!(
            VSet::canon_cmp(VSet::from_vertices([3]), VSet::from_vertices([1, 2])),
            Ordering::Less
        );
    }

    #[test]
    fn canon_order_matches_list_comparison() {
        // cross-check against explicit (size, sorted list) comparison for n = 5
        let mut by_mask = subsets_by_size(5);
        let mut by_list: Vec<VSet> = (0..32u64).map(VSet).collect();
        by_list.sort_by_key(|s| (s.len(), s.vertices()));
        assert_eq!(by_mask.len(), by_list.len());
        by_mask.iter_mut().zip(by_list).for_each(|(a, b)| assert_eq!(*a, b));
    }

    #[test]
    fn k_subsets_lex() {
        let tri = k_subsets(4, 2);
        let got: Vec<Vec<usize>> = tri.iter().map(|s| s.vertices()).collect();
        assert_eq!(
            got,
            vec![
                vec![1, 2],
                vec![1, 3],
                vec![1, 4],
                vec![2, 3],
                vec![2, 4],
                vec![3, 4]
            ]
        );
        assert_eq!(k_subsets(9, 2).len(), 36);
        assert_eq!(k_subsets(3, 0), vec![VSet::EMPTY]);
    }

    #[test]
    fn permutation_order() {
        let mut p = vec![1, 2, 3];
        let mut seen = vec![p.clone()];
        while next_permutation(&mut p) {
            seen.push(p.clone());
        }
        assert_eq!(seen.len(), 6);
        assert_eq!(seen[0], vec![1, 2, 3]);
        assert_eq!(seen[5], vec![3, 2, 1]);
        let mut sorted = seen.clone();
        sorted.sort();
        assert_eq!(seen, sorted);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(10, 2), 45);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(4, 5), 0);
        assert_eq!(binomial(200, 100), u64::MAX);
    }

    #[test]
    fn ceil_div_examples() {
        assert_eq!(ceil_div(0, 3), 0);
        assert_eq!(ceil_div(7, 2), 4);
        assert_eq!(ceil_div(6, 2), 3);
    }
}
