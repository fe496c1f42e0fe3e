//! Brute-force reference implementations. They only read Cayley tables
//! and share no code with the library beyond `GroupTable` accessors.

#![allow(dead_code)]

use autocomm_core::{GroupTable, Rational};
use itertools::Itertools;

/// Every permutation of the `n` elements that preserves the product.
pub fn automorphisms(g: &GroupTable) -> Vec<Vec<usize>> {
    let n = g.order();
    (0..n)
        .permutations(n)
        .filter(|p| (0..n).all(|a| (0..n).all(|b| p[g.mul(a, b)] == g.mul(p[a], p[b]))))
        .collect()
}

/// `#{(x, α) : α(x) = x} / (|H| |A|)` over explicit image arrays.
pub fn degree(h: &[usize], auts: &[Vec<usize>]) -> Rational {
    let fixed = h
        .iter()
        .map(|&x| auts.iter().filter(|a| a[x] == x).count())
        .sum::<usize>();
    Rational::ratio(fixed, h.len() * auts.len())
}

/// `#{(x, y) ∈ H × G : xy = yx} / (|H| |G|)`.
pub fn commuting(h: &[usize], g: &GroupTable) -> Rational {
    let n = g.order();
    let count = h
        .iter()
        .map(|&x| (0..n).filter(|&y| g.mul(x, y) == g.mul(y, x)).count())
        .sum::<usize>();
    Rational::ratio(count, h.len() * n)
}

/// All subsets containing the identity that are closed under the product,
/// sorted by size then members.
pub fn subgroups(g: &GroupTable) -> Vec<Vec<usize>> {
    let n = g.order();
    assert!(n <= 16, "subset enumeration is exponential");
    let mut out = Vec::new();
    for mask in 0u32..(1 << (n - 1)) {
        let set: Vec<usize> = std::iter::once(0)
            .chain((1..n).filter(|&i| mask & (1 << (i - 1)) != 0))
            .collect();
        let mut inside = vec![false; n];
        set.iter().for_each(|&x| inside[x] = true);
        if set.iter().all(|&a| set.iter().all(|&b| inside[g.mul(a, b)])) {
            out.push(set);
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// `{x ∈ H : α(x) = x for all α}`.
pub fn autocentre(h: &[usize], auts: &[Vec<usize>]) -> Vec<usize> {
    h.iter().copied().filter(|&x| auts.iter().all(|a| a[x] == x)).collect()
}

/// `{x⁻¹α(x)}` over `x ∈ H`, `α ∈ A`, sorted and deduplicated.
pub fn autocommutators(g: &GroupTable, h: &[usize], auts: &[Vec<usize>]) -> Vec<usize> {
    let inv = |x: usize| (0..g.order()).find(|&y| g.mul(x, y) == 0).unwrap();
    let mut s: Vec<usize> = h
        .iter()
        .flat_map(|&x| auts.iter().map(move |a| g.mul(inv(x), a[x])))
        .collect();
    s.sort_unstable();
    s.dedup();
    s
}
