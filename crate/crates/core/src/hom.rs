//! Homomorphisms and isomorphism search by backtracking over generator images.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::group::{Elem, GroupTable, IDENTITY};

/// A map between two tables given by the image of every source element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    source: GroupTable,
    target: GroupTable,
    image: Vec<Elem>,
}

impl GroupHom {
    /// Validates shape, range and the homomorphism property.
    pub fn new(source: GroupTable, target: GroupTable, image: Vec<Elem>) -> Result<Self> {
        if image.len() != source.order() {
            return Err(Error::Invariant("homomorphism image has the wrong length"));
        }
        for &y in &image {
            target.check(y)?;
        }
        let hom = GroupHom { source, target, image };
        hom.check_homomorphism()
            .map_err(|_| Error::Invariant("map is not a homomorphism"))?;
        Ok(hom)
    }

    pub(crate) fn new_unchecked(source: GroupTable, target: GroupTable, image: Vec<Elem>) -> Self {
        GroupHom { source, target, image }
    }

    pub fn identity(g: &GroupTable) -> Self {
        GroupHom {
            source: g.clone(),
            target: g.clone(),
            image: g.elements().collect(),
        }
    }

    pub fn source(&self) -> &GroupTable {
        &self.source
    }

    pub fn target(&self) -> &GroupTable {
        &self.target
    }

    pub fn image(&self) -> &[Elem] {
        &self.image
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.image[x]
    }

    /// First pair `(a, b)` with `f(a·b) != f(a)·f(b)`, if any.
    pub fn check_homomorphism(&self) -> core::result::Result<(), (Elem, Elem)> {
        let (s, t) = (&self.source, &self.target);
        for a in s.elements() {
            for b in s.elements() {
                if self.image[s.mul(a, b)] != t.mul(self.image[a], self.image[b]) {
                    return Err((a, b));
                }
            }
        }
        Ok(())
    }

    pub fn is_injective(&self) -> bool {
        let mut hit = vec![false; self.target.order()];
        self.image.iter().all(|&y| !core::mem::replace(&mut hit[y], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target.order()];
        for &y in &self.image {
            hit[y] = true;
        }
        hit.iter().all(|&h| h)
    }

    pub fn is_bijective(&self) -> bool {
        self.source.order() == self.target.order() && self.is_injective()
    }

    /// Source elements mapped to the identity, ascending.
    pub fn kernel(&self) -> Vec<Elem> {
        self.source.elements().filter(|&x| self.image[x] == IDENTITY).collect()
    }

    pub fn inverse(&self) -> Option<GroupHom> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.image.len()];
        for (x, &y) in self.image.iter().enumerate() {
            inv[y] = x;
        }
        Some(GroupHom {
            source: self.target.clone(),
            target: self.source.clone(),
            image: inv,
        })
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &GroupHom) -> Result<GroupHom> {
        if self.target != next.source {
            return Err(Error::ParentMismatch);
        }
        let image = self.image.iter().map(|&y| next.image[y]).collect();
        Ok(GroupHom {
            source: self.source.clone(),
            target: next.target.clone(),
            image,
        })
    }
}

/// Greedy generating set: repeatedly adjoin the element whose closure grows
/// the current subgroup the most, smallest index on ties.
pub fn generating_set(g: &GroupTable) -> Vec<Elem> {
    let n = g.order();
    let mut gens = Vec::new();
    let mut span = vec![false; n];
    span[IDENTITY] = true;
    let mut size = 1;
    while size < n {
        let mut best = (0, IDENTITY, Vec::new());
        for x in g.elements().filter(|&x| !span[x]) {
            gens.push(x);
            let cl = closure_mask(g, &gens);
            gens.pop();
            let grown = cl.iter().filter(|&&b| b).count();
            if grown > best.0 {
                best = (grown, x, cl);
            }
        }
        gens.push(best.1);
        span = best.2;
        size = best.0;
    }
    gens
}

fn closure_mask(g: &GroupTable, gens: &[Elem]) -> Vec<bool> {
    let mut seen = vec![false; g.order()];
    seen[IDENTITY] = true;
    let mut queue = vec![IDENTITY];
    while let Some(e) = queue.pop() {
        for &s in gens {
            let next = g.mul(e, s);
            if !seen[next] {
                seen[next] = true;
                queue.push(next);
            }
        }
    }
    seen
}

/// Visits every isomorphism `g1 → g2` whose element pairs all satisfy
/// `admissible`, as a full image array.
///
/// Images of the generators of [`generating_set`]`(g1)` are tried in
/// increasing index order, so the visiting order is lexicographic in the
/// generator images. After each generator is assigned the map is extended
/// to the subgroup generated so far and rejected early on any inconsistency,
/// collision or inadmissible pair. Element orders are always respected.
pub fn for_each_isomorphism<B>(
    g1: &GroupTable,
    g2: &GroupTable,
    admissible: impl Fn(Elem, Elem) -> bool,
    mut visit: impl FnMut(&[Elem]) -> ControlFlow<B>,
) -> Option<B> {
    if g1.order() != g2.order() || g1.order_profile() != g2.order_profile() {
        return None;
    }
    let gens = generating_set(g1);
    let mut search = IsoSearch {
        g1,
        g2,
        gens: &gens,
        images: Vec::with_capacity(gens.len()),
        admissible: &admissible,
    };
    match search.descend(&mut visit) {
        ControlFlow::Break(b) => Some(b),
        ControlFlow::Continue(()) => None,
    }
}

struct IsoSearch<'a, F> {
    g1: &'a GroupTable,
    g2: &'a GroupTable,
    gens: &'a [Elem],
    images: Vec<Elem>,
    admissible: &'a F,
}

impl<F: Fn(Elem, Elem) -> bool> IsoSearch<'_, F> {
    fn descend<B>(&mut self, visit: &mut impl FnMut(&[Elem]) -> ControlFlow<B>) -> ControlFlow<B> {
        let depth = self.images.len();
        if depth == self.gens.len() {
            // The generators span g1, so the partial map is total here.
            return match self.extend() {
                Some(map) => visit(&map),
                None => ControlFlow::Continue(()),
            };
        }
        let gen = self.gens[depth];
        let want = self.g1.order_of(gen);
        for y in self.g2.elements() {
            if self.g2.order_of(y) != want || !(self.admissible)(gen, y) {
                continue;
            }
            self.images.push(y);
            let ok = depth + 1 == self.gens.len() || self.extend().is_some();
            if ok {
                self.descend(visit)?;
            }
            self.images.pop();
        }
        ControlFlow::Continue(())
    }

    /// Extends the assigned generator images to the subgroup they generate.
    /// Returns the full image array (with `usize::MAX` outside the subgroup)
    /// or `None` if the assignment cannot be part of an isomorphism.
    fn extend(&self) -> Option<Vec<Elem>> {
        let (g1, g2) = (self.g1, self.g2);
        let gens = &self.gens[..self.images.len()];
        let mut map = vec![usize::MAX; g1.order()];
        let mut used = vec![false; g2.order()];
        map[IDENTITY] = IDENTITY;
        used[IDENTITY] = true;
        let mut queue = vec![IDENTITY];
        while let Some(e) = queue.pop() {
            for (&s, &t) in gens.iter().zip(&self.images) {
                let x = g1.mul(e, s);
                let y = g2.mul(map[e], t);
                if map[x] == usize::MAX {
                    if used[y] || !(self.admissible)(x, y) {
                        return None;
                    }
                    map[x] = y;
                    used[y] = true;
                    queue.push(x);
                } else if map[x] != y {
                    return None;
                }
            }
        }
        Some(map)
    }
}

/// First isomorphism in generator-image order, if the groups are isomorphic.
pub fn find_isomorphism(g1: &GroupTable, g2: &GroupTable) -> Option<GroupHom> {
    for_each_isomorphism(g1, g2, |_, _| true, |map| ControlFlow::Break(map.to_vec()))
        .map(|image| GroupHom::new_unchecked(g1.clone(), g2.clone(), image))
}

pub fn are_isomorphic(g1: &GroupTable, g2: &GroupTable) -> bool {
    find_isomorphism(g1, g2).is_some()
}

/// Every isomorphism `g1 → g2`.
pub fn isomorphisms(g1: &GroupTable, g2: &GroupTable) -> Vec<GroupHom> {
    let mut out = Vec::new();
    for_each_isomorphism::<()>(
        g1,
        g2,
        |_, _| true,
        |map| {
            out.push(GroupHom::new_unchecked(g1.clone(), g2.clone(), map.to_vec()));
            ControlFlow::Continue(())
        },
    );
    out
}
