//! Automorphism groups.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::group::{same_parent, Elem, GroupTable};
use crate::hom::for_each_isomorphism;

/// Default bound on `|G|` for [`compute_aut`].
pub const DEFAULT_AUT_CAP: usize = 64;

/// An automorphism stored as its full image array.
#[derive(Clone, PartialEq, Eq)]
pub struct Automorphism {
    parent: GroupTable,
    image: Vec<Elem>,
}

impl Automorphism {
    /// Checks that `image` is a bijective endomorphism of `parent`.
    pub fn new(parent: &GroupTable, image: Vec<Elem>) -> Result<Self> {
        let n = parent.order();
        if image.len() != n {
            return Err(Error::Invariant("automorphism image has the wrong length"));
        }
        let mut hit = alloc::vec![false; n];
        for &y in &image {
            parent.check(y)?;
            if core::mem::replace(&mut hit[y], true) {
                return Err(Error::Invariant("automorphism is not a bijection"));
            }
        }
        let hom = (0..n).all(|a| (0..n).all(|b| image[parent.mul(a, b)] == parent.mul(image[a], image[b])));
        if !hom {
            return Err(Error::Invariant("map does not preserve the group operation"));
        }
        Ok(Automorphism {
            parent: parent.clone(),
            image,
        })
    }

    pub(crate) fn from_image(parent: &GroupTable, image: Vec<Elem>) -> Self {
        Automorphism {
            parent: parent.clone(),
            image,
        }
    }

    pub fn identity(parent: &GroupTable) -> Self {
        Self::from_image(parent, parent.elements().collect())
    }

    /// Conjugation `x ↦ g x g⁻¹`.
    pub fn inner(parent: &GroupTable, g: Elem) -> Self {
        Self::from_image(parent, parent.elements().map(|x| parent.conjugate(g, x)).collect())
    }

    pub fn parent(&self) -> &GroupTable {
        &self.parent
    }

    pub fn image(&self) -> &[Elem] {
        &self.image
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.image[x]
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &y)| i == y)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        let image = other.image.iter().map(|&y| self.image[y]).collect();
        Automorphism {
            parent: self.parent.clone(),
            image,
        }
    }

    pub fn inverse(&self) -> Automorphism {
        let mut inv = alloc::vec![0; self.image.len()];
        for (x, &y) in self.image.iter().enumerate() {
            inv[y] = x;
        }
        Automorphism {
            parent: self.parent.clone(),
            image: inv,
        }
    }

    /// Disjoint cycles of length at least two, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<Elem>> {
        let mut seen = alloc::vec![false; self.image.len()];
        let mut out = Vec::new();
        for start in 0..self.image.len() {
            if seen[start] || self.image[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.image[x];
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Debug for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Automorphism{:?}", self.image)
    }
}

/// Cycle notation, `()` for the identity.
impl fmt::Display for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            let parts: Vec<String> = c.iter().map(|x| alloc::format!("{x}")).collect();
            f.write_str(&parts.join(" "))?;
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// A group of automorphisms of one parent, sorted by image array. The
/// identity automorphism is always the first member.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AutGroup {
    parent: GroupTable,
    members: Vec<Automorphism>,
}

impl AutGroup {
    /// Sorts and deduplicates `members` and checks closure.
    pub fn new(parent: &GroupTable, members: Vec<Automorphism>) -> Result<Self> {
        for m in &members {
            same_parent(parent, &m.parent)?;
        }
        let a = Self::from_members(parent, members);
        if !a.is_closed() {
            return Err(Error::Invariant("automorphism set is not closed under composition"));
        }
        Ok(a)
    }

    pub(crate) fn from_members(parent: &GroupTable, mut members: Vec<Automorphism>) -> Self {
        members.sort_by(|a, b| a.image.cmp(&b.image));
        members.dedup_by(|a, b| a.image == b.image);
        AutGroup {
            parent: parent.clone(),
            members,
        }
    }

    /// The group `{I}`.
    pub fn trivial(parent: &GroupTable) -> Self {
        AutGroup {
            parent: parent.clone(),
            members: alloc::vec![Automorphism::identity(parent)],
        }
    }

    pub fn parent(&self) -> &GroupTable {
        &self.parent
    }

    pub fn members(&self) -> &[Automorphism] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn get(&self, i: usize) -> &Automorphism {
        &self.members[i]
    }

    pub fn index_of(&self, alpha: &Automorphism) -> Option<usize> {
        self.members
            .binary_search_by(|m| m.image.as_slice().cmp(alpha.image.as_slice()))
            .ok()
    }

    pub fn contains(&self, alpha: &Automorphism) -> bool {
        self.index_of(alpha).is_some()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    /// Members satisfying `keep`, as a subgroup when the predicate selects one.
    pub fn filter(&self, keep: impl Fn(&Automorphism) -> bool) -> AutGroup {
        let members = self.members.iter().filter(|m| keep(m)).cloned().collect();
        AutGroup {
            parent: self.parent.clone(),
            members,
        }
    }

    pub fn is_subset_of(&self, other: &AutGroup) -> bool {
        self.parent == other.parent && self.members.iter().all(|m| other.contains(m))
    }

    pub fn is_closed(&self) -> bool {
        !self.members.is_empty()
            && self.members[0].is_identity()
            && self
                .members
                .iter()
                .all(|a| self.contains(&a.inverse()) && self.members.iter().all(|b| self.contains(&a.compose(b))))
    }

    /// Cayley table of the members under composition; entry `(i, j)` is the
    /// index of `members[i] ∘ members[j]`.
    pub fn as_group(&self) -> GroupTable {
        GroupTable::from_fn(self.order(), |i, j| {
            self.index_of(&self.members[i].compose(&self.members[j]))
                .expect("closed")
        })
        .expect("automorphism group is a group")
    }
}

pub fn compute_aut(g: &GroupTable) -> Result<AutGroup> {
    compute_aut_capped(g, DEFAULT_AUT_CAP)
}

/// Full automorphism group by backtracking over images of a greedy
/// generating set, restricted to elements of equal order.
pub fn compute_aut_capped(g: &GroupTable, cap: usize) -> Result<AutGroup> {
    if g.order() > cap {
        return Err(Error::SizeCap {
            what: "group for automorphism computation",
            size: g.order(),
            cap,
        });
    }
    let mut members = Vec::new();
    for_each_isomorphism::<()>(
        g,
        g,
        |_, _| true,
        |image| {
            members.push(Automorphism::from_image(g, image.to_vec()));
            ControlFlow::Continue(())
        },
    );
    Ok(AutGroup::from_members(g, members))
}

/// `{x ↦ g x g⁻¹ : g ∈ G}`, deduplicated.
pub fn compute_inn(g: &GroupTable) -> AutGroup {
    let members = g.elements().map(|x| Automorphism::inner(g, x)).collect();
    AutGroup::from_members(g, members)
}
