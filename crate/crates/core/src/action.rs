//! The action of an automorphism group on its parent: orbits, stabilizers,
//! fixed points, autocentres and autocommutators.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::aut::{compute_inn, AutGroup, Automorphism};
use crate::error::{Error, Result};
use crate::group::{same_parent, Elem, GroupTable};
use crate::subgroup::{subgroup_closure, SubgroupSet};

/// An orbit of the action, identified by its smallest member.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ActionOrbit {
    members: Vec<Elem>,
}

impl ActionOrbit {
    pub fn representative(&self) -> Elem {
        self.members[0]
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.members.binary_search(&x).is_ok()
    }
}

/// `[x, α] = x⁻¹ α(x)`.
pub fn autocommutator(g: &GroupTable, x: Elem, alpha: &Automorphism) -> Result<Elem> {
    same_parent(g, alpha.parent())?;
    g.check(x)?;
    Ok(g.left_div(x, alpha.apply(x)))
}

pub fn orbit(a: &AutGroup, x: Elem) -> Result<ActionOrbit> {
    a.parent().check(x)?;
    let set: BTreeSet<Elem> = a.members().iter().map(|m| m.apply(x)).collect();
    Ok(ActionOrbit {
        members: set.into_iter().collect(),
    })
}

/// The distinct orbits `{orb(x) : x ∈ H}` ordered by representative.
/// Orbits live in `G` and may leave `H`.
pub fn orbits_on_subgroup(a: &AutGroup, h: &SubgroupSet) -> Result<Vec<ActionOrbit>> {
    same_parent(a.parent(), h.parent())?;
    let mut covered = vec![false; a.parent().order()];
    let mut out = Vec::new();
    for &x in h.members() {
        if covered[x] {
            continue;
        }
        let o = orbit(a, x)?;
        for &y in o.members() {
            covered[y] = true;
        }
        out.push(o);
    }
    out.sort();
    Ok(out)
}

/// Orbits of `a` on the whole parent.
pub fn orbit_partition(a: &AutGroup) -> Vec<ActionOrbit> {
    orbits_on_subgroup(a, &SubgroupSet::whole(a.parent())).expect("same parent")
}

/// `C_A(x) = {α ∈ A : α(x) = x}`.
pub fn stabilizer(a: &AutGroup, x: Elem) -> Result<AutGroup> {
    a.parent().check(x)?;
    Ok(a.filter(|m| m.apply(x) == x))
}

/// `C_H(α) = {x ∈ H : α(x) = x}`. Fails with [`Error::Invariant`] if the
/// fixed points do not form a subgroup.
pub fn fixed_subgroup(h: &SubgroupSet, alpha: &Automorphism) -> Result<SubgroupSet> {
    same_parent(h.parent(), alpha.parent())?;
    let fixed = h.members().iter().copied().filter(|&x| alpha.apply(x) == x);
    SubgroupSet::new(h.parent(), fixed)
        .map_err(|_| Error::Invariant("fixed points of an automorphism are not a subgroup"))
}

/// `L(H, A)`: the elements of `H` fixed by every member of `A`.
pub fn autocentre(h: &SubgroupSet, a: &AutGroup) -> Result<SubgroupSet> {
    same_parent(h.parent(), a.parent())?;
    let fixed = h
        .members()
        .iter()
        .copied()
        .filter(|&x| a.members().iter().all(|m| m.apply(x) == x));
    SubgroupSet::new(h.parent(), fixed).map_err(|_| Error::Invariant("autocentre is not a subgroup"))
}

/// `S(H, A) = {[x, α] : x ∈ H, α ∈ A}`, sorted.
pub fn autocommutator_set(h: &SubgroupSet, a: &AutGroup) -> Result<Vec<Elem>> {
    same_parent(h.parent(), a.parent())?;
    let g = h.parent();
    let set: BTreeSet<Elem> = h
        .members()
        .iter()
        .flat_map(|&x| a.members().iter().map(move |m| g.left_div(x, m.apply(x))))
        .collect();
    Ok(set.into_iter().collect())
}

/// `[H, A] = ⟨S(H, A)⟩`.
pub fn autocommutator_subgroup(h: &SubgroupSet, a: &AutGroup) -> Result<SubgroupSet> {
    subgroup_closure(h.parent(), &autocommutator_set(h, a)?)
}

/// `X_H = {x ∈ H : C_A(x) = {I}}`, except that it is empty when `A` itself
/// is trivial, which keeps it disjoint from `L(H, A)`.
pub fn trivial_stabilizer_set(h: &SubgroupSet, a: &AutGroup) -> Result<Vec<Elem>> {
    if a.is_trivial() {
        same_parent(h.parent(), a.parent())?;
        return Ok(Vec::new());
    }
    trivial_stabilizer_set_literal(h, a)
}

/// `X_H` read literally, with no special case for trivial `A`.
pub fn trivial_stabilizer_set_literal(h: &SubgroupSet, a: &AutGroup) -> Result<Vec<Elem>> {
    same_parent(h.parent(), a.parent())?;
    Ok(h.members()
        .iter()
        .copied()
        .filter(|&x| a.members().iter().filter(|m| m.apply(x) == x).count() == 1)
        .collect())
}

/// `C_A(H)`: automorphisms fixing `H` pointwise.
pub fn pointwise_stabilizer(h: &SubgroupSet, a: &AutGroup) -> Result<AutGroup> {
    same_parent(h.parent(), a.parent())?;
    Ok(a.filter(|m| h.members().iter().all(|&x| m.apply(x) == x)))
}

/// `cl_G(x)`, the orbit of `x` under `Inn(G)`.
pub fn conjugacy_class(g: &GroupTable, x: Elem) -> Result<ActionOrbit> {
    g.check(x)?;
    let set: BTreeSet<Elem> = g.elements().map(|y| g.conjugate(y, x)).collect();
    Ok(ActionOrbit {
        members: set.into_iter().collect(),
    })
}

pub fn conjugacy_classes(g: &GroupTable) -> Vec<ActionOrbit> {
    orbit_partition(&compute_inn(g))
}

/// `x·S` for a set `S` of parent elements, sorted.
pub fn translate(g: &GroupTable, x: Elem, set: &[Elem]) -> Vec<Elem> {
    let mut v: Vec<Elem> = set.iter().map(|&s| g.mul(x, s)).collect();
    v.sort_unstable();
    v
}
