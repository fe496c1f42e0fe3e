//! Subgroups, closures, normality and quotients.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::group::{same_parent, Elem, GroupTable, IDENTITY};
use crate::hom::GroupHom;

/// Default bound on `|G|` for exhaustive subgroup enumeration.
pub const DEFAULT_SUBGROUP_CAP: usize = 24;

/// A subgroup of a parent table, stored as its sorted member list.
#[derive(Clone, PartialEq, Eq)]
pub struct SubgroupSet {
    parent: GroupTable,
    members: Vec<Elem>,
}

impl SubgroupSet {
    /// Checks that `members` is a subgroup of `parent`.
    pub fn new(parent: &GroupTable, members: impl IntoIterator<Item = Elem>) -> Result<Self> {
        let mut members: Vec<Elem> = members.into_iter().collect();
        for &m in &members {
            parent.check(m)?;
        }
        members.sort_unstable();
        members.dedup();
        let mut mask = vec![false; parent.order()];
        for &m in &members {
            mask[m] = true;
        }
        let closed = mask[IDENTITY]
            && members
                .iter()
                .all(|&a| mask[parent.inv(a)] && members.iter().all(|&b| mask[parent.mul(a, b)]));
        if !closed {
            return Err(Error::NotSubgroup);
        }
        Ok(SubgroupSet {
            parent: parent.clone(),
            members,
        })
    }

    /// `members` must already be sorted, deduplicated and closed.
    pub(crate) fn from_sorted(parent: &GroupTable, members: Vec<Elem>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        SubgroupSet {
            parent: parent.clone(),
            members,
        }
    }

    pub fn trivial(parent: &GroupTable) -> Self {
        Self::from_sorted(parent, vec![IDENTITY])
    }

    pub fn whole(parent: &GroupTable) -> Self {
        Self::from_sorted(parent, parent.elements().collect())
    }

    pub fn parent(&self) -> &GroupTable {
        &self.parent
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    /// Position of `x` in the sorted member list.
    pub fn position(&self, x: Elem) -> Option<usize> {
        self.members.binary_search(&x).ok()
    }

    pub fn is_whole(&self) -> bool {
        self.members.len() == self.parent.order()
    }

    pub fn is_subset_of(&self, other: &SubgroupSet) -> bool {
        self.parent == other.parent && self.members.iter().all(|&x| other.contains(x))
    }

    /// `|K : H|` for `self = H ⊆ K`.
    pub fn index_in(&self, other: &SubgroupSet) -> Result<usize> {
        if !self.is_subset_of(other) {
            return Err(Error::NotContained);
        }
        Ok(other.order() / self.order())
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.parent;
        self.members
            .iter()
            .all(|&a| self.members.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    }

    /// The subgroup as a group in its own right; element `i` of the result is
    /// `self.members()[i]`.
    pub fn as_group(&self) -> GroupTable {
        let g = &self.parent;
        GroupTable::from_fn(self.order(), |i, j| {
            self.position(g.mul(self.members[i], self.members[j])).expect("closed")
        })
        .expect("subgroup of a group is a group")
    }

    /// Left coset `x·self` as a sorted list.
    pub fn left_coset(&self, x: Elem) -> Vec<Elem> {
        let mut c: Vec<Elem> = self.members.iter().map(|&n| self.parent.mul(x, n)).collect();
        c.sort_unstable();
        c
    }
}

impl PartialOrd for SubgroupSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by `(size, member list)`, the enumeration order.
impl Ord for SubgroupSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.members
            .len()
            .cmp(&other.members.len())
            .then_with(|| self.members.cmp(&other.members))
    }
}

impl fmt::Debug for SubgroupSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SubgroupSet{:?}", self.members)
    }
}

impl fmt::Display for SubgroupSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str("}")
    }
}

/// Smallest subgroup containing `seed`.
pub fn subgroup_closure(g: &GroupTable, seed: &[Elem]) -> Result<SubgroupSet> {
    for &s in seed {
        g.check(s)?;
    }
    let mut seen = vec![false; g.order()];
    seen[IDENTITY] = true;
    let mut found = vec![IDENTITY];
    let mut i = 0;
    // Every element of a finite group is a positive word in the generators.
    while i < found.len() {
        let e = found[i];
        i += 1;
        for &s in seed {
            let next = g.mul(e, s);
            if !seen[next] {
                seen[next] = true;
                found.push(next);
            }
        }
    }
    found.sort_unstable();
    Ok(SubgroupSet::from_sorted(g, found))
}

pub fn enumerate_subgroups(g: &GroupTable) -> Result<Vec<SubgroupSet>> {
    enumerate_subgroups_capped(g, DEFAULT_SUBGROUP_CAP)
}

/// All subgroups of `g`, each once, sorted by `(order, members)`.
///
/// Works by cyclic extension: every subgroup is reached from a smaller one by
/// adjoining a single element.
pub fn enumerate_subgroups_capped(g: &GroupTable, cap: usize) -> Result<Vec<SubgroupSet>> {
    if g.order() > cap {
        return Err(Error::SizeCap {
            what: "group for subgroup enumeration",
            size: g.order(),
            cap,
        });
    }
    let trivial = SubgroupSet::trivial(g);
    let mut seen: BTreeSet<Vec<Elem>> = BTreeSet::new();
    seen.insert(trivial.members.clone());
    let mut frontier = vec![trivial];
    let mut all = Vec::new();
    while let Some(h) = frontier.pop() {
        let mut seed = h.members.clone();
        for x in g.elements() {
            if h.contains(x) {
                continue;
            }
            seed.push(x);
            let ext = subgroup_closure(g, &seed)?;
            seed.pop();
            if seen.insert(ext.members.clone()) {
                frontier.push(ext);
            }
        }
        all.push(h);
    }
    all.sort();
    Ok(all)
}

/// `{z : z·g = g·z for all g}`.
pub fn center(g: &GroupTable) -> SubgroupSet {
    let members = g
        .elements()
        .filter(|&z| g.elements().all(|x| g.mul(z, x) == g.mul(x, z)))
        .collect();
    SubgroupSet::from_sorted(g, members)
}

/// Whether `n` is normal in `within`. Requires `n ⊆ within`.
pub fn is_normal(g: &GroupTable, n: &SubgroupSet, within: &SubgroupSet) -> Result<bool> {
    same_parent(g, n.parent())?;
    same_parent(g, within.parent())?;
    if !n.is_subset_of(within) {
        return Err(Error::NotContained);
    }
    Ok(within
        .members()
        .iter()
        .all(|&k| n.members().iter().all(|&x| n.contains(g.conjugate(k, x)))))
}

/// `H/N` with its cosets and projection.
#[derive(Clone, Debug)]
pub struct Quotient {
    table: GroupTable,
    cosets: Vec<Vec<Elem>>,
    /// Coset index of each parent element, `None` outside `H`.
    coset_of: Vec<Option<usize>>,
    subgroup: SubgroupSet,
}

impl Quotient {
    pub fn table(&self) -> &GroupTable {
        &self.table
    }

    pub fn order(&self) -> usize {
        self.cosets.len()
    }

    /// Sorted members of coset `i`; `cosets()[i][0]` is its canonical representative.
    pub fn cosets(&self) -> &[Vec<Elem>] {
        &self.cosets
    }

    pub fn representative(&self, coset: usize) -> Elem {
        self.cosets[coset][0]
    }

    /// Coset containing the parent element `x`, if `x ∈ H`.
    pub fn project(&self, x: Elem) -> Option<usize> {
        self.coset_of.get(x).copied().flatten()
    }

    /// The projection `H → H/N` with `H` taken as [`SubgroupSet::as_group`].
    pub fn projection(&self) -> GroupHom {
        let source = self.subgroup.as_group();
        let image = self
            .subgroup
            .members()
            .iter()
            .map(|&x| self.project(x).expect("member of H"))
            .collect();
        GroupHom::new_unchecked(source, self.table.clone(), image)
    }
}

/// Builds `h/n`. Cosets are numbered by their smallest member, so the
/// identity coset is `0`.
pub fn quotient_group(g: &GroupTable, h: &SubgroupSet, n: &SubgroupSet) -> Result<Quotient> {
    if !is_normal(g, n, h)? {
        return Err(Error::NotNormal);
    }
    let mut coset_of = vec![None; g.order()];
    let mut cosets: Vec<Vec<Elem>> = Vec::new();
    for &x in h.members() {
        if coset_of[x].is_some() {
            continue;
        }
        let coset = n.left_coset(x);
        for &y in &coset {
            coset_of[y] = Some(cosets.len());
        }
        cosets.push(coset);
    }
    let table = GroupTable::from_fn(cosets.len(), |i, j| {
        coset_of[g.mul(cosets[i][0], cosets[j][0])].expect("H is closed")
    })?;
    Ok(Quotient {
        table,
        cosets,
        coset_of,
        subgroup: h.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::build;

    #[test]
    fn closure_examples() {
        let z4 = build("C(4)").unwrap();
        assert_eq!(subgroup_closure(&z4, &[2]).unwrap().members(), &[0, 2]);
        assert_eq!(subgroup_closure(&z4, &[]).unwrap().members(), &[0]);
        let s3 = build("S(3)").unwrap();
        // index 1 is the transposition (1 2) in lexicographic order, 3 a 3-cycle
        assert_eq!(s3.order_of(1), 2);
        assert_eq!(s3.order_of(3), 3);
        assert!(subgroup_closure(&s3, &[1, 3]).unwrap().is_whole());
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(enumerate_subgroups(&build("C(4)").unwrap()).unwrap().len(), 3);
        assert_eq!(enumerate_subgroups(&build("C(1)").unwrap()).unwrap().len(), 1);
        let s3 = enumerate_subgroups(&build("S(3)").unwrap()).unwrap();
        let sizes: Vec<usize> = s3.iter().map(SubgroupSet::order).collect();
        assert_eq!(sizes, [1, 2, 2, 2, 3, 6]);
        assert_eq!(enumerate_subgroups(&build("S(4)").unwrap()).unwrap().len(), 30);
    }

    #[test]
    fn cap_is_enforced() {
        let g = build("C(25)").unwrap();
        assert_eq!(
            enumerate_subgroups(&g),
            Err(Error::SizeCap {
                what: "group for subgroup enumeration",
                size: 25,
                cap: 24
            })
        );
        assert_eq!(enumerate_subgroups_capped(&g, 25).unwrap().len(), 3);
    }

    #[test]
    fn centers() {
        assert!(center(&build("C(6)").unwrap()).is_whole());
        assert_eq!(center(&build("S(3)").unwrap()).order(), 1);
        assert_eq!(center(&build("Q8").unwrap()).members(), &[0, 1]);
    }

    #[test]
    fn normality() {
        let s3 = build("S(3)").unwrap();
        let whole = SubgroupSet::whole(&s3);
        let t = subgroup_closure(&s3, &[1]).unwrap();
        let a3 = subgroup_closure(&s3, &[3]).unwrap();
        assert!(!is_normal(&s3, &t, &whole).unwrap());
        assert!(is_normal(&s3, &a3, &whole).unwrap());
        assert_eq!(is_normal(&s3, &whole, &a3), Err(Error::NotContained));
        let z6 = build("C(6)").unwrap();
        for h in enumerate_subgroups(&z6).unwrap() {
            assert!(is_normal(&z6, &h, &SubgroupSet::whole(&z6)).unwrap());
        }
    }

    #[test]
    fn quotients() {
        let z4 = build("C(4)").unwrap();
        let whole = SubgroupSet::whole(&z4);
        let two = subgroup_closure(&z4, &[2]).unwrap();
        let q = quotient_group(&z4, &whole, &two).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(q.cosets(), &[vec![0, 2], vec![1, 3]]);
        assert_eq!(quotient_group(&z4, &whole, &whole).unwrap().order(), 1);

        let s3 = build("S(3)").unwrap();
        let a3 = subgroup_closure(&s3, &[3]).unwrap();
        let q = quotient_group(&s3, &SubgroupSet::whole(&s3), &a3).unwrap();
        assert_eq!(q.order(), 2);
        let t = subgroup_closure(&s3, &[1]).unwrap();
        assert_eq!(
            quotient_group(&s3, &SubgroupSet::whole(&s3), &t).unwrap_err(),
            Error::NotNormal
        );
    }

    #[test]
    fn projection_kernel_is_n() {
        let d4 = build("D(4)").unwrap();
        let whole = SubgroupSet::whole(&d4);
        let z = center(&d4);
        let q = quotient_group(&d4, &whole, &z).unwrap();
        let proj = q.projection();
        proj.check_homomorphism().unwrap();
        assert_eq!(proj.kernel(), z.members());
        assert!(proj.is_surjective());
    }

    #[test]
    fn membership_validation() {
        let z4 = build("C(4)").unwrap();
        assert_eq!(SubgroupSet::new(&z4, [0, 1]), Err(Error::NotSubgroup));
        assert_eq!(SubgroupSet::new(&z4, [2, 0]).unwrap().members(), &[0, 2]);
        assert!(matches!(SubgroupSet::new(&z4, [9]), Err(Error::ForeignElement { .. })));
    }
}
