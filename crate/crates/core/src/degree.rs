//! Exact relative autocommutativity degree `Pr(H, A)` by several independent
//! counting routes, and the commuting probability `Pr(H, G)`.

use alloc::vec::Vec;

use crate::action::{
    autocentre, autocommutator_set, autocommutator_subgroup, conjugacy_class, fixed_subgroup, orbit,
    orbits_on_subgroup, stabilizer, trivial_stabilizer_set, trivial_stabilizer_set_literal, ActionOrbit,
};
use crate::aut::{AutGroup, Automorphism};
use crate::error::Result;
use crate::group::{same_parent, Elem, GroupTable};
use crate::primes::smallest_prime_factor;
use crate::rational::Rational;
use crate::subgroup::SubgroupSet;

/// `|{(x, α) ∈ H × A : α(x) = x}|`.
pub fn fixed_pair_count(h: &SubgroupSet, a: &AutGroup) -> Result<usize> {
    same_parent(h.parent(), a.parent())?;
    Ok(h.members()
        .iter()
        .map(|&x| a.members().iter().filter(|m| m.apply(x) == x).count())
        .sum())
}

/// Probability that a uniformly random `(x, α) ∈ H × A` has `α(x) = x`.
pub fn pr_definition(h: &SubgroupSet, a: &AutGroup) -> Result<Rational> {
    let count = fixed_pair_count(h, a)?;
    Ok(Rational::ratio(count, h.order() * a.order()))
}

/// `(Σ_x |C_A(x)|, Σ_α |C_H(α)|)`, each divided by `|H||A|`.
pub fn pr_via_sums(h: &SubgroupSet, a: &AutGroup) -> Result<(Rational, Rational)> {
    same_parent(h.parent(), a.parent())?;
    let denom = h.order() * a.order();
    let mut by_element = 0;
    for &x in h.members() {
        by_element += stabilizer(a, x)?.order();
    }
    let mut by_automorphism = 0;
    for alpha in a.members() {
        by_automorphism += fixed_subgroup(h, alpha)?.order();
    }
    Ok((
        Rational::ratio(by_element, denom),
        Rational::ratio(by_automorphism, denom),
    ))
}

/// Both forms of the orbit-counting formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitForms {
    /// `(1/|H|) Σ_{x∈H} 1/|orb(x)|`.
    pub summation: Rational,
    /// `|orb(H)| / |H|`.
    pub orbit_count: Rational,
    /// Whether every orbit of a member of `H` stays inside `H`; when true
    /// the two forms coincide.
    pub invariant: bool,
}

pub fn pr_via_orbits(h: &SubgroupSet, a: &AutGroup) -> Result<OrbitForms> {
    let orbits = orbits_on_subgroup(a, h)?;
    let mut summation = Rational::zero();
    for &x in h.members() {
        summation = summation + Rational::ratio(1, orbit(a, x)?.len());
    }
    let n = Rational::ratio(1, h.order());
    let invariant = orbits.iter().all(|o| o.members().iter().all(|&y| h.contains(y)));
    Ok(OrbitForms {
        summation: &summation * &n,
        orbit_count: Rational::ratio(orbits.len(), h.order()),
        invariant,
    })
}

/// `Pr(H, G) = |{(x, y) ∈ H × G : xy = yx}| / (|H||G|)`.
pub fn pr_commuting(h: &SubgroupSet, g: &GroupTable) -> Result<Rational> {
    same_parent(h.parent(), g)?;
    let count: usize = h
        .members()
        .iter()
        .map(|&x| g.elements().filter(|&y| g.mul(x, y) == g.mul(y, x)).count())
        .sum();
    Ok(Rational::ratio(count, h.order() * g.order()))
}

/// `(1/|H|) Σ_{x∈H} 1/|cl_G(x)|`.
pub fn pr_commuting_by_classes(h: &SubgroupSet) -> Result<Rational> {
    let mut sum = Rational::zero();
    for &x in h.members() {
        sum = sum + Rational::ratio(1, conjugacy_class(h.parent(), x)?.len());
    }
    Ok(&sum * &Rational::ratio(1, h.order()))
}

/// Everything computed about one `(H, A)` instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeReport {
    pub pr_definition: Rational,
    pub pr_stab_sum: Rational,
    pub pr_fixed_sum: Rational,
    pub pr_orbit: Rational,
    pub pr_orbit_count: Rational,
    /// `|H||A|·Pr`, an integer.
    pub fixed_pairs: usize,
    pub h_invariant: bool,
    pub order_h: usize,
    pub order_aut: usize,
    pub order_l: usize,
    pub order_s: usize,
    pub order_commutator: usize,
    pub order_x: usize,
    pub order_x_literal: usize,
    pub orbits: Vec<ActionOrbit>,
    pub h_equals_l: bool,
}

impl DegreeReport {
    /// The definition, both sums and the orbit summation coincide.
    pub fn formulas_agree(&self) -> bool {
        self.pr_definition == self.pr_stab_sum
            && self.pr_definition == self.pr_fixed_sum
            && self.pr_definition == self.pr_orbit
    }

    pub fn orbit_forms_agree(&self) -> bool {
        self.pr_orbit == self.pr_orbit_count
    }
}

pub fn degree_report(h: &SubgroupSet, a: &AutGroup) -> Result<DegreeReport> {
    let (pr_stab_sum, pr_fixed_sum) = pr_via_sums(h, a)?;
    let forms = pr_via_orbits(h, a)?;
    let l = autocentre(h, a)?;
    Ok(DegreeReport {
        pr_definition: pr_definition(h, a)?,
        pr_stab_sum,
        pr_fixed_sum,
        pr_orbit: forms.summation,
        pr_orbit_count: forms.orbit_count,
        fixed_pairs: fixed_pair_count(h, a)?,
        h_invariant: forms.invariant,
        order_h: h.order(),
        order_aut: a.order(),
        order_l: l.order(),
        order_s: autocommutator_set(h, a)?.len(),
        order_commutator: autocommutator_subgroup(h, a)?.order(),
        order_x: trivial_stabilizer_set(h, a)?.len(),
        order_x_literal: trivial_stabilizer_set_literal(h, a)?.len(),
        orbits: orbits_on_subgroup(a, h)?,
        h_equals_l: l.order() == h.order(),
    })
}

/// A subgroup together with an automorphism group and the derived
/// structures that the bound checks share.
#[derive(Clone, Debug)]
pub struct Instance {
    h: SubgroupSet,
    a: AutGroup,
    l: SubgroupSet,
    s: Vec<Elem>,
    k: SubgroupSet,
    x: Vec<Elem>,
    orbits: Vec<ActionOrbit>,
    pr: Rational,
}

impl Instance {
    pub fn new(h: &SubgroupSet, a: &AutGroup) -> Result<Self> {
        let mut orbits = Vec::with_capacity(h.order());
        for &x in h.members() {
            orbits.push(orbit(a, x)?);
        }
        Ok(Instance {
            h: h.clone(),
            a: a.clone(),
            l: autocentre(h, a)?,
            s: autocommutator_set(h, a)?,
            k: autocommutator_subgroup(h, a)?,
            x: trivial_stabilizer_set(h, a)?,
            orbits,
            pr: pr_definition(h, a)?,
        })
    }

    pub fn group(&self) -> &GroupTable {
        self.h.parent()
    }

    pub fn subgroup(&self) -> &SubgroupSet {
        &self.h
    }

    pub fn automorphisms(&self) -> &AutGroup {
        &self.a
    }

    /// `L(H, A)`.
    pub fn autocentre(&self) -> &SubgroupSet {
        &self.l
    }

    /// `S(H, A)`.
    pub fn autocommutators(&self) -> &[Elem] {
        &self.s
    }

    /// `[H, A]`.
    pub fn commutator_subgroup(&self) -> &SubgroupSet {
        &self.k
    }

    /// `X_H`.
    pub fn trivial_stabilizers(&self) -> &[Elem] {
        &self.x
    }

    /// Orbit of `h.members()[i]`.
    pub fn orbit_of_member(&self, i: usize) -> &ActionOrbit {
        &self.orbits[i]
    }

    pub fn pr(&self) -> &Rational {
        &self.pr
    }

    /// Smallest prime dividing `|A|`.
    pub fn p(&self) -> Option<usize> {
        smallest_prime_factor(self.a.order())
    }

    /// Smallest prime dividing `|H|`.
    pub fn q(&self) -> Option<usize> {
        smallest_prime_factor(self.h.order())
    }

    pub fn h_equals_l(&self) -> bool {
        self.l.order() == self.h.order()
    }

    /// Whether every automorphism in `A` maps `H` into itself.
    pub fn is_invariant(&self) -> bool {
        self.orbits
            .iter()
            .all(|o| o.members().iter().all(|&y| self.h.contains(y)))
    }

    /// `|H : L(H, A)|`.
    pub fn index_of_l(&self) -> usize {
        self.h.order() / self.l.order()
    }

    /// Members of `H` outside `L(H, A)` paired with their orbits.
    pub fn moved(&self) -> impl Iterator<Item = (Elem, &ActionOrbit)> + '_ {
        self.h
            .members()
            .iter()
            .zip(&self.orbits)
            .filter(|(&x, _)| !self.l.contains(x))
            .map(|(&x, o)| (x, o))
    }

    /// `{x⁻¹ α(x) : α ∈ A}`, sorted.
    pub fn autocommutators_of(&self, x: Elem) -> Vec<Elem> {
        let g = self.group();
        let mut v: Vec<Elem> = self
            .a
            .members()
            .iter()
            .map(|m: &Automorphism| g.left_div(x, m.apply(x)))
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aut::{compute_aut, compute_inn};
    use crate::catalog::build;
    use crate::subgroup::subgroup_closure;

    fn whole(name: &str) -> (SubgroupSet, AutGroup) {
        let g = build(name).unwrap();
        (SubgroupSet::whole(&g), compute_aut(&g).unwrap())
    }

    #[test]
    fn definition_examples() {
        let (h, a) = whole("C(3)");
        assert_eq!(pr_definition(&h, &a).unwrap(), Rational::ratio(2, 3));
        assert_eq!(
            pr_definition(&h, &AutGroup::trivial(h.parent())).unwrap(),
            Rational::one()
        );
        let (h, a) = whole("S(3)");
        assert_eq!(pr_definition(&h, &a).unwrap(), Rational::ratio(1, 2));
    }

    #[test]
    fn sums_in_z4() {
        let (h, a) = whole("C(4)");
        let (s1, s2) = pr_via_sums(&h, &a).unwrap();
        assert_eq!(s1, Rational::ratio(3, 4));
        assert_eq!(s2, Rational::ratio(3, 4));
        assert_eq!(fixed_pair_count(&h, &a).unwrap(), 6);
    }

    #[test]
    fn orbit_forms() {
        let (h, a) = whole("C(4)");
        let f = pr_via_orbits(&h, &a).unwrap();
        assert_eq!(f.summation, Rational::ratio(3, 4));
        assert_eq!(f.orbit_count, Rational::ratio(3, 4));
        let s3 = build("S(3)").unwrap();
        let a3 = subgroup_closure(&s3, &[3]).unwrap();
        let f = pr_via_orbits(&a3, &compute_aut(&s3).unwrap()).unwrap();
        assert_eq!(f.summation, Rational::ratio(2, 3));
        assert!(f.invariant);
    }

    #[test]
    fn orbit_forms_disagree_off_invariant_subgroups() {
        // ⟨(1 2)⟩ in S(3): its orbit leaves H.
        let s3 = build("S(3)").unwrap();
        let t = subgroup_closure(&s3, &[1]).unwrap();
        let f = pr_via_orbits(&t, &compute_aut(&s3).unwrap()).unwrap();
        assert!(!f.invariant);
        assert_eq!(f.summation, Rational::ratio(2, 3));
        assert_eq!(f.orbit_count, Rational::one());
    }

    #[test]
    fn commuting_probability() {
        let s3 = build("S(3)").unwrap();
        let whole = SubgroupSet::whole(&s3);
        assert_eq!(pr_commuting(&whole, &s3).unwrap(), Rational::ratio(1, 2));
        let t = subgroup_closure(&s3, &[1]).unwrap();
        assert_eq!(pr_commuting(&t, &s3).unwrap(), Rational::ratio(2, 3));
        assert_eq!(pr_commuting_by_classes(&t).unwrap(), Rational::ratio(2, 3));
        assert_eq!(pr_definition(&t, &compute_inn(&s3)).unwrap(), Rational::ratio(2, 3));
        let c5 = build("C(5)").unwrap();
        assert_eq!(pr_commuting(&SubgroupSet::whole(&c5), &c5).unwrap(), Rational::one());
    }

    #[test]
    fn report_fields() {
        let (h, a) = whole("C(4)");
        let r = degree_report(&h, &a).unwrap();
        assert!(r.formulas_agree());
        assert_eq!(
            (r.order_l, r.order_s, r.order_commutator, r.order_x, r.orbits.len()),
            (2, 2, 2, 2, 3)
        );
        assert!(!r.h_equals_l);
        let (h, a) = whole("Q8");
        let r = degree_report(&h, &a).unwrap();
        assert_eq!(r.pr_definition, Rational::ratio(3, 8));
        let (h, a) = whole("C(2)");
        let r = degree_report(&h, &a).unwrap();
        assert!(r.h_equals_l && r.pr_definition.is_one());
        assert_eq!((r.order_x, r.order_x_literal), (0, 2));
    }
}
