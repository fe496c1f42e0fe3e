//! Autoisoclinism between pairs `(H₁, G₁)` and `(H₂, G₂)`.
//!
//! A witness is a triple of isomorphisms
//!
//! ```text
//! ψ : H₁/L₁ → H₂/L₂,   γ : Aut(G₁) → Aut(G₂),   β : [H₁, Aut(G₁)] → [H₂, Aut(G₂)]
//! ```
//!
//! with `β([x, α]) = [ψ(x), γ(α)]` for every coset `x` and automorphism `α`.
//! The automorphism groups are compared as abstract groups through their
//! composition tables.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::action::{autocentre, autocommutator_subgroup};
use crate::aut::AutGroup;
use crate::bounds::{BoundCheck, Direction};
use crate::degree::pr_definition;
use crate::error::{Error, Result};
use crate::group::{same_parent, Elem, GroupTable, IDENTITY};
use crate::hom::{for_each_isomorphism, GroupHom};
use crate::rational::Rational;
use crate::subgroup::{quotient_group, Quotient, SubgroupSet};

pub const DEFAULT_AUT_WITNESS_CAP: usize = 48;
pub const DEFAULT_QUOTIENT_WITNESS_CAP: usize = 16;

/// A subgroup with everything the autoisoclinism diagram needs.
#[derive(Clone, Debug)]
pub struct PairedGroups {
    h: SubgroupSet,
    aut: AutGroup,
    l: SubgroupSet,
    k: SubgroupSet,
    quotient: Quotient,
    aut_table: GroupTable,
    k_table: GroupTable,
    /// `pairing[q * |A| + i]` is the position in `K` of `[rep(q), α_i]`.
    pairing: Vec<usize>,
    ill_defined: Option<(usize, usize)>,
}

impl PairedGroups {
    pub fn new(h: &SubgroupSet, aut: &AutGroup) -> Result<Self> {
        same_parent(h.parent(), aut.parent())?;
        let g = h.parent();
        let l = autocentre(h, aut)?;
        let k = autocommutator_subgroup(h, aut)?;
        let quotient = quotient_group(g, h, &l)?;
        let mut pairing = Vec::with_capacity(quotient.order() * aut.order());
        let mut ill_defined = None;
        for (qi, coset) in quotient.cosets().iter().enumerate() {
            for (ai, alpha) in aut.members().iter().enumerate() {
                let value = g.left_div(coset[0], alpha.apply(coset[0]));
                if ill_defined.is_none() && coset.iter().any(|&x| g.left_div(x, alpha.apply(x)) != value) {
                    ill_defined = Some((qi, ai));
                }
                let pos = k
                    .position(value)
                    .ok_or(Error::Invariant("autocommutator outside [H, Aut(G)]"))?;
                pairing.push(pos);
            }
        }
        Ok(PairedGroups {
            h: h.clone(),
            aut: aut.clone(),
            aut_table: aut.as_group(),
            k_table: k.as_group(),
            l,
            k,
            quotient,
            pairing,
            ill_defined,
        })
    }

    pub fn group(&self) -> &GroupTable {
        self.h.parent()
    }

    pub fn subgroup(&self) -> &SubgroupSet {
        &self.h
    }

    pub fn automorphisms(&self) -> &AutGroup {
        &self.aut
    }

    pub fn autocentre(&self) -> &SubgroupSet {
        &self.l
    }

    /// `[H, Aut(G)]`.
    pub fn commutator_subgroup(&self) -> &SubgroupSet {
        &self.k
    }

    /// `H / L(H, Aut(G))`.
    pub fn quotient(&self) -> &Quotient {
        &self.quotient
    }

    pub fn aut_table(&self) -> &GroupTable {
        &self.aut_table
    }

    pub fn commutator_table(&self) -> &GroupTable {
        &self.k_table
    }

    /// First `(coset, automorphism)` on which representatives disagree.
    pub fn ill_defined(&self) -> Option<(usize, usize)> {
        self.ill_defined
    }

    pub fn degree(&self) -> Result<Rational> {
        pr_definition(&self.h, &self.aut)
    }

    #[inline]
    fn pair(&self, coset: usize, alpha: usize) -> usize {
        self.pairing[coset * self.aut.order() + alpha]
    }

    /// `a(xL, α) = [x, α]` as a parent element, using the smallest
    /// representative. Fails if the value depends on the representative.
    pub fn autocommutator_pairing(&self, coset: usize, alpha: usize) -> Result<Elem> {
        if coset >= self.quotient.order() || alpha >= self.aut.order() {
            return Err(Error::ForeignElement {
                index: coset.max(alpha),
                order: self.pairing.len(),
            });
        }
        let g = self.group();
        let a = self.aut.get(alpha);
        let reps = &self.quotient.cosets()[coset];
        let value = g.left_div(reps[0], a.apply(reps[0]));
        if reps.iter().any(|&x| g.left_div(x, a.apply(x)) != value) {
            return Err(Error::PairingIllDefined {
                coset,
                automorphism: alpha,
            });
        }
        Ok(value)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoclinismWitness {
    /// On quotient cosets.
    pub psi: GroupHom,
    /// On automorphism indices.
    pub gamma: GroupHom,
    /// On positions within `[H, Aut(G)]`.
    pub beta: GroupHom,
}

impl IsoclinismWitness {
    pub fn inverse(&self) -> Option<IsoclinismWitness> {
        Some(IsoclinismWitness {
            psi: self.psi.inverse()?,
            gamma: self.gamma.inverse()?,
            beta: self.beta.inverse()?,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub aut_cap: usize,
    pub quotient_cap: usize,
    /// Reject on mismatched sizes and pairing invariants before searching.
    pub fast_reject: bool,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            aut_cap: DEFAULT_AUT_WITNESS_CAP,
            quotient_cap: DEFAULT_QUOTIENT_WITNESS_CAP,
            fast_reject: true,
        }
    }
}

/// Why two pairs cannot be autoisoclinic without searching, if a cheap
/// size comparison already decides it.
pub fn fast_rejection(p1: &PairedGroups, p2: &PairedGroups) -> Option<&'static str> {
    if p1.quotient.order() != p2.quotient.order() {
        Some("quotients by the autocentre differ in order")
    } else if p1.aut.order() != p2.aut.order() {
        Some("automorphism groups differ in order")
    } else if p1.k.order() != p2.k.order() {
        Some("autocommutator subgroups differ in order")
    } else {
        None
    }
}

fn check_caps(p1: &PairedGroups, p2: &PairedGroups, limits: &Limits) -> Result<()> {
    for (what, size, cap) in [
        ("automorphism group of the first pair", p1.aut.order(), limits.aut_cap),
        ("automorphism group of the second pair", p2.aut.order(), limits.aut_cap),
        ("quotient of the first pair", p1.quotient.order(), limits.quotient_cap),
        ("quotient of the second pair", p2.quotient.order(), limits.quotient_cap),
    ] {
        if size > cap {
            return Err(Error::SizeCap { what, size, cap });
        }
    }
    Ok(())
}

/// Sorted element orders (in `K`) of `a(q, α)` over all cosets `q`.
fn aut_profile(p: &PairedGroups, alpha: usize) -> Vec<usize> {
    let mut v: Vec<usize> = (0..p.quotient.order())
        .map(|q| p.k_table.order_of(p.pair(q, alpha)))
        .collect();
    v.sort_unstable();
    v
}

/// Searches for an autoisoclinism `p1 → p2`.
///
/// γ is enumerated over isomorphisms of the automorphism tables, ψ over
/// isomorphisms of the quotients; both searches backtrack over generator
/// images in increasing index order and prune each newly mapped element by
/// invariants the diagram forces: `β` preserves element orders, so
/// `ord a₁(q, α) = ord a₂(ψ(q), γ(α))`. The diagram then defines `β` on
/// `S(H₁, Aut(G₁))`, which generates `[H₁, Aut(G₁)]`; it is extended
/// multiplicatively and accepted if it is a well-defined bijection.
pub fn find_autoisoclinism(p1: &PairedGroups, p2: &PairedGroups, limits: &Limits) -> Result<Option<IsoclinismWitness>> {
    check_caps(p1, p2, limits)?;
    for p in [p1, p2] {
        if let Some((coset, automorphism)) = p.ill_defined {
            return Err(Error::PairingIllDefined { coset, automorphism });
        }
    }
    if limits.fast_reject && fast_rejection(p1, p2).is_some() {
        return Ok(None);
    }
    if p1.k.order() != p2.k.order() {
        return Ok(None);
    }

    let profiles1: Vec<Vec<usize>> = (0..p1.aut.order()).map(|i| aut_profile(p1, i)).collect();
    let profiles2: Vec<Vec<usize>> = (0..p2.aut.order()).map(|i| aut_profile(p2, i)).collect();
    let gamma_ok = |a: Elem, b: Elem| !limits.fast_reject || profiles1[a] == profiles2[b];

    let found = for_each_isomorphism(&p1.aut_table, &p2.aut_table, gamma_ok, |gamma| {
        let psi_ok = |q1: Elem, q2: Elem| {
            (0..p1.aut.order())
                .all(|a| p1.k_table.order_of(p1.pair(q1, a)) == p2.k_table.order_of(p2.pair(q2, gamma[a])))
        };
        let hit = for_each_isomorphism(
            p1.quotient.table(),
            p2.quotient.table(),
            psi_ok,
            |psi| match induced_beta(p1, p2, psi, gamma) {
                Some(beta) => ControlFlow::Break((psi.to_vec(), beta)),
                None => ControlFlow::Continue(()),
            },
        );
        match hit {
            Some((psi, beta)) => ControlFlow::Break((psi, gamma.to_vec(), beta)),
            None => ControlFlow::Continue(()),
        }
    });

    Ok(found.map(|(psi, gamma, beta)| IsoclinismWitness {
        psi: GroupHom::new_unchecked(p1.quotient.table().clone(), p2.quotient.table().clone(), psi),
        gamma: GroupHom::new_unchecked(p1.aut_table.clone(), p2.aut_table.clone(), gamma),
        beta: GroupHom::new_unchecked(p1.k_table.clone(), p2.k_table.clone(), beta),
    }))
}

/// The `β` forced by the diagram for given `ψ` and `γ`, if it exists.
fn induced_beta(p1: &PairedGroups, p2: &PairedGroups, psi: &[Elem], gamma: &[Elem]) -> Option<Vec<Elem>> {
    let n = p1.k.order();
    let mut beta = vec![usize::MAX; n];
    beta[IDENTITY] = IDENTITY;
    let mut generators = Vec::new();
    for (q, &q2) in psi.iter().enumerate() {
        for (a, &a2) in gamma.iter().enumerate() {
            let x = p1.pair(q, a);
            let y = p2.pair(q2, a2);
            if beta[x] == usize::MAX {
                beta[x] = y;
                generators.push(x);
            } else if beta[x] != y {
                return None;
            }
        }
    }
    // Extend multiplicatively from the autocommutators, which generate K₁.
    let (k1, k2) = (&p1.k_table, &p2.k_table);
    let mut assigned: Vec<bool> = beta.iter().map(|&b| b != usize::MAX).collect();
    let mut reached = vec![false; n];
    reached[IDENTITY] = true;
    let mut queue = vec![IDENTITY];
    while let Some(e) = queue.pop() {
        for &s in &generators {
            let x = k1.mul(e, s);
            let y = k2.mul(beta[e], beta[s]);
            if !assigned[x] {
                beta[x] = y;
                assigned[x] = true;
            } else if beta[x] != y {
                return None;
            }
            if !reached[x] {
                reached[x] = true;
                queue.push(x);
            }
        }
    }
    let mut hit = vec![false; k2.order()];
    for &y in &beta {
        if y == usize::MAX || core::mem::replace(&mut hit[y], true) {
            return None;
        }
    }
    Some(beta)
}

/// Which part of a claimed witness is wrong.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessDefect {
    /// The map has the wrong source or target.
    Shape {
        map: &'static str,
    },
    NotBijective {
        map: &'static str,
    },
    NotHomomorphism {
        map: &'static str,
        a: Elem,
        b: Elem,
    },
    /// `β(a₁(q, α)) ≠ a₂(ψ(q), γ(α))`.
    DiagramFails {
        coset: usize,
        automorphism: usize,
    },
}

impl core::fmt::Display for WitnessDefect {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            WitnessDefect::Shape { map } => write!(f, "{map} has the wrong source or target"),
            WitnessDefect::NotBijective { map } => write!(f, "{map} is not a bijection"),
            WitnessDefect::NotHomomorphism { map, a, b } => {
                write!(f, "{map} does not preserve the product of {a} and {b}")
            }
            WitnessDefect::DiagramFails { coset, automorphism } => write!(
                f,
                "diagram does not commute at coset {coset}, automorphism {automorphism}"
            ),
        }
    }
}

/// Re-checks a witness from scratch: shapes, bijectivity, the homomorphism
/// property of all three maps, and the commuting square over every
/// `(coset, automorphism)` pair, recomputing autocommutators from the
/// parent tables.
pub fn verify_witness(
    p1: &PairedGroups,
    p2: &PairedGroups,
    w: &IsoclinismWitness,
) -> core::result::Result<(), WitnessDefect> {
    let maps = [
        ("psi", &w.psi, p1.quotient.table(), p2.quotient.table()),
        ("gamma", &w.gamma, &p1.aut_table, &p2.aut_table),
        ("beta", &w.beta, &p1.k_table, &p2.k_table),
    ];
    for (map, f, src, dst) in maps {
        if f.source() != src || f.target() != dst {
            return Err(WitnessDefect::Shape { map });
        }
        if !f.is_bijective() {
            return Err(WitnessDefect::NotBijective { map });
        }
        if let Err((a, b)) = f.check_homomorphism() {
            return Err(WitnessDefect::NotHomomorphism { map, a, b });
        }
    }
    let (g1, g2) = (p1.group(), p2.group());
    for coset in 0..p1.quotient.order() {
        let x1 = p1.quotient.representative(coset);
        let x2 = p2.quotient.representative(w.psi.apply(coset));
        for automorphism in 0..p1.aut.order() {
            let alpha1 = p1.aut.get(automorphism);
            let alpha2 = p2.aut.get(w.gamma.apply(automorphism));
            let c1 = g1.left_div(x1, alpha1.apply(x1));
            let c2 = g2.left_div(x2, alpha2.apply(x2));
            let lhs = p1.k.position(c1).map(|i| p2.k.members()[w.beta.apply(i)]);
            if lhs != Some(c2) {
                return Err(WitnessDefect::DiagramFails { coset, automorphism });
            }
        }
    }
    Ok(())
}

/// Asserts `Pr(H₁, Aut(G₁)) = Pr(H₂, Aut(G₂))` for a verified witness.
pub fn check_equal_degree(p1: &PairedGroups, p2: &PairedGroups, w: &IsoclinismWitness) -> Result<BoundCheck> {
    verify_witness(p1, p2, w).map_err(|_| Error::Hypothesis("witness does not verify"))?;
    Ok(BoundCheck::new(
        "equal_degree",
        Direction::Equal,
        p1.degree()?,
        p2.degree()?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aut::compute_aut;
    use crate::catalog::build;

    fn pair(name: &str) -> PairedGroups {
        let g = build(name).unwrap();
        PairedGroups::new(&SubgroupSet::whole(&g), &compute_aut(&g).unwrap()).unwrap()
    }

    #[test]
    fn pairing_in_z4() {
        let p = pair("C(4)");
        assert_eq!(p.quotient().cosets(), &[vec![0, 2], vec![1, 3]]);
        assert_eq!(p.autocommutator_pairing(1, 1), Ok(2));
        for q in 0..2 {
            assert_eq!(p.autocommutator_pairing(q, 0), Ok(IDENTITY));
        }
        assert!(p.ill_defined().is_none());
    }

    #[test]
    fn reflexive_witnesses() {
        for name in ["C(1)", "C(4)", "S(3)", "Q8", "D(4)", "C(2)×C(2)"] {
            let p = pair(name);
            let w = find_autoisoclinism(&p, &p, &Limits::default()).unwrap().expect(name);
            verify_witness(&p, &p, &w).unwrap();
            assert!(check_equal_degree(&p, &p, &w).unwrap().holds);
        }
    }

    #[test]
    fn size_rejection() {
        let (a, b) = (pair("C(3)"), pair("C(8)"));
        assert!(fast_rejection(&a, &b).is_some());
        assert_eq!(find_autoisoclinism(&a, &b, &Limits::default()), Ok(None));
    }

    #[test]
    fn z3_and_z6_are_autoisoclinic() {
        let (a, b) = (pair("C(3)"), pair("C(6)"));
        let w = find_autoisoclinism(&a, &b, &Limits::default()).unwrap().unwrap();
        verify_witness(&a, &b, &w).unwrap();
        let c = check_equal_degree(&a, &b, &w).unwrap();
        assert!(c.holds);
        assert_eq!(c.value, Rational::ratio(2, 3));
        let back = w.inverse().unwrap();
        verify_witness(&b, &a, &back).unwrap();
    }

    #[test]
    fn corrupted_beta_is_caught() {
        let p = pair("C(3)");
        let w = find_autoisoclinism(&p, &p, &Limits::default()).unwrap().unwrap();
        // a bijection of Z_3 fixing 0 and 1 but sending 2 to 2 is the identity;
        // swap the images of 0 and 1 instead
        let mut image = w.beta.image().to_vec();
        image.swap(0, 1);
        let bad = IsoclinismWitness {
            beta: GroupHom::new_unchecked(p.commutator_table().clone(), p.commutator_table().clone(), image),
            ..w
        };
        assert!(matches!(
            verify_witness(&p, &p, &bad),
            Err(WitnessDefect::NotHomomorphism { map: "beta", .. })
        ));
    }

    #[test]
    fn caps_are_named() {
        let p = pair("S(4)");
        assert!(matches!(
            find_autoisoclinism(&p, &p, &Limits::default()),
            Err(Error::SizeCap {
                what: "quotient of the first pair",
                ..
            })
        ));
        let limits = Limits {
            quotient_cap: 24,
            ..Limits::default()
        };
        assert!(find_autoisoclinism(&p, &p, &limits).unwrap().is_some());
    }
}
