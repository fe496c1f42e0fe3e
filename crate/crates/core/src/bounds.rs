//! Upper and lower bounds on `Pr(H, A)`, the equality characterizations and
//! the five-condition equivalence, each evaluated on a concrete instance.
//!
//! Every check reports the computed value next to the bound. A check whose
//! hypothesis is not met is *inapplicable*, which is distinct from passing.
//! Checks whose standing hypothesis (`|A| > 1`, `H ≠ L(H, A)`) fails return
//! [`Error::Hypothesis`] instead.

use alloc::vec::Vec;

use crate::action::translate;
use crate::aut::AutGroup;
use crate::catalog::cyclic;
use crate::degree::{pr_commuting, pr_definition, Instance};
use crate::error::{Error, Result};
use crate::group::direct_product;
use crate::hom::are_isomorphic;
use crate::rational::Rational;
use crate::subgroup::{is_normal, quotient_group, SubgroupSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `value ≤ bound`.
    Upper,
    /// `value ≥ bound`.
    Lower,
    /// `value = bound`.
    Equal,
}

impl Direction {
    pub fn as_str(self) -> &'static str {
        match self {
            Direction::Upper => "upper",
            Direction::Lower => "lower",
            Direction::Equal => "equal",
        }
    }
}

/// Whether a failing check refutes a stated result or only a side remark.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckKind {
    Theorem,
    Remark,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Inapplicable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inapplicable => "inapplicable",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundCheck {
    pub name: &'static str,
    pub kind: CheckKind,
    pub direction: Direction,
    /// Usually `Pr(H, A)`.
    pub value: Rational,
    pub bound: Rational,
    pub holds: bool,
    pub is_equality: bool,
    pub hypothesis_met: bool,
    /// Smallest prime dividing `|A|`.
    pub p: Option<usize>,
    /// Smallest prime dividing `|H|`.
    pub q: Option<usize>,
    /// For checks with an "equality iff" clause: the independently evaluated
    /// condition, which must agree with `is_equality`.
    pub equality_condition: Option<bool>,
}

impl BoundCheck {
    pub fn new(name: &'static str, direction: Direction, value: Rational, bound: Rational) -> Self {
        let holds = match direction {
            Direction::Upper => value <= bound,
            Direction::Lower => value >= bound,
            Direction::Equal => value == bound,
        };
        let is_equality = value == bound;
        BoundCheck {
            name,
            kind: CheckKind::Theorem,
            direction,
            value,
            bound,
            holds,
            is_equality,
            hypothesis_met: true,
            p: None,
            q: None,
            equality_condition: None,
        }
    }

    fn primes(mut self, inst: &Instance) -> Self {
        self.p = inst.p();
        self.q = inst.q();
        self
    }

    fn hypothesis(mut self, met: bool) -> Self {
        self.hypothesis_met = met;
        self
    }

    fn condition(mut self, c: bool) -> Self {
        self.equality_condition = Some(c);
        self
    }

    fn remark(mut self) -> Self {
        self.kind = CheckKind::Remark;
        self
    }

    pub fn verdict(&self) -> Verdict {
        if !self.hypothesis_met {
            Verdict::Inapplicable
        } else if self.holds && self.equality_condition.is_none_or(|c| c == self.is_equality) {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

fn r(n: usize, d: usize) -> Rational {
    Rational::ratio(n, d)
}

/// Requires `|A| > 1` and `H ≠ L(H, A)`; returns `(p, q)`.
fn standing(inst: &Instance) -> Result<(usize, usize)> {
    let p = inst.p().ok_or(Error::Hypothesis("the automorphism group is trivial"))?;
    if inst.h_equals_l() {
        return Err(Error::Hypothesis("H equals its autocentre L(H, Aut(G))"));
    }
    // H ≠ L forces |H| > 1
    Ok((p, inst.q().expect("nontrivial H")))
}

/// `Pr(H, A) ≤ |K : H|·Pr(K, A)` for `H ⊆ K`, with equality iff `H = K`.
pub fn check_monotonicity(h: &SubgroupSet, k: &SubgroupSet, a: &AutGroup) -> Result<BoundCheck> {
    let index = h.index_in(k)?;
    let value = pr_definition(h, a)?;
    let bound = &Rational::ratio(index, 1) * &pr_definition(k, a)?;
    Ok(BoundCheck::new("monotonicity", Direction::Upper, value, bound).condition(h == k))
}

/// `Pr ≤ ((p−1)|L| + |H|)/(p|H|) − |X_H|(|A| − p)/(p|H||A|)`.
pub fn bound_upper_main(inst: &Instance) -> Result<BoundCheck> {
    let (p, _) = standing(inst)?;
    let h = inst.subgroup().order();
    let l = inst.autocentre().order();
    let x = inst.trivial_stabilizers().len();
    let a = inst.automorphisms().order();
    let bound = &r((p - 1) * l + h, p * h) - &r(x * (a - p), p * h * a);
    Ok(BoundCheck::new("upper_main", Direction::Upper, inst.pr().clone(), bound).primes(inst))
}

/// `Pr ≤ (p+q−1)/pq`, and when `q ≥ p` also `≤ (2p−1)/p² ≤ 3/4`.
pub fn bound_upper_pq(inst: &Instance) -> Result<Vec<BoundCheck>> {
    let (p, q) = standing(inst)?;
    let pr = inst.pr();
    let q_ge_p = q >= p;
    Ok(alloc::vec![
        BoundCheck::new("upper_pq", Direction::Upper, pr.clone(), r(p + q - 1, p * q)).primes(inst),
        BoundCheck::new("upper_pq_particular", Direction::Upper, pr.clone(), r(2 * p - 1, p * p))
            .primes(inst)
            .hypothesis(q_ge_p),
        BoundCheck::new("upper_three_quarters", Direction::Upper, pr.clone(), r(3, 4))
            .primes(inst)
            .hypothesis(q_ge_p),
    ])
}

/// For non-abelian `H`: `Pr ≤ (q²+p−1)/pq²`, and when `q ≥ p` also
/// `≤ (p²+p−1)/p³ ≤ 5/8`.
pub fn bound_upper_nonabelian(inst: &Instance) -> Result<Vec<BoundCheck>> {
    let (p, q) = standing(inst)?;
    if inst.subgroup().is_abelian() {
        return Err(Error::Hypothesis("H is abelian"));
    }
    let pr = inst.pr();
    let q_ge_p = q >= p;
    Ok(alloc::vec![
        BoundCheck::new(
            "upper_nonabelian",
            Direction::Upper,
            pr.clone(),
            r(q * q + p - 1, p * q * q)
        )
        .primes(inst),
        BoundCheck::new(
            "upper_nonabelian_particular",
            Direction::Upper,
            pr.clone(),
            r(p * p + p - 1, p * p * p)
        )
        .primes(inst)
        .hypothesis(q_ge_p),
        BoundCheck::new("upper_five_eighths", Direction::Upper, pr.clone(), r(5, 8))
            .primes(inst)
            .hypothesis(q_ge_p),
    ])
}

/// Outcome of an equality characterization on an instance that meets its
/// hypothesis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EqualityReport {
    pub p: usize,
    pub q: usize,
    pub pr: Rational,
    /// `pq` divides `|H||A|`.
    pub divides: bool,
    /// `|H : L(H, A)|`.
    pub quotient_order: usize,
    /// `H/L` is isomorphic to the expected group (`Z_q` or `Z_q × Z_q`).
    pub quotient_matches: bool,
    /// `p = q = 2`, the `5/8` special case of the non-abelian theorem.
    pub even_case: bool,
}

impl EqualityReport {
    pub fn holds(&self) -> bool {
        self.divides && self.quotient_matches
    }
}

fn equality_report(inst: &Instance, p: usize, q: usize, expected: &crate::group::GroupTable) -> Result<EqualityReport> {
    let g = inst.group();
    let quotient = quotient_group(g, inst.subgroup(), inst.autocentre())?;
    Ok(EqualityReport {
        p,
        q,
        pr: inst.pr().clone(),
        divides: (inst.subgroup().order() * inst.automorphisms().order()).is_multiple_of(p * q),
        quotient_order: quotient.order(),
        quotient_matches: are_isomorphic(quotient.table(), expected),
        even_case: p == 2 && q == 2,
    })
}

/// If `Pr = (p+q−1)/pq` for the smallest primes `p | |A|`, `q | |H|`, checks
/// `pq | |H||A|` and `H/L(H, A) ≅ Z_q`. `None` when the hypothesis fails.
pub fn classify_equality_pq(inst: &Instance) -> Result<Option<EqualityReport>> {
    let (Some(p), Some(q)) = (inst.p(), inst.q()) else {
        return Ok(None);
    };
    if *inst.pr() != r(p + q - 1, p * q) {
        return Ok(None);
    }
    equality_report(inst, p, q, &cyclic(q)).map(Some)
}

/// If `H` is non-abelian and `Pr = (q²+p−1)/pq²`, checks `pq | |H||A|` and
/// `H/L(H, A) ≅ Z_q × Z_q`. `None` when the hypothesis fails.
pub fn classify_equality_pq2(inst: &Instance) -> Result<Option<EqualityReport>> {
    let (Some(p), Some(q)) = (inst.p(), inst.q()) else {
        return Ok(None);
    };
    if inst.subgroup().is_abelian() || *inst.pr() != r(q * q + p - 1, p * q * q) {
        return Ok(None);
    }
    let expected = direct_product(&cyclic(q), &cyclic(q));
    equality_report(inst, p, q, &expected).map(Some)
}

/// Partial converse: when every `x ∈ H ∖ L` has orbit of size `p`,
/// `Pr = (1/p)((p−1)/|H:L| + 1)`, which specializes to the two equality
/// values when `H/L` is `Z_q` or `Z_q × Z_q`.
pub fn converse_check(inst: &Instance) -> Result<Vec<BoundCheck>> {
    let (p, q) = standing(inst)?;
    let orbits_of_size_p = inst.moved().all(|(_, o)| o.len() == p);
    let k = inst.index_of_l();
    let formula = &(&r(p - 1, k) + &Rational::one()) * &r(1, p);
    let quotient = quotient_group(inst.group(), inst.subgroup(), inst.autocentre())?;
    let cyclic_q = are_isomorphic(quotient.table(), &cyclic(q));
    let square_q = are_isomorphic(quotient.table(), &direct_product(&cyclic(q), &cyclic(q)));
    let pr = inst.pr().clone();
    Ok(alloc::vec![
        BoundCheck::new("converse_formula", Direction::Equal, pr.clone(), formula)
            .primes(inst)
            .hypothesis(orbits_of_size_p),
        BoundCheck::new("converse_cyclic", Direction::Equal, pr.clone(), r(p + q - 1, p * q))
            .primes(inst)
            .hypothesis(orbits_of_size_p && cyclic_q),
        BoundCheck::new("converse_elementary", Direction::Equal, pr, r(q * q + p - 1, p * q * q))
            .primes(inst)
            .hypothesis(orbits_of_size_p && square_q),
    ])
}

/// `Pr(H, Aut(G)) ≤ Pr(H, G)`. Meaningful when `A` contains `Inn(G)`.
pub fn pr_le_commuting(inst: &Instance) -> Result<BoundCheck> {
    let bound = pr_commuting(inst.subgroup(), inst.group())?;
    Ok(BoundCheck::new("le_commuting", Direction::Upper, inst.pr().clone(), bound).primes(inst))
}

/// `Pr ≥ |L|/|H| + (p(|H| − |X_H| − |L|) + |X_H|)/(|H||A|)`. Needs only `|A| > 1`.
pub fn bound_lower_main(inst: &Instance) -> Result<BoundCheck> {
    let p = inst.p().ok_or(Error::Hypothesis("the automorphism group is trivial"))?;
    let h = inst.subgroup().order();
    let l = inst.autocentre().order();
    let x = inst.trivial_stabilizers().len();
    let a = inst.automorphisms().order();
    let bound = &r(l, h) + &r(p * (h - x - l) + x, h * a);
    Ok(BoundCheck::new("lower_main", Direction::Lower, inst.pr().clone(), bound).primes(inst))
}

/// `(1/n)(1 + (n−1)/k)`.
fn set_bound(n: usize, k: usize) -> Rational {
    &(&Rational::one() + &r(n - 1, k)) * &r(1, n)
}

/// `Pr ≥ (1/|S|)(1 + (|S|−1)/|H:L|)`, with equality iff `orb(x) = x·S` for
/// every `x ∈ H ∖ L`; the condition is evaluated as a set equality.
pub fn bound_lower_s(inst: &Instance) -> Result<BoundCheck> {
    standing(inst)?;
    let s = inst.autocommutators();
    let bound = set_bound(s.len(), inst.index_of_l());
    let g = inst.group();
    let condition = inst.moved().all(|(x, o)| o.members() == translate(g, x, s).as_slice());
    Ok(BoundCheck::new("lower_s", Direction::Lower, inst.pr().clone(), bound)
        .primes(inst)
        .condition(condition))
}

/// The `[H, A]` form of the lower bound, plus two side checks: the `|S|`
/// bound dominates it (`n ≤ m` monotonicity), and the stated comparison
/// `bound ≥ |L|/|H| + p(|H| − |L|)/(|H||A|)`, which is a remark.
pub fn bound_lower_commutator(inst: &Instance) -> Result<Vec<BoundCheck>> {
    let (p, _) = standing(inst)?;
    let k = inst.index_of_l();
    let m = inst.commutator_subgroup().order();
    let n = inst.autocommutators().len();
    let main = set_bound(m, k);
    let h = inst.subgroup().order();
    let l = inst.autocentre().order();
    let a = inst.automorphisms().order();
    let older = &r(l, h) + &r(p * (h - l), h * a);
    Ok(alloc::vec![
        BoundCheck::new("lower_commutator", Direction::Lower, inst.pr().clone(), main.clone()).primes(inst),
        BoundCheck::new(
            "lower_commutator_monotone",
            Direction::Lower,
            set_bound(n, k),
            main.clone()
        )
        .primes(inst)
        .hypothesis(n <= m),
        BoundCheck::new("lower_commutator_comparison", Direction::Lower, main, older)
            .primes(inst)
            .remark(),
    ])
}

/// The five conditions of the equality case of the `[H, A]` lower bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Equivalence {
    /// `Pr` equals the `[H, A]` lower bound.
    pub a: bool,
    /// `|orb(x)| = |[H, A]|` for all `x ∉ L`.
    pub b: bool,
    /// `orb(x) = x[H, A]` for all `x ∉ L`, and `[H, A] ⊆ L`.
    pub c: bool,
    /// `C_A(x)` is normal in `A` with `A/C_A(x) ≅ [H, A]` for all `x ∉ L`.
    pub d: bool,
    /// `{x⁻¹α(x) : α ∈ A} = [H, A]` for all `x ∉ L`.
    pub e: bool,
    /// `H` is mapped into itself by `A`. Without this, (c) and (d) can fail
    /// while (a), (b) and (e) hold, e.g. for a reflection subgroup of `S₃`.
    pub invariant: bool,
}

impl Equivalence {
    pub fn as_array(&self) -> [bool; 5] {
        [self.a, self.b, self.c, self.d, self.e]
    }

    pub fn consistent(&self) -> bool {
        let v = self.as_array();
        v.iter().all(|&b| b == v[0])
    }

    /// Pass when consistent, Fail when inconsistent on an invariant `H`,
    /// Inapplicable otherwise.
    pub fn verdict(&self) -> Verdict {
        if self.consistent() {
            Verdict::Pass
        } else if self.invariant {
            Verdict::Fail
        } else {
            Verdict::Inapplicable
        }
    }
}

pub fn equivalent_conditions(inst: &Instance) -> Result<Equivalence> {
    standing(inst)?;
    let g = inst.group();
    let k = inst.commutator_subgroup();
    let m = k.order();

    let a = *inst.pr() == set_bound(m, inst.index_of_l());
    let b = inst.moved().all(|(_, o)| o.len() == m);
    let c = inst
        .moved()
        .all(|(x, o)| o.members() == translate(g, x, k.members()).as_slice())
        && k.is_subset_of(inst.autocentre());
    let e = inst.moved().all(|(x, _)| inst.autocommutators_of(x) == k.members());

    let aut = inst.automorphisms();
    let table = aut.as_group();
    let whole = SubgroupSet::whole(&table);
    let k_table = k.as_group();
    let mut d = true;
    for (x, _) in inst.moved() {
        let stab: Vec<usize> = (0..aut.order()).filter(|&i| aut.get(i).apply(x) == x).collect();
        let stab = SubgroupSet::new(&table, stab)?;
        if !is_normal(&table, &stab, &whole)? {
            d = false;
            break;
        }
        let q = quotient_group(&table, &whole, &stab)?;
        if !are_isomorphic(q.table(), &k_table) {
            d = false;
            break;
        }
    }
    Ok(Equivalence {
        a,
        b,
        c,
        d,
        e,
        invariant: inst.is_invariant(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aut::compute_aut;
    use crate::catalog::build;
    use crate::subgroup::{enumerate_subgroups, subgroup_closure};

    fn inst(name: &str) -> Instance {
        let g = build(name).unwrap();
        Instance::new(&SubgroupSet::whole(&g), &compute_aut(&g).unwrap()).unwrap()
    }

    #[test]
    fn upper_main_values() {
        let c = bound_upper_main(&inst("C(4)")).unwrap();
        assert_eq!(c.bound, r(3, 4));
        assert!(c.is_equality && c.verdict() == Verdict::Pass);
        let c = bound_upper_main(&inst("C(3)")).unwrap();
        assert_eq!(c.bound, r(2, 3));
        assert!(c.is_equality);
        let c = bound_upper_main(&inst("S(3)")).unwrap();
        assert!(c.bound >= r(1, 2) && c.holds);
        assert!(matches!(bound_upper_main(&inst("C(2)")), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn pq_corollaries() {
        let checks = bound_upper_pq(&inst("C(4)")).unwrap();
        assert_eq!(checks[0].bound, r(3, 4));
        assert!(checks[0].is_equality);
        assert!(checks.iter().all(|c| c.verdict() == Verdict::Pass));
        let checks = bound_upper_pq(&inst("C(3)")).unwrap();
        // q = 3 > p = 2
        assert_eq!(checks[0].bound, r(2, 3));
        assert!(checks[2].hypothesis_met);

        let checks = bound_upper_nonabelian(&inst("S(3)")).unwrap();
        assert_eq!(checks[0].bound, r(5, 8));
        assert_eq!(checks[2].bound, r(5, 8));
        assert!(checks.iter().all(|c| c.verdict() == Verdict::Pass));
        let checks = bound_upper_nonabelian(&inst("Q8")).unwrap();
        assert_eq!(checks[0].value, r(3, 8));
        assert!(matches!(
            bound_upper_nonabelian(&inst("C(4)")),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn equality_classification() {
        let rep = classify_equality_pq(&inst("C(4)")).unwrap().unwrap();
        assert!(rep.holds());
        assert_eq!(rep.quotient_order, 2);
        let rep = classify_equality_pq(&inst("C(3)")).unwrap().unwrap();
        assert_eq!((rep.p, rep.q, rep.quotient_order), (2, 3, 3));
        assert!(rep.holds());
        assert_eq!(classify_equality_pq(&inst("S(3)")).unwrap(), None);
        assert_eq!(classify_equality_pq2(&inst("S(3)")).unwrap(), None);
        assert_eq!(classify_equality_pq2(&inst("C(4)")).unwrap(), None);
    }

    #[test]
    fn converse() {
        let checks = converse_check(&inst("C(4)")).unwrap();
        assert_eq!(checks[0].bound, r(3, 4));
        assert_eq!(checks[0].verdict(), Verdict::Pass);
        assert_eq!(checks[1].verdict(), Verdict::Pass);
        let checks = converse_check(&inst("C(3)")).unwrap();
        assert_eq!(checks[0].bound, r(2, 3));
        assert_eq!(checks[0].verdict(), Verdict::Pass);
        let checks = converse_check(&inst("Q8")).unwrap();
        assert!(checks.iter().all(|c| c.verdict() == Verdict::Inapplicable));
    }

    #[test]
    fn commuting_comparison() {
        let c = pr_le_commuting(&inst("S(3)")).unwrap();
        assert!(c.is_equality && c.holds);
        let c = pr_le_commuting(&inst("C(4)")).unwrap();
        assert_eq!(c.bound, Rational::one());
        assert!(c.holds && !c.is_equality);
    }

    #[test]
    fn lower_bounds() {
        let c = bound_lower_main(&inst("C(4)")).unwrap();
        assert_eq!(c.bound, r(3, 4));
        let c = bound_lower_main(&inst("C(3)")).unwrap();
        assert_eq!(c.bound, r(2, 3));
        assert!(bound_lower_main(&inst("S(3)")).unwrap().holds);

        let c = bound_lower_s(&inst("C(4)")).unwrap();
        assert_eq!(c.bound, r(3, 4));
        assert_eq!(c.equality_condition, Some(true));
        assert_eq!(c.verdict(), Verdict::Pass);
        let c = bound_lower_s(&inst("C(3)")).unwrap();
        assert_eq!(c.bound, r(5, 9));
        assert_eq!(c.equality_condition, Some(false));
        assert!(!c.is_equality);
        assert_eq!(c.verdict(), Verdict::Pass);

        let cs = bound_lower_commutator(&inst("C(4)")).unwrap();
        assert_eq!(cs[0].bound, r(3, 4));
        let cs = bound_lower_commutator(&inst("C(3)")).unwrap();
        assert_eq!(cs[0].bound, r(5, 9));
        assert_eq!(cs[1].verdict(), Verdict::Pass);
    }

    #[test]
    fn monotonicity() {
        let s3 = build("S(3)").unwrap();
        let a = compute_aut(&s3).unwrap();
        let whole = SubgroupSet::whole(&s3);
        let a3 = subgroup_closure(&s3, &[3]).unwrap();
        let c = check_monotonicity(&a3, &whole, &a).unwrap();
        assert_eq!((c.value.clone(), c.bound.clone()), (r(2, 3), Rational::one()));
        assert_eq!(c.verdict(), Verdict::Pass);
        let c = check_monotonicity(&SubgroupSet::trivial(&s3), &whole, &a).unwrap();
        assert_eq!(c.bound, r(3, 1));
        let c = check_monotonicity(&whole, &whole, &a).unwrap();
        assert!(c.is_equality && c.verdict() == Verdict::Pass);
        assert_eq!(check_monotonicity(&whole, &a3, &a).unwrap_err(), Error::NotContained);
    }

    #[test]
    fn equivalence_witnesses() {
        let e = equivalent_conditions(&inst("C(4)")).unwrap();
        assert_eq!(e.as_array(), [true; 5]);
        let e = equivalent_conditions(&inst("C(3)")).unwrap();
        assert_eq!(e.as_array(), [false; 5]);
    }

    #[test]
    fn equivalence_needs_invariant_subgroup() {
        let s3 = build("S(3)").unwrap();
        let a = compute_aut(&s3).unwrap();
        let h = subgroup_closure(&s3, &[1]).unwrap();
        let e = equivalent_conditions(&Instance::new(&h, &a).unwrap()).unwrap();
        assert_eq!(e.as_array(), [true, true, false, false, true]);
        assert!(!e.invariant);
        assert_eq!(e.verdict(), Verdict::Inapplicable);
    }

    #[test]
    fn equivalence_consistent_on_small_groups() {
        for name in ["S(3)", "D(4)", "Q8", "C(2)×C(2)", "C(6)", "A(4)"] {
            let g = build(name).unwrap();
            let a = compute_aut(&g).unwrap();
            for h in enumerate_subgroups(&g).unwrap() {
                let i = Instance::new(&h, &a).unwrap();
                if let Ok(e) = equivalent_conditions(&i) {
                    assert_ne!(e.verdict(), Verdict::Fail, "{name} {h}: {e:?}");
                }
            }
        }
    }
}
