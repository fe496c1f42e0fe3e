mod support;

use autocomm_core::action::{autocentre, autocommutator_set};
use autocomm_core::catalog::build;
use autocomm_core::degree::{degree_report, pr_commuting, pr_definition};
use autocomm_core::subgroup::enumerate_subgroups;
use autocomm_core::{compute_aut, Rational};

const SMALL: &[&str] = &[
    "C(1)",
    "C(2)",
    "C(3)",
    "C(4)",
    "C(5)",
    "C(6)",
    "C(7)",
    "C(8)",
    "C(2)×C(2)",
    "C(2)×C(4)",
    "C(2)×C(2)×C(2)",
    "D(3)",
    "D(4)",
    "Q8",
    "S(3)",
];

const UP_TO_TWELVE: &[&str] = &["C(9)", "C(10)", "C(12)", "C(3)×C(3)", "D(5)", "D(6)", "Dic(3)", "A(4)"];

#[test]
fn automorphisms_match_permutation_filter() {
    for name in SMALL {
        let g = build(name).unwrap();
        let ours: Vec<Vec<usize>> = compute_aut(&g)
            .unwrap()
            .members()
            .iter()
            .map(|m| m.image().to_vec())
            .collect();
        let mut brute = support::automorphisms(&g);
        brute.sort();
        assert_eq!(ours, brute, "{name}");
    }
}

#[test]
fn subgroups_match_subset_filter() {
    for name in SMALL.iter().chain(UP_TO_TWELVE) {
        let g = build(name).unwrap();
        let ours: Vec<Vec<usize>> = enumerate_subgroups(&g)
            .unwrap()
            .iter()
            .map(|h| h.members().to_vec())
            .collect();
        assert_eq!(ours, support::subgroups(&g), "{name}");
    }
}

#[test]
fn degrees_match_pair_count() {
    for name in SMALL {
        let g = build(name).unwrap();
        let a = compute_aut(&g).unwrap();
        let auts = support::automorphisms(&g);
        for h in enumerate_subgroups(&g).unwrap() {
            let expected = support::degree(h.members(), &auts);
            assert_eq!(pr_definition(&h, &a).unwrap(), expected, "{name} {h}");
            let r = degree_report(&h, &a).unwrap();
            assert!(r.formulas_agree(), "{name} {h}");
            assert_eq!(r.pr_orbit, expected);
            assert_eq!(pr_commuting(&h, &g).unwrap(), support::commuting(h.members(), &g));
            assert_eq!(
                autocentre(&h, &a).unwrap().members(),
                support::autocentre(h.members(), &auts).as_slice()
            );
            assert_eq!(
                autocommutator_set(&h, &a).unwrap(),
                support::autocommutators(&g, h.members(), &auts),
                "{name} {h}"
            );
        }
    }
}

#[test]
fn spot_values() {
    let whole = |name: &str| {
        let g = build(name).unwrap();
        support::degree(&(0..g.order()).collect::<Vec<_>>(), &support::automorphisms(&g))
    };
    assert_eq!(whole("C(3)"), Rational::new(2, 3));
    assert_eq!(whole("C(4)"), Rational::new(3, 4));
    assert_eq!(whole("S(3)"), Rational::new(1, 2));
    assert_eq!(whole("Q8"), Rational::new(3, 8));
    let s3 = build("S(3)").unwrap();
    assert_eq!(
        support::degree(&[0, 3, 4], &support::automorphisms(&s3)),
        Rational::new(2, 3)
    );
}
