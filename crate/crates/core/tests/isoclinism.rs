use autocomm_core::catalog::build;
use autocomm_core::isoclinism::{check_equal_degree, find_autoisoclinism, verify_witness, Limits, PairedGroups};
use autocomm_core::{compute_aut, Rational, SubgroupSet};

const TINY: &[&str] = &[
    "C(1)",
    "C(2)",
    "C(3)",
    "C(4)",
    "C(5)",
    "C(6)",
    "C(8)",
    "C(2)×C(2)",
    "S(3)",
    "D(4)",
    "Q8",
];

fn pair(name: &str) -> PairedGroups {
    let g = build(name).unwrap();
    PairedGroups::new(&SubgroupSet::whole(&g), &compute_aut(&g).unwrap()).unwrap()
}

#[test]
fn fast_rejection_never_hides_a_witness() {
    let slow = Limits {
        fast_reject: false,
        ..Limits::default()
    };
    let pairs: Vec<_> = TINY.iter().map(|n| pair(n)).collect();
    for (i, p1) in pairs.iter().enumerate() {
        for (j, p2) in pairs.iter().enumerate() {
            let fast = find_autoisoclinism(p1, p2, &Limits::default()).unwrap();
            let full = find_autoisoclinism(p1, p2, &slow).unwrap();
            assert_eq!(fast.is_some(), full.is_some(), "{} vs {}", TINY[i], TINY[j]);
        }
    }
}

#[test]
fn witnesses_are_sound_symmetric_and_degree_preserving() {
    let pairs: Vec<_> = TINY.iter().map(|n| pair(n)).collect();
    for p1 in &pairs {
        for p2 in &pairs {
            let forward = find_autoisoclinism(p1, p2, &Limits::default()).unwrap();
            let backward = find_autoisoclinism(p2, p1, &Limits::default()).unwrap();
            assert_eq!(forward.is_some(), backward.is_some());
            if let Some(w) = forward {
                verify_witness(p1, p2, &w).unwrap();
                verify_witness(p2, p1, &w.inverse().unwrap()).unwrap();
                assert!(check_equal_degree(p1, p2, &w).unwrap().holds);
            }
            if p1.degree().unwrap() != p2.degree().unwrap() {
                assert!(find_autoisoclinism(p1, p2, &Limits::default()).unwrap().is_none());
            }
        }
    }
}

#[test]
fn three_and_six() {
    let (a, b) = (pair("C(3)"), pair("C(6)"));
    let w = find_autoisoclinism(&a, &b, &Limits::default())
        .unwrap()
        .expect("witness");
    assert_eq!(a.degree().unwrap(), Rational::new(2, 3));
    assert_eq!(b.degree().unwrap(), Rational::new(2, 3));
    verify_witness(&a, &b, &w).unwrap();
}

#[test]
fn proper_subgroup_pairs() {
    let s3 = build("S(3)").unwrap();
    let a = compute_aut(&s3).unwrap();
    let a3 = PairedGroups::new(&SubgroupSet::new(&s3, [0, 3, 4]).unwrap(), &a).unwrap();
    assert!(a3.ill_defined().is_none());
    let w = find_autoisoclinism(&a3, &a3, &Limits::default()).unwrap().unwrap();
    verify_witness(&a3, &a3, &w).unwrap();
}
