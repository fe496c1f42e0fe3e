use autocomm::core::catalog::build;
use autocomm::core::degree::degree_report;
use autocomm::core::subgroup::enumerate_subgroups;
use autocomm::core::{compute_aut, Rational};
use autocomm::report::{degree_record, parse_kv, render_kv, KvRecord};
use autocomm::scan::{render_scan_kv, run_scan, ScanOptions, Suite};
use proptest::prelude::*;

proptest! {
    #[test]
    fn rationals_survive_kv(values in prop::collection::vec((-10_000i64..10_000, 1i64..10_000), 1..8)) {
        let records: Vec<KvRecord> = values
            .chunks(3)
            .map(|chunk| {
                let mut r = KvRecord::new("values");
                for (i, &(n, d)) in chunk.iter().enumerate() {
                    r.push(&format!("v{i}"), Rational::new(n, d));
                }
                r
            })
            .collect();
        let back = parse_kv(&render_kv(&records)).unwrap();
        prop_assert_eq!(&back, &records);
        for (chunk, rec) in values.chunks(3).zip(&back) {
            for (i, &(n, d)) in chunk.iter().enumerate() {
                prop_assert_eq!(rec.rational(&format!("v{i}")), Some(Rational::new(n, d)));
            }
        }
    }
}

#[test]
fn degree_records_reconstruct_reports() {
    for name in ["S(3)", "Q8", "C(2)×C(4)"] {
        let g = build(name).unwrap();
        let a = compute_aut(&g).unwrap();
        for h in enumerate_subgroups(&g).unwrap() {
            let r = degree_report(&h, &a).unwrap();
            let text = render_kv(&[degree_record(name, &h, &r)]);
            let rec = &parse_kv(&text).unwrap()[0];
            assert_eq!(rec.rational("pr_definition"), Some(r.pr_definition.clone()));
            assert_eq!(rec.rational("pr_orbit_count"), Some(r.pr_orbit_count.clone()));
            assert_eq!(rec.usize("fixed_pairs"), Some(r.fixed_pairs));
        }
    }
}

#[test]
fn scan_output_is_byte_identical() {
    let opts = ScanOptions {
        max_order: 10,
        suite: Suite::All,
        ..ScanOptions::default()
    };
    assert_eq!(
        render_scan_kv(&run_scan(&opts), &opts),
        render_scan_kv(&run_scan(&opts), &opts)
    );
}
