use autocomm::core::catalog::build;
use autocomm::format::{parse_group_table, read_group_file, write_group_table, FormatError};
use autocomm::input::resolve_group;
use proptest::prelude::*;

#[test]
fn parse_errors_carry_line_numbers() {
    let cases = [
        ("", Some(1)),
        ("x\n", Some(1)),
        ("2\n0 1\n1\n", Some(3)),
        ("2\n0 1\n1 a\n", Some(3)),
        ("2\n0 1\n1 0\n0 1\n", Some(4)),
        ("# c\n3\n0 1 2\n1 2 7\n2 0 1\n", Some(4)),
        ("2\n0 1\n", None),
    ];
    for (text, line) in cases {
        let e = parse_group_table(text).unwrap_err();
        assert_eq!(e.line(), line, "{text:?}: {e}");
    }
}

#[test]
fn axiom_failures_are_named() {
    // identity at index 1
    let e = parse_group_table("2\n1 0\n0 1\n").unwrap_err();
    assert!(matches!(e, FormatError::Axiom(_)));
    assert!(e.to_string().contains("relabel"), "{e}");
    // a Latin square with identity 0 that is not associative
    let loop5 = "5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n";
    let e = parse_group_table(loop5).unwrap_err();
    assert!(e.to_string().contains("associativ"), "{e}");
}

#[test]
fn files_resolve_before_catalog_names() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z3.txt");
    std::fs::write(&path, "# cyclic\n3\n0 1 2\n1 2 0\n2 0 1\n").unwrap();
    let g = resolve_group(path.to_str().unwrap()).unwrap();
    assert_eq!(g.order(), 3);
    assert_eq!(g.name(), Some("z3"));
    assert!(read_group_file(&dir.path().join("missing")).is_err());
    assert!(resolve_group("C(0)").is_err());
}

proptest! {
    #[test]
    fn write_then_parse(name in proptest::sample::select(vec!["C(1)", "C(7)", "D(4)", "Q8", "S(4)", "A(4)", "M16", "C(2)×C(3)"])) {
        let g = build(name).unwrap();
        let back = parse_group_table(&write_group_table(&g)).unwrap();
        prop_assert_eq!(back.order(), g.order());
        prop_assert!(back.rows().zip(g.rows()).all(|(a, b)| a == b));
    }
}
