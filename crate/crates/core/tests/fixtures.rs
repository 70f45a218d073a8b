use std::path::PathBuf;

use chroma_core::graph::{chromatic_class_signature, chromatic_polynomial, encode_graph6, parse_graph, Named};

fn read(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

#[test]
fn every_named_fixture_parses_to_its_graph() {
    for named in Named::ALL {
        let g = parse_graph(&read(named.fixture_name())).unwrap();
        assert_eq!(g, named.graph(), "{named:?}");
    }
}

#[test]
fn graph6_fixture_matches_edge_list() {
    let g6 = parse_graph(&read("p4.g6")).unwrap();
    assert_eq!(g6, Named::Path4.graph());
    assert_eq!(encode_graph6(&g6), read("p4.g6").trim());
}

#[test]
fn two_edge_fixtures() {
    let a = parse_graph(&read("two_edges_disjoint_4.txt")).unwrap();
    let b = parse_graph(&read("two_edges_adjacent_4.txt")).unwrap();
    assert_eq!((a.d(), a.edge_count()), (4, 2));
    assert_eq!((b.d(), b.edge_count()), (4, 2));
    assert_eq!(chromatic_polynomial(&a), chromatic_polynomial(&b));
}

#[test]
fn chromatically_equivalent_pair_shares_class_signature() {
    let g = parse_graph(&read("bowtie.txt")).unwrap();
    let h = parse_graph(&read("diamond_pendant.txt")).unwrap();
    assert_eq!(chromatic_polynomial(&g), chromatic_polynomial(&h));
    for n in 1..=4 {
        assert_eq!(chromatic_class_signature(&g, n).unwrap(), chromatic_class_signature(&h, n).unwrap());
    }
}
