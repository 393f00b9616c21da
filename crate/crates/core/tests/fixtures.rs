//! Bundled-fixture checks: parse, summarize, and cross-check every index
//! against the dense-matrix oracle plus frozen full-precision references.

mod common;

use common::{brute_force_index, rel_err};
use randic_core::{
    index_suite, parse_edge_list, summarize_network, IndexFamily, SUMMARY_SPECS,
};

fn fixture(name: &str) -> String {
    let path = format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("reading {path}: {e}"))
}

#[test]
fn karate_summary_matches_oracle_and_references() {
    let (g, doc) = parse_edge_list(&fixture("karate.edges")).unwrap();
    assert_eq!(g.node_count(), 34);
    assert_eq!(g.edge_count(), 78);
    assert_eq!(doc.self_loops_dropped, 0);
    assert_eq!(doc.duplicates_collapsed, 0);

    let s = summarize_network("karate", &g, doc.diagnostics());
    assert_eq!((s.d_max, s.d_min), (17, 1));
    assert_eq!(s.d_median, 3.0);
    assert!(rel_err(s.density, 78.0 / 561.0) < 1e-15);

    // independent references computed offline with networkx + numpy
    assert!(rel_err(s.randic_half, 13.970824815010783) < 1e-12);
    assert!(rel_err(s.randic_one, 2.8663684640522864) < 1e-12);
    assert!(rel_err(s.chi_half, 21.001286625648355) < 1e-12);
    assert!(rel_err(s.chi_one, 5.92754841781604) < 1e-12);

    // and the dense-matrix oracle agrees on the same graph
    assert!(rel_err(s.randic_half, brute_force_index(&g, IndexFamily::Randic, -0.5)) < 1e-12);
    assert!(rel_err(s.randic_one, brute_force_index(&g, IndexFamily::Randic, -1.0)) < 1e-12);
    assert!(rel_err(s.chi_half, brute_force_index(&g, IndexFamily::Chi, -0.5)) < 1e-12);
    assert!(rel_err(s.chi_one, brute_force_index(&g, IndexFamily::Chi, -1.0)) < 1e-12);
}

#[test]
fn karate_suite_matches_independent_calls_bitwise() {
    let (g, _) = parse_edge_list(&fixture("karate.edges")).unwrap();
    let suite = index_suite(&g, &SUMMARY_SPECS);
    let independent = [
        randic_core::general_randic(&g, -0.5),
        randic_core::general_randic(&g, -1.0),
        randic_core::general_sum_connectivity(&g, -0.5),
        randic_core::general_sum_connectivity(&g, -1.0),
    ];
    for (a, b) in suite.iter().zip(independent.iter()) {
        assert_eq!(a.value.to_bits(), b.value.to_bits());
    }
}

#[test]
fn k5_fixture_summary() {
    let (g, doc) = parse_edge_list(&fixture("k5.edges")).unwrap();
    let s = summarize_network("k5", &g, doc.diagnostics());
    assert_eq!(s.n, 5);
    assert_eq!(s.density, 1.0);
    assert_eq!((s.d_max, s.d_median, s.d_min), (4, 4.0, 4));
    assert!(rel_err(s.randic_half, 2.5) < 1e-15);
}

#[test]
fn path3_fixture_summary() {
    let (g, doc) = parse_edge_list(&fixture("path3.edges")).unwrap();
    let s = summarize_network("path3", &g, doc.diagnostics());
    assert!(rel_err(s.density, 2.0 / 3.0) < 1e-15);
    assert_eq!(s.d_median, 1.0);
    assert!(rel_err(s.randic_half, 2f64.sqrt()) < 1e-15);
}
