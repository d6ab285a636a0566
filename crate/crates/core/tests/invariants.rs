//! Invariants checked across the shared corpus with independent computations.

mod common;

use gradus::cli::{run_text, RunOptions};
use gradus::decompose::{minimal_primes, MonomialIdeal};
use gradus::gsop::{find_gsop, DEFAULT_MAX_TRIES};
use gradus::koszul::{build_koszul, koszul_homology, DEFAULT_SLACK};
use gradus::ring::Monomial;
use num_rational::BigRational;

#[test]
fn gsop_certificate_is_order_independent_and_minimal() {
    for (i, m) in common::corpus().iter().enumerate() {
        let g = find_gsop(m, i as u64, DEFAULT_MAX_TRIES).unwrap();
        let mut reversed = g.elements.clone();
        reversed.reverse();
        let q = m.quotient_by_ideal(&reversed, 1).unwrap();
        assert_eq!(q.total_length(2), g.certificate, "module {i}");
        for drop in 0..g.elements.len() {
            let mut fewer = g.elements.clone();
            fewer.remove(drop);
            let q = m.quotient_by_ideal(&fewer, 1).unwrap();
            assert!(!q.total_length(2).is_finite(), "module {i} without element {drop}");
        }
    }
}

fn covers(s: u32, gens: &[Monomial]) -> bool {
    gens.iter().all(|g| g.support().any(|v| s & (1 << v) != 0))
}

#[test]
fn minimal_primes_match_subset_enumeration() {
    for (ring, gens) in common::monomial_instances(50, 11) {
        let n = ring.nvars();
        let ideal = MonomialIdeal::new(n, gens.clone());
        let mut expected: Vec<Vec<usize>> = (0u32..1 << n)
            .filter(|&s| covers(s, &gens))
            .filter(|&s| (0..n).all(|v| s & (1 << v) == 0 || !covers(s & !(1 << v), &gens)))
            .map(|s| (0..n).filter(|v| s & (1 << v) != 0).collect())
            .collect();
        let mut got = minimal_primes(&ideal).unwrap();
        expected.sort();
        got.sort();
        assert_eq!(got, expected, "{gens:?}");
    }
}

#[test]
fn chi_agrees_with_series_at_one() {
    for (i, m) in common::corpus().iter().enumerate() {
        let g = find_gsop(m, i as u64, DEFAULT_MAX_TRIES).unwrap();
        let rep = koszul_homology(&build_koszul(m, &g.elements).unwrap(), DEFAULT_SLACK).unwrap();
        assert_eq!(rep.chi_series.eval_at_one(), BigRational::from_integer(rep.chi.into()), "module {i}");
        assert!(rep.chi > 0, "module {i}");
    }
}

#[test]
fn zero_module_written_with_marker() {
    let reports = run_text("ring x:1 y:2\nmodule shifts 0\nrel 1*e1\ncmd dim\ncmd degree\n", &RunOptions::default()).unwrap();
    assert_eq!(reports[0].fields[0].value, "-inf");
    assert_eq!(reports[1].fields[0].value, "0");
}

#[test]
fn free_weighted_ring_dimension_and_degree() {
    let reports = run_text("ring x:1 y:2\ncmd dim\ncmd degree\n", &RunOptions::default()).unwrap();
    assert_eq!(reports[0].fields[0].value, "2");
    assert_eq!(reports[1].fields[0].value, "1/2");
}
