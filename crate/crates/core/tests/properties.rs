mod common;

use common::*;

const N: usize = 200;

fn run(check: Check) {
    let n = check.unwrap_or_else(|e| panic!("{e}"));
    assert!(n >= N);
}

#[test]
fn plain_and_gset_agree() {
    run(plain_gset_agree(N, 11));
}

#[test]
fn base_change_keeps_verdict() {
    run(isomorphism_invariant(N, 12));
}

#[test]
fn gf2_to_gf4_keeps_verdict() {
    run(extension_invariant(N, 13));
}

#[test]
fn terminal_extension_keeps_verdict() {
    run(kan_preserves_verdict(N, 14));
}

#[test]
fn reflection_commutes_with_linearization() {
    run(reflection_commutes(N, 15));
}

#[test]
fn realizable_indecomposables_have_small_terminal() {
    run(terminal_dim_bound(N, 16));
}

#[test]
fn vandermonde_gives_permutations() {
    run(vandermonde_permutes(N, 17));
}

#[test]
fn graphs_round_trip_through_h0() {
    run(h0_round_trip(N, 18));
}

#[test]
fn free_has_one_more_full_indicator() {
    run(free_splits_full_indicator(N, 19));
}
