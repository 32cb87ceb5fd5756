mod common;

use common::*;
use pachner_engine::reduce::is_simplex_boundary;
use pachner_engine::{apply_move, enumerate_moves, is_combinatorial_sphere, reduce_to_boundary, MoveError, MoveSequence};
use proptest::prelude::*;
use simplicial_core::{Complex, Verdict};
use test_oracles::fixtures;

#[test]
fn simplex_boundary_needs_nothing() {
    let t = oc(&fixtures::simplex_boundary(4));
    assert!(reduce_to_boundary(&t, 100, 1).unwrap().is_empty());
}

#[test]
fn one_insertion_away() {
    let t = oc(&fixtures::simplex_boundary(4));
    let m = enumerate_moves(&t)[2].clone();
    let k = apply_move(&t, &m).unwrap();
    assert_eq!(k.num_vertices(), 6);
    let seq = reduce_to_boundary(&k, 100, 1).unwrap();
    assert_eq!(seq.len(), 1);
    assert!(seq.moves[0].is_removal());
}

#[test]
fn cross_polytope_reduces() {
    let k = oc(&fixtures::cross_polytope(4));
    for seed in 0..5 {
        let seq = reduce_to_boundary(&k, 1000, seed).unwrap();
        assert!(seq.len() >= 3);
        let end = seq.replay(&k).unwrap();
        assert!(is_simplex_boundary(&end));
        let again = MoveSequence::from_json(&seq.to_json()).unwrap();
        assert_eq!(again, seq);
        assert_eq!(reduce_to_boundary(&k, 1000, seed).unwrap(), seq);
    }
}

#[test]
fn surfaces_reduce() {
    for f in [fixtures::octahedron(), fixtures::icosahedron()] {
        let k = oc(&f);
        let seq = reduce_to_boundary(&k, 1000, 3).unwrap();
        assert!(is_simplex_boundary(&seq.replay(&k).unwrap()));
    }
    let p = oc(&fixtures::polygon(9));
    let seq = reduce_to_boundary(&p, 100, 0).unwrap();
    assert_eq!(seq.len(), 6);
}

#[test]
fn tampered_certificate_is_rejected() {
    let k = oc(&fixtures::cross_polytope(4));
    let mut seq = reduce_to_boundary(&k, 1000, 0).unwrap();
    seq.moves.swap(0, 1);
    assert!(seq.replay(&k).is_err());
    let mut seq = reduce_to_boundary(&k, 1000, 0).unwrap();
    seq.end_key[7] ^= 1;
    assert!(matches!(seq.replay(&k), Err(MoveError::BadCertificate(_))));
}

#[test]
fn budget_exhaustion() {
    let k = oc(&fixtures::cross_polytope(4));
    assert!(matches!(reduce_to_boundary(&k, 1, 0), Err(MoveError::BudgetExhausted { .. })));
}

#[test]
fn recognition() {
    assert!(matches!(is_combinatorial_sphere(&Complex::simplex_boundary(4), 10, 0), Verdict::Yes(s) if s.is_empty()));
    assert!(matches!(is_combinatorial_sphere(&cx(&fixtures::rp2_6()), 10, 0), Verdict::No(_)));
    match is_combinatorial_sphere(&cx(&fixtures::cross_polytope(4)), 1000, 0) {
        Verdict::Yes(seq) => assert!(!seq.is_empty()),
        v => panic!("{v:?}"),
    }
    assert!(matches!(is_combinatorial_sphere(&cx(&fixtures::cross_polytope(4)), 1, 0), Verdict::Unknown(_)));
    // the suspension of RP2 has non-sphere vertex links
    let (susp, _) = cx(&fixtures::rp2_6()).join(&Complex::simplex_boundary(1));
    assert!(matches!(is_combinatorial_sphere(&susp, 100, 0), Verdict::No(_)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    /// Random walks of moves from the cross-polytope stay spheres and reduce back.
    #[test]
    fn random_walks_reduce(picks in prop::collection::vec(0usize..1000, 1..12), seed in 0u64..1000) {
        let mut k = oc(&fixtures::cross_polytope(4));
        for p in picks {
            let ms = enumerate_moves(&k);
            k = apply_move(&k, &ms[p % ms.len()]).unwrap();
        }
        let seq = reduce_to_boundary(&k, 5000, seed).unwrap();
        prop_assert!(is_simplex_boundary(&seq.replay(&k).unwrap()));
    }

    #[test]
    fn random_surfaces_reduce(picks in prop::collection::vec(0usize..1000, 1..20), seed in 0u64..1000) {
        let mut k = oc(&fixtures::simplex_boundary(3));
        for p in picks {
            let ms = enumerate_moves(&k);
            k = apply_move(&k, &ms[p % ms.len()]).unwrap();
        }
        let seq = reduce_to_boundary(&k, 5000, seed).unwrap();
        prop_assert!(is_simplex_boundary(&seq.replay(&k).unwrap()));
    }
}
