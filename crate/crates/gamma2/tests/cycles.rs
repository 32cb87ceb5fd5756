mod common;

use common::*;
use gamma2::cycles::{spec_a_cycles, spec_b_cycles, spec_b_cycles_from_diagonals, spec_c_cycles};
use gamma2::*;
use pachner_engine::edge::mirror_edge;
use pachner_engine::enumerate_moves;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use simplicial_core::{OrientedComplex, Simplex};
use t_algebra::rational::{frac, q};
use test_oracles::fixtures;

fn s(v: &[u32]) -> Simplex {
    Simplex::from_distinct(v.iter().copied())
}

/// Oracle: replaying the moves returns the start up to oriented isomorphism.
fn closes(c: &ElementaryCycle) -> bool {
    let mut cur = c.start.clone();
    for m in &c.moves {
        cur = pachner_engine::apply_move(&cur, m).unwrap();
    }
    same_oriented(&cur, &c.start)
}

fn all_elementary(l: &OrientedComplex) -> Vec<ElementaryCycle> {
    let moves = enumerate_moves(l);
    let mut out = Vec::new();
    for (i, a) in moves.iter().enumerate() {
        for b in &moves[i + 1..] {
            if let Ok(c) = commutation_cycle(l, &a.sigma, &b.sigma) {
                out.push(c);
            }
        }
    }
    out.extend(spec_a_cycles(l));
    out.extend(spec_b_cycles(l));
    out.extend(spec_b_cycles_from_diagonals(l));
    out.extend(spec_c_cycles(l));
    out
}

#[test]
fn two_insertions_on_tetrahedron() {
    let l = tetra();
    let c = commutation_cycle(&l, &s(&[0, 1, 2]), &s(&[0, 1, 3])).unwrap();
    assert!(closes(&c));
    assert!(c.chain.is_cycle());
    assert_eq!(c.kind, CycleKind::CommC);
    assert_eq!(c.params, vec![1, 1]);
    assert_eq!(c.value(), q(0));
    // all insertions into the tetrahedron are one edge class, so the
    // edges cancel in pairs
    assert!(c.chain.is_zero());
    assert!(decompose_cycle(&c.chain, Order::Forward).unwrap().terms.is_empty());
}

#[test]
fn single_cycle_decomposes_to_itself() {
    let l = oriented(fixtures::icosahedron());
    let c = commutation_cycle(&l, &s(&[0, 1, 2]), &s(&[0, 4, 5])).unwrap();
    assert!(!c.chain.is_zero());
    let d = decompose_cycle(&c.chain, Order::Forward).unwrap();
    assert_eq!(d.terms.len(), 1);
    assert_eq!(d.terms[0].coefficient, q(1));
    assert_eq!(d.terms[0].cycle.chain, c.chain);
    assert_eq!(d.c(), c.value());
    let r = decompose_cycle(&c.chain, Order::Reverse).unwrap();
    assert_eq!(r.chain(), c.chain);
    assert_eq!(r.c(), c.value());
}

#[test]
fn icosahedron_flips_sharing_a_triangle() {
    let l = oriented(fixtures::icosahedron());
    let r = commutation_cycle(&l, &s(&[0, 1]), &s(&[0, 2]));
    assert!(matches!(r, Err(Gamma2Error::NotApplicable(_))));
}

#[test]
fn icosahedron_far_flips() {
    let l = oriented(fixtures::icosahedron());
    let c = commutation_cycle(&l, &s(&[0, 1]), &s(&[6, 11])).unwrap();
    assert_eq!(c.moves.len(), 4);
    assert!(closes(&c));
    assert!(c.chain.is_cycle());
    assert!(c.chain.len() <= 4);
    assert_eq!(c.kind, CycleKind::CommG);
    assert_eq!(c.value(), q(0));
}

#[test]
fn disjoint_flips_have_value_zero() {
    let l = oriented(fixtures::icosahedron());
    let c = commutation_cycle(&l, &s(&[1, 2]), &s(&[8, 9])).unwrap();
    assert_eq!(c.value(), q(0));
}

#[test]
fn insertions_at_a_common_vertex() {
    let l = oriented(fixtures::icosahedron());
    let (t0, t3) = (s(&[0, 1, 2]), s(&[0, 4, 5]));
    let c = commutation_cycle(&l, &t0, &t3).unwrap();
    assert_eq!(c.kind, CycleKind::CommB);
    // oracle: triangles passed turning positively around 0 from t0 to t3
    let between = if l.ordered_sign(&[0, 1, 2]) == Some(1) { 2 } else { 1 };
    assert_eq!(c.params, vec![3 - between, between]);
    let expect = if between == 2 { frac(1, 210) } else { frac(-1, 210) };
    assert_eq!(c.value(), expect);
    let swapped = commutation_cycle(&l, &t3, &t0).unwrap();
    assert_eq!(swapped.chain, c.chain.scale(&q(-1)));
    assert_eq!(swapped.value(), -expect);
}

#[test]
fn table_values() {
    assert_eq!(rho(1, 2), frac(1, 210));
    assert_eq!(c_value(CycleKind::CommB, &[1, 2]).unwrap(), frac(1, 210));
    assert_eq!(c_value(CycleKind::SpecA, &[0, 0, 0]).unwrap(), frac(1, 12));
    assert_eq!(c_value(CycleKind::CommA, &[]).unwrap(), q(0));
    assert_eq!(omega(0), frac(1, 6));
    assert_eq!(c_value(CycleKind::CommF, &[0, 1]).unwrap(), rho(0, 1));
    assert_eq!(c_value(CycleKind::SpecC, &[0, 0, 0, 0, 0]).unwrap(), frac(5, 6) - frac(1, 12));
    assert!(matches!(c_value(CycleKind::SpecB, &[1, 2]), Err(Gamma2Error::InvalidParams(_))));
}

#[test]
fn special_cycles_on_fixtures() {
    let a = spec_a(&tetra(), 0, 1).unwrap();
    assert!(closes(&a));
    assert_eq!(a.params, vec![1, 1, 1]);
    assert_eq!(a.value(), q(0));

    let oct = oriented(fixtures::octahedron());
    let b = spec_b(&oct, 0, 2).unwrap();
    assert_eq!(b.moves.len(), 5);
    assert!(closes(&b));
    assert_eq!(b.params, vec![2, 2, 2, 2]);

    let ico = oriented(fixtures::icosahedron());
    let c = spec_c(&ico, 0, 1).unwrap();
    assert!(closes(&c));
    assert_eq!(c.params, vec![2, 4, 3, 3, 4]);
    assert_eq!(c.value(), omega(2) + omega(4) * q(2) + omega(3) * q(2) - frac(1, 12));
    for cyc in [a, b, c] {
        assert!(cyc.chain.is_cycle());
        assert_eq!(c_of_cycle(&cyc.chain, Order::Forward).unwrap(), cyc.value());
    }
}

#[test]
fn spec_b_needs_free_diagonals() {
    let r = spec_b(&tetra(), 0, 1);
    assert!(matches!(r, Err(Gamma2Error::NotApplicable(_))));
}

#[test]
fn zero_chain() {
    let d = decompose_cycle(&Gamma2Chain::new(), Order::Forward).unwrap();
    assert!(d.terms.is_empty());
    assert_eq!(c_of_cycle(&Gamma2Chain::new(), Order::Reverse).unwrap(), q(0));
}

#[test]
fn open_chain_is_rejected() {
    let l = tetra();
    let mv = &enumerate_moves(&l)[0];
    let mut z = Gamma2Chain::new();
    z.add_move(&l, mv, &q(1));
    assert!(matches!(decompose_cycle(&z, Order::Forward), Err(Gamma2Error::NotACycle)));
}

#[test]
fn chain_json_round_trip() {
    let l = oriented(fixtures::icosahedron());
    let c = spec_c(&l, 0, 1).unwrap();
    let z = c.chain.scale(&frac(3, 7));
    let text = serde_json::to_string(&z.to_entries()).unwrap();
    let back: Vec<ChainEntry> = serde_json::from_str(&text).unwrap();
    assert_eq!(Gamma2Chain::from_entries(&back).unwrap(), z);
}

/// Chain transported along orientation reversal of every sphere.
fn mirrored(z: &Gamma2Chain) -> Gamma2Chain {
    let mut out = Gamma2Chain::new();
    for (e, c) in z.terms() {
        let (m, sign) = mirror_edge(e);
        out.add_edge(m, c * q(sign as i64));
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn elementary_cycles_close_and_agree_with_decomposition(seed in any::<u64>(), steps in 0usize..25) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let l = random_sphere(steps, 9, &mut rng);
        let moves = enumerate_moves(&l);
        for (i, a) in moves.iter().enumerate() {
            for b in &moves[i + 1..] {
                match commutation_cycle(&l, &a.sigma, &b.sigma) {
                    Ok(_) | Err(Gamma2Error::NotApplicable(_)) => {}
                    Err(e) => prop_assert!(false, "{:?} {:?}: {}", a, b, e),
                }
            }
        }
        let all = all_elementary(&l);
        for c in &all {
            prop_assert!(c.chain.is_cycle());
            prop_assert!(closes(c));
        }
        for c in all.iter().take(6) {
            prop_assert_eq!(c_of_cycle(&c.chain, Order::Forward).unwrap(), c.value());
        }
    }

    #[test]
    fn reversal_negates_value(seed in any::<u64>(), steps in 0usize..25) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let l = random_sphere(steps, 9, &mut rng);
        let rev = l.reversed();
        let moves = enumerate_moves(&l);
        for (i, a) in moves.iter().enumerate().take(6) {
            for b in &moves[i + 1..] {
                let (Ok(c), Ok(m)) = (commutation_cycle(&l, &a.sigma, &b.sigma), commutation_cycle(&rev, &a.sigma, &b.sigma)) else {
                    continue;
                };
                prop_assert_eq!(mirrored(&c.chain), m.chain.clone());
                prop_assert_eq!(m.value(), -c.value());
            }
        }
        for c in spec_c_cycles(&l).iter().chain(spec_a_cycles(&l).iter()).take(4) {
            let (zm, _) = walk(&rev, &c.moves).unwrap();
            prop_assert_eq!(&zm, &mirrored(&c.chain));
            prop_assert_eq!(c_of_cycle(&zm, Order::Forward).unwrap(), -c.value());
        }
    }

    #[test]
    fn decomposition_is_order_independent(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (start, moves) = random_loop(14, 54, &mut rng);
        let z = loop_chain(&start, &moves);
        let f = decompose_cycle(&z, Order::Forward).unwrap();
        let r = decompose_cycle(&z, Order::Reverse).unwrap();
        prop_assert_eq!(f.chain(), z.clone());
        prop_assert_eq!(r.chain(), z);
        prop_assert_eq!(f.c(), r.c());
    }
}
