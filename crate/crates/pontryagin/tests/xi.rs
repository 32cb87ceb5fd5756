mod common;

use std::collections::BTreeMap;

use common::*;
use gamma2::Gamma2Chain;
use pachner_engine::edge::sphere_rank;
use pachner_engine::{apply_move, enumerate_moves};
use pontryagin::XiCache;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use simplicial_core::canonical::oriented_key_pair;
use simplicial_core::{orient, Complex, OrientedComplex};
use t_algebra::rational::q;
use t_algebra::Q;
use test_oracles::fixtures;

fn tetra() -> OrientedComplex {
    orient(&Complex::simplex_boundary(3)).unwrap()
}

fn expected_boundary(l: &OrientedComplex) -> BTreeMap<Vec<u8>, Q> {
    let mut m: BTreeMap<Vec<u8>, Q> = BTreeMap::new();
    *m.entry(oriented_key_pair(l).0).or_default() += q(1);
    *m.entry(oriented_key_pair(&tetra()).0).or_default() -= q(1);
    m.retain(|_, v| *v != q(0));
    m
}

/// Oracle: the recurrence, evaluated on cached values.
fn recurrence_holds(cache: &XiCache, l: &OrientedComplex) -> bool {
    if l.num_vertices() == 4 {
        return cache.xi(l).unwrap().is_zero();
    }
    let rank = sphere_rank(l);
    let mut sum = Gamma2Chain::new();
    let mut r = 0;
    for mv in enumerate_moves(l) {
        let next = apply_move(l, &mv).unwrap();
        if sphere_rank(&next) < rank {
            r += 1;
            sum = sum.add(&cache.xi(&next).unwrap());
            sum.add_move(l, &mv, &q(-1));
        }
    }
    *cache.xi(l).unwrap() == sum.scale(&(q(1) / q(r)))
}

#[test]
fn tetrahedron_is_zero() {
    assert!(XiCache::new().xi(&tetra()).unwrap().is_zero());
}

#[test]
fn five_vertex_sphere_is_one_removal() {
    let bipyramid = oriented(vec![
        vec![0, 1, 3],
        vec![1, 2, 3],
        vec![2, 0, 3],
        vec![0, 1, 4],
        vec![1, 2, 4],
        vec![2, 0, 4],
    ]);
    let xi = XiCache::new().xi(&bipyramid).unwrap();
    // both decreasing moves remove an apex; they are one edge class
    let mut removal = Gamma2Chain::new();
    let mv = enumerate_moves(&bipyramid).into_iter().find(|m| m.is_removal()).unwrap();
    removal.add_move(&bipyramid, &mv, &q(1));
    assert_eq!(xi.len(), 1);
    assert_eq!(*xi, removal.scale(&q(-1)));
}

#[test]
fn octahedron_boundary() {
    let oct = oriented(fixtures::octahedron());
    let cache = XiCache::new();
    assert_eq!(cache.xi(&oct).unwrap().boundary(), expected_boundary(&oct));
    assert!(recurrence_holds(&cache, &oct));
}

#[test]
fn cache_json_round_trip() {
    let cache = XiCache::new();
    cache.xi(&oriented(fixtures::icosahedron())).unwrap();
    let back = XiCache::from_json(&cache.to_json()).unwrap();
    assert_eq!(back.len(), cache.len());
    assert_eq!(back.to_json(), cache.to_json());
    assert!(XiCache::from_json("{\"00\": []}").is_err());
}

#[test]
fn wrong_dimension_is_rejected() {
    assert!(XiCache::new().xi(&orient(&Complex::simplex_boundary(4)).unwrap()).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]
    #[test]
    fn boundary_and_mirror(seed in any::<u64>(), steps in 0usize..30) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let l = random_sphere(2, steps, 10, &mut rng);
        let cache = XiCache::new();
        prop_assert_eq!(cache.xi(&l).unwrap().boundary(), expected_boundary(&l));
        let m = l.reversed();
        prop_assert_eq!(cache.xi(&m).unwrap().boundary(), expected_boundary(&m));
        prop_assert!(recurrence_holds(&cache, &l));
        prop_assert!(recurrence_holds(&cache, &m));
        prop_assert_eq!(cache.mirror_chain(&cache.xi(&l).unwrap()), (*cache.xi(&m).unwrap()).clone());
    }
}
