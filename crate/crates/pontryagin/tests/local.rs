mod common;

use common::*;
use gamma2::{decompose_cycle, Order};
use pontryagin::{local_f, zeta_chain, XiCache};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use simplicial_core::{orient, Complex, Simplex};
use t_algebra::rational::{frac, q};
use test_oracles::fixtures;
use test_oracles::iso::{find_isomorphism, signed};

#[test]
fn simplex_boundary_is_zero() {
    let l = orient(&Complex::simplex_boundary(4)).unwrap();
    assert_eq!(local_f(&l, BUDGET, 0, &XiCache::new()).unwrap(), q(0));
}

#[test]
fn achiral_spheres_are_zero() {
    let cache = XiCache::new();
    for f in [fixtures::cross_polytope(4), fixtures::simplex_boundary(4)] {
        let l = oriented(f);
        let s = signed(&facets_of(&l), &signs_of(&l));
        assert!(find_isomorphism(&s, &s, true, -1).is_some());
        assert_eq!(local_f(&l, BUDGET, 1, &cache).unwrap(), q(0));
    }
}

#[test]
fn cp2_vertex_links_agree_across_seeds() {
    let k = cp2();
    let cache = XiCache::new();
    for &v in k.vertices() {
        let l = k.link(&Simplex::vertex(v)).unwrap();
        assert_eq!(l.num_vertices(), 8);
        let vals: Vec<_> = (0..5).map(|s| local_f(&l, BUDGET, 100 + s, &cache).unwrap()).collect();
        assert!(vals.iter().all(|x| *x == vals[0]));
        assert_eq!(vals[0], frac(1, 3));
    }
}

#[test]
fn reversal_and_seed_independence() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let cache = XiCache::new();
    for _ in 0..10 {
        let l = random_sphere(3, 14, 8, &mut rng);
        let a = local_f(&l, BUDGET, 1, &cache).unwrap();
        for s in 2..6 {
            assert_eq!(local_f(&l, BUDGET, s, &cache).unwrap(), a);
        }
        assert_eq!(local_f(&l.reversed(), BUDGET, 7, &cache).unwrap(), -a);
    }
}

#[test]
fn zeta_of_six_vertex_sphere_decomposes() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let cache = XiCache::new();
    let mut done = 0;
    while done < 3 {
        let l = random_sphere(3, 6, 6, &mut rng);
        if l.num_vertices() != 6 {
            continue;
        }
        let z = zeta_chain(&l, BUDGET, 3, &cache).unwrap();
        for order in [Order::Forward, Order::Reverse] {
            let d = decompose_cycle(&z, order).unwrap();
            assert_eq!(d.chain(), z);
        }
        done += 1;
    }
}

#[test]
fn wrong_dimension_is_rejected() {
    let l = orient(&Complex::simplex_boundary(3)).unwrap();
    assert!(local_f(&l, BUDGET, 0, &XiCache::new()).is_err());
}
