mod common;

use common::*;
use num_traits::Zero;
use pachner_engine::{apply_move, enumerate_moves, BistellarMove};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use simplicial_core::canonical::is_oriented_isomorphic;
use simplicial_core::{orient, Complex, OrientedComplex, Simplex};
use t_algebra::{s_eval, sphere_from_move, LocalCochain};
use test_oracles::fixtures;

fn oriented(f: Vec<Vec<u32>>) -> OrientedComplex {
    orient(&Complex::from_facets(f).unwrap()).unwrap()
}

fn simplex(v: &[u32]) -> Simplex {
    Simplex::new(v.iter().copied()).unwrap()
}

#[test]
fn subdividing_a_tetrahedron_face() {
    let l1 = oriented(fixtures::simplex_boundary(3));
    let mv = BistellarMove::new(simplex(&[0, 1, 2]), simplex(&[4]));
    let ms = sphere_from_move(&l1, &mv).unwrap();
    assert_eq!(ms.sphere.dim(), 3);
    assert_eq!(ms.sphere.num_vertices(), 7);
    let l2 = apply_move(&l1, &mv).unwrap();
    assert_eq!(l2.num_vertices(), 5);
    let lu1 = ms.sphere.link(&Simplex::vertex(ms.u1)).unwrap();
    let lu2 = ms.sphere.link(&Simplex::vertex(ms.u2)).unwrap();
    assert!(is_oriented_isomorphic(&lu1, &l1.reversed()));
    assert!(is_oriented_isomorphic(&lu2, &l2));
    assert_eq!(lu2, l2);
}

#[test]
fn flipping_an_octahedron_edge() {
    let l1 = oriented(fixtures::octahedron());
    let mv = BistellarMove::new(simplex(&[0, 2]), simplex(&[4, 5]));
    let ms = sphere_from_move(&l1, &mv).unwrap();
    assert_eq!(ms.sphere.dim(), 3);
    assert_eq!(ms.sphere.num_vertices(), 8);
}

#[test]
fn vertex_set_is_the_move_support_plus_two() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for i in 0..30 {
        let l = random_sphere(1 + i % 3, 5, &mut rng);
        let ms = enumerate_moves(&l);
        let mv = ms[rng.gen_range(0..ms.len())].clone();
        let l2 = apply_move(&l, &mv).unwrap();
        let sphere = sphere_from_move(&l, &mv).unwrap();
        let mut expect: Vec<u32> = l.vertices().iter().chain(l2.vertices()).copied().collect();
        expect.sort();
        expect.dedup();
        expect.push(sphere.u1);
        expect.push(sphere.u2);
        assert_eq!(sphere.sphere.vertices(), &expect[..]);
    }
}

#[test]
fn s_of_zero_is_zero() {
    let l1 = oriented(fixtures::octahedron());
    let mv = BistellarMove::new(simplex(&[0, 2]), simplex(&[4, 5]));
    let f = LocalCochain::new(4);
    assert!(s_eval(|x| f.value(x), &l1, &mv).unwrap().is_zero());
}

#[test]
fn s_is_odd_under_inverting_the_move() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    let mut nonzero = 0;
    for i in 0..30 {
        let n = 2 + i % 2;
        let l = random_sphere(n, 6, &mut rng);
        let ms = enumerate_moves(&l);
        let mv = ms[rng.gen_range(0..ms.len())].clone();
        let l2 = apply_move(&l, &mv).unwrap();
        let a = s_eval(hashed, &l, &mv).unwrap();
        let b = s_eval(hashed, &l2, &mv.inverse()).unwrap();
        assert_eq!(b, -a.clone(), "sample {i}");
        if !a.is_zero() {
            nonzero += 1;
        }
    }
    assert!(nonzero > 0);
}
