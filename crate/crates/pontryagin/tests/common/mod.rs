#![allow(dead_code)]

use std::collections::BTreeMap;

use pachner_engine::{apply_move, enumerate_moves};
use rand::Rng;
use simplicial_core::{orient, Complex, OrientedComplex};
use t_algebra::{SimplicialChain, Q};

pub const BUDGET: usize = 20_000;

pub fn oriented(f: Vec<Vec<u32>>) -> OrientedComplex {
    orient(&Complex::from_facets(f).unwrap()).unwrap()
}

pub fn facets_of(k: &OrientedComplex) -> Vec<Vec<u32>> {
    k.facets().iter().map(|f| f.vertices().to_vec()).collect()
}

pub fn signs_of(k: &OrientedComplex) -> Vec<i64> {
    k.signs().iter().map(|&s| s as i64).collect()
}

/// CP²₉ oriented so that the oracle signature is `+1`.
pub fn cp2() -> OrientedComplex {
    let k = oriented(test_oracles::fixtures::cp2_9());
    if test_oracles::linalg::signature_rank_one(&facets_of(&k), &signs_of(&k)) > 0 {
        k
    } else {
        k.reversed()
    }
}

pub fn to_oracle(c: &SimplicialChain) -> BTreeMap<Vec<u32>, Q> {
    c.terms().iter().map(|(s, q)| (s.vertices().to_vec(), q.clone())).collect()
}

/// A random oriented `n`-sphere reached by moves from the simplex boundary.
pub fn random_sphere<R: Rng>(n: usize, steps: usize, max_vertices: usize, rng: &mut R) -> OrientedComplex {
    let mut k = orient(&Complex::simplex_boundary(n + 1)).unwrap();
    for _ in 0..steps {
        let ms = enumerate_moves(&k);
        let mv = &ms[rng.gen_range(0..ms.len())];
        if mv.is_insertion() && k.num_vertices() >= max_vertices {
            continue;
        }
        k = apply_move(&k, mv).unwrap();
    }
    k
}
