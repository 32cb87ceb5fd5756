#![allow(dead_code)]

use gamma2::{sphere_complexity, walk, Gamma2Chain};
use pachner_engine::{apply_move, enumerate_moves, reduce_to_boundary, BistellarMove};
use rand::Rng;
use simplicial_core::{orient, Complex, OrientedComplex};

pub fn tetra() -> OrientedComplex {
    orient(&Complex::simplex_boundary(3)).unwrap()
}

/// A random walk from the tetrahedron boundary that stays at complexity at
/// most `max_sixths`, closed up by a reduction back to the tetrahedron.
pub fn random_loop<R: Rng>(steps: usize, max_sixths: u32, rng: &mut R) -> (OrientedComplex, Vec<BistellarMove>) {
    let start = tetra();
    let mut cur = start.clone();
    let mut moves = Vec::new();
    for _ in 0..steps {
        let ms = enumerate_moves(&cur);
        let mv = ms[rng.gen_range(0..ms.len())].clone();
        let next = apply_move(&cur, &mv).unwrap();
        if sphere_complexity(&next).sixths() > max_sixths.saturating_sub(1) {
            continue;
        }
        moves.push(mv);
        cur = next;
    }
    let back = reduce_to_boundary(&cur, 1000, rng.gen()).unwrap();
    moves.extend(back.moves);
    (start, moves)
}

pub fn loop_chain(start: &OrientedComplex, moves: &[BistellarMove]) -> Gamma2Chain {
    walk(start, moves).unwrap().0
}

pub fn oriented(f: Vec<Vec<u32>>) -> OrientedComplex {
    orient(&Complex::from_facets(f).unwrap()).unwrap()
}

pub fn facets_of(k: &OrientedComplex) -> Vec<Vec<u32>> {
    k.facets().iter().map(|f| f.vertices().to_vec()).collect()
}

/// Oracle: oriented isomorphism by brute-force search.
pub fn same_oriented(a: &OrientedComplex, b: &OrientedComplex) -> bool {
    use test_oracles::iso::{find_isomorphism, signed};
    let sa = signed(&facets_of(a), &a.signs().iter().map(|&s| s as i64).collect::<Vec<_>>());
    let sb = signed(&facets_of(b), &b.signs().iter().map(|&s| s as i64).collect::<Vec<_>>());
    find_isomorphism(&sa, &sb, true, 1).is_some()
}

/// Oracle: complexity in sixths from vertex degrees.
pub fn oracle_sixths(k: &OrientedComplex) -> u32 {
    let f = facets_of(k);
    let verts = test_oracles::vertex_set(&f);
    let min = verts.iter().map(|v| f.iter().filter(|t| t.contains(v)).count()).min().unwrap();
    6 * verts.len() as u32 + if min <= 3 { 0 } else if min == 4 { 2 } else { 4 }
}

/// A random 2-sphere reached by `steps` moves from the tetrahedron boundary.
pub fn random_sphere<R: Rng>(steps: usize, max_vertices: usize, rng: &mut R) -> OrientedComplex {
    let mut k = tetra();
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
