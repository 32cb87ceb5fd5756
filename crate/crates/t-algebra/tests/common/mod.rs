#![allow(dead_code)]

use pachner_engine::{apply_move, enumerate_moves};
use rand::Rng;
use simplicial_core::{orient, Complex, OrientedComplex};
use t_algebra::chain::SphereClass;
use t_algebra::rational::q;
use t_algebra::{sphere_class, Q};

/// A random oriented `n`-sphere: a random walk of moves from the simplex boundary.
pub fn random_sphere<R: Rng>(n: usize, steps: usize, rng: &mut R) -> OrientedComplex {
    let mut k = orient(&Complex::simplex_boundary(n + 1)).unwrap();
    for _ in 0..steps {
        let ms = enumerate_moves(&k);
        // bias away from insertions so spheres stay small
        let pick = &ms[rng.gen_range(0..ms.len())];
        if pick.is_insertion() && k.num_vertices() > n + 5 && rng.gen_bool(0.7) {
            continue;
        }
        k = apply_move(&k, pick).unwrap();
    }
    if rng.gen_bool(0.5) {
        k.reversed()
    } else {
        k
    }
}

/// An equivariant test cochain: a hash of the class, odd under reversal.
pub fn hashed(l: &OrientedComplex) -> Q {
    match sphere_class(l) {
        SphereClass::Chiral { key, sign } => {
            let mut h: u64 = 0xcbf29ce484222325;
            for b in key {
                h ^= b as u64;
                h = h.wrapping_mul(0x100000001b3);
            }
            let v = q((h % 11) as i64 - 5);
            if sign > 0 {
                v
            } else {
                -v
            }
        }
        SphereClass::Achiral { .. } => q(0),
    }
}
