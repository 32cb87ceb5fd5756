mod common;

use common::*;
use gamma2::cycles::{spec_a_cycles, spec_b_cycles, spec_c_cycles};
use gamma2::{commutation_cycle, ElementaryCycle, Gamma2Chain};
use pachner_engine::edge::{edge_key, EdgeClass};
use pachner_engine::{apply_move, enumerate_moves, BistellarMove};
use pontryagin::{h_value, XiCache, LAMBDA};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use simplicial_core::{orient, Complex, Simplex};
use t_algebra::rational::q;
use t_algebra::Q;

#[test]
fn h_is_odd_under_inversion() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let cache = XiCache::new();
    let mut sampled = 0;
    while sampled < 20 {
        let l = random_sphere(2, 20, 9, &mut rng);
        let ms = enumerate_moves(&l);
        let mv = &ms[sampled % ms.len()];
        if edge_key(&l, mv) == EdgeClass::Inessential {
            continue;
        }
        let after = apply_move(&l, mv).unwrap();
        let back = BistellarMove::new(mv.tau.clone(), mv.sigma.clone());
        assert_eq!(h_value(&after, &back, &cache).unwrap(), -h_value(&l, mv, &cache).unwrap());
        sampled += 1;
    }
}

#[test]
fn h_on_tetrahedron_subdivision() {
    let l = orient(&Complex::simplex_boundary(3)).unwrap();
    let mv = BistellarMove::new(Simplex::from_distinct([0, 1, 2]), Simplex::vertex(4));
    let cache = XiCache::new();
    let after = apply_move(&l, &mv).unwrap();
    let mut arg = Gamma2Chain::new();
    arg.add_move(&l, &mv, &q(1));
    let arg = arg.sub(&cache.xi(&after).unwrap());
    // the insertion and the removal back are one edge class
    assert!(arg.is_zero());
    assert_eq!(h_value(&l, &mv, &cache).unwrap(), q(0));
}

fn h_along(c: &ElementaryCycle, cache: &XiCache) -> Q {
    let mut cur = c.start.clone();
    let mut total = q(0);
    for mv in &c.moves {
        if edge_key(&cur, mv) != EdgeClass::Inessential {
            total += h_value(&cur, mv, cache).unwrap();
        }
        cur = apply_move(&cur, mv).unwrap();
    }
    total
}

#[test]
fn h_sums_to_c_on_elementary_cycles() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let cache = XiCache::new();
    for _ in 0..4 {
        let l = random_sphere(2, 25, 9, &mut rng);
        let ms = enumerate_moves(&l);
        let mut cycles: Vec<ElementaryCycle> = Vec::new();
        for (i, a) in ms.iter().enumerate().take(4) {
            for b in &ms[i + 1..] {
                cycles.extend(commutation_cycle(&l, &a.sigma, &b.sigma).ok());
            }
        }
        cycles.truncate(6);
        cycles.extend(spec_a_cycles(&l).into_iter().take(2));
        cycles.extend(spec_b_cycles(&l).into_iter().take(2));
        cycles.extend(spec_c_cycles(&l).into_iter().take(2));
        for c in &cycles {
            assert_eq!(h_along(c, &cache), c.value() * q(LAMBDA), "{} {:?}", c.kind, c.params);
        }
    }
}
