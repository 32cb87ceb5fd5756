//! Heuristic reduction of combinatorial spheres to the boundary of a simplex.

use std::collections::VecDeque;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use simplicial_core::{oriented_key, OrientedComplex, Simplex};

use crate::edge::sphere_complexity_sixths;
use crate::error::MoveError;
use crate::moves::{apply_move, enumerate_moves, BistellarMove};
use crate::sequence::MoveSequence;

const TABU: usize = 4;

/// True when `k` is the boundary of a simplex.
pub fn is_simplex_boundary(k: &OrientedComplex) -> bool {
    let n = k.dim();
    n >= 0 && k.num_vertices() == n as usize + 2 && k.facets().len() == n as usize + 2
}

/// Searches for moves taking `l` (in its own labels) to the boundary of a
/// simplex. Surfaces only use complexity-decreasing moves; in dimension 3
/// reducing moves are preferred, with random 2-3 moves to escape local minima.
/// The result depends only on `(l, budget, seed)` and is replayed before return.
pub fn reduce_to_boundary(l: &OrientedComplex, budget: usize, seed: u64) -> Result<MoveSequence, MoveError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cur = l.clone();
    let mut moves: Vec<BistellarMove> = Vec::new();
    let mut tabu: VecDeque<Simplex> = VecDeque::new();
    let mut best = cur.clone();
    while !is_simplex_boundary(&cur) {
        if moves.len() >= budget {
            return Err(MoveError::BudgetExhausted { budget, best: Box::new(best) });
        }
        let all = enumerate_moves(&cur);
        let mv = match cur.dim() {
            2 => pick_surface(&cur, &all, &mut rng)?,
            _ => pick_general(&all, &tabu, &mut rng)?,
        };
        cur = apply_move(&cur, &mv)?;
        tabu.push_back(mv.tau.clone());
        if tabu.len() > TABU {
            tabu.pop_front();
        }
        moves.push(mv);
        if (cur.num_vertices(), cur.facets().len()) < (best.num_vertices(), best.facets().len()) {
            best = cur.clone();
        }
    }
    let seq = MoveSequence { start_key: oriented_key(l), end_key: oriented_key(&cur), moves };
    seq.replay(l)?;
    Ok(seq)
}

fn choose<'a, R: Rng>(c: &[&'a BistellarMove], rng: &mut R) -> Option<&'a BistellarMove> {
    if c.is_empty() {
        None
    } else {
        Some(c[rng.gen_range(0..c.len())])
    }
}

fn pick_surface<R: Rng>(cur: &OrientedComplex, all: &[BistellarMove], rng: &mut R) -> Result<BistellarMove, MoveError> {
    let a = sphere_complexity_sixths(cur);
    let decreasing: Vec<&BistellarMove> = all
        .iter()
        .filter(|m| !m.is_insertion())
        .filter(|m| sphere_complexity_sixths(&apply_move(cur, m).unwrap()) < a)
        .collect();
    choose(&decreasing, rng)
        .cloned()
        .ok_or_else(|| MoveError::NotASphere("no complexity-decreasing move".into()))
}

fn pick_general<R: Rng>(all: &[BistellarMove], tabu: &VecDeque<Simplex>, rng: &mut R) -> Result<BistellarMove, MoveError> {
    let removals: Vec<&BistellarMove> = all.iter().filter(|m| m.is_removal()).collect();
    if let Some(m) = choose(&removals, rng) {
        return Ok(m.clone());
    }
    let allowed: Vec<&BistellarMove> = all.iter().filter(|m| !tabu.contains(&m.sigma)).collect();
    let reducing: Vec<&BistellarMove> = allowed.iter().copied().filter(|m| m.sigma.len() < m.tau.len()).collect();
    if let Some(m) = choose(&reducing, rng) {
        return Ok(m.clone());
    }
    let smallest = allowed
        .iter()
        .filter(|m| m.sigma.len() >= m.tau.len())
        .map(|m| m.sigma.len())
        .min();
    let Some(size) = smallest else {
        return Err(MoveError::NotASphere("no applicable move".into()));
    };
    let neutral: Vec<&BistellarMove> = allowed.iter().copied().filter(|m| m.sigma.len() == size).collect();
    Ok(choose(&neutral, rng).unwrap().clone())
}
