//! Simplicial chains dual to the first Pontryagin class.

use std::collections::BTreeMap;

use gamma2::{c_of_cycle, Gamma2Chain, Order};
use num_traits::Zero;
use pachner_engine::reduce_to_boundary;
use rayon::prelude::*;
use simplicial_core::{OrientedComplex, Simplex};
use t_algebra::rational::q;
use t_algebra::{SimplicialChain, Q};

use crate::error::PontryaginError;
use crate::local::{eta_chain, local_f, LAMBDA};
use crate::xi::XiCache;

fn codim_faces(k: &OrientedComplex, codim: isize) -> Result<Vec<Simplex>, PontryaginError> {
    let m = k.dim();
    if m < 4 {
        return Err(PontryaginError::Precondition(format!("dimension at least 4, got {m}")));
    }
    Ok(k.complex().faces_of_dim(m - codim))
}

fn checked(chain: SimplicialChain) -> Result<SimplicialChain, PontryaginError> {
    if chain.degree > 0 && !chain.boundary().is_zero() {
        return Err(PontryaginError::NotACycle("dual chain".into()));
    }
    Ok(chain)
}

/// `Σ f(⟨link σ⟩) σ` over simplices of codimension 4.
pub fn p1_dual_local(k: &OrientedComplex, budget: usize, seed: u64, cache: &XiCache) -> Result<SimplicialChain, PontryaginError> {
    let faces = codim_faces(k, 4)?;
    let values: Vec<(Simplex, Q)> = faces
        .par_iter()
        .map(|s| Ok((s.clone(), local_f(&k.link(s)?, budget, seed, cache)?)))
        .collect::<Result<_, PontryaginError>>()?;
    let mut out = SimplicialChain::new(k.dim() - 4);
    for (s, v) in values {
        out.add(s, v);
    }
    checked(out)
}

/// Moves from the tetrahedron boundary to an oriented 2-sphere and to its
/// reversal, as chains.
fn path_chains(l: &OrientedComplex, budget: usize, seed: u64) -> Result<[Gamma2Chain; 2], PontryaginError> {
    let seq = reduce_to_boundary(l, budget, seed)?;
    let mut out = [Gamma2Chain::new(), Gamma2Chain::new()];
    for (p, start) in out.iter_mut().zip([l.clone(), l.reversed()]) {
        let states = seq.states(&start)?;
        for (host, mv) in states.iter().zip(&seq.moves) {
            p.add_move(host, mv, &q(-1));
        }
    }
    Ok(out)
}

/// The same class without `ξ`: each codimension-3 link gets one reduction
/// path, shared by all codimension-4 simplices below it.
pub fn p1_dual_direct(k: &OrientedComplex, budget: usize, seed: u64) -> Result<SimplicialChain, PontryaginError> {
    let tris = codim_faces(k, 3)?;
    let paths: BTreeMap<Simplex, (OrientedComplex, [Gamma2Chain; 2])> = tris
        .par_iter()
        .map(|t| {
            let lk = k.link(t)?;
            let p = path_chains(&lk, budget, seed)?;
            Ok((t.clone(), (lk, p)))
        })
        .collect::<Result<_, PontryaginError>>()?;
    let faces = codim_faces(k, 4)?;
    let values: Vec<(Simplex, Q)> = faces
        .par_iter()
        .map(|s| {
            let l = k.link(s)?;
            let mut zeta = eta_chain(&l, budget, seed)?;
            for &v in l.vertices() {
                let lk = l.link(&Simplex::vertex(v))?;
                let (ref_lk, p) = &paths[&s.with(v)];
                if &lk == ref_lk {
                    zeta = zeta.sub(&p[0]);
                } else if lk == ref_lk.reversed() {
                    zeta = zeta.sub(&p[1]);
                } else {
                    return Err(PontryaginError::Precondition("links of links agree with links up to sign".into()));
                }
            }
            if !zeta.is_cycle() {
                return Err(PontryaginError::NotACycle(format!("zeta at {s:?}")));
            }
            Ok((s.clone(), c_of_cycle(&zeta, Order::Forward)? * q(LAMBDA)))
        })
        .collect::<Result<_, PontryaginError>>()?;
    let mut out = SimplicialChain::new(k.dim() - 4);
    for (s, v) in values {
        out.add(s, v);
    }
    checked(out)
}

/// `⟨p₁, [K]⟩` for a connected oriented 4-manifold.
pub fn p1_number(k: &OrientedComplex, budget: usize, seed: u64, cache: &XiCache) -> Result<Q, PontryaginError> {
    if k.dim() != 4 {
        return Err(PontryaginError::Precondition(format!("a 4-manifold, got dimension {}", k.dim())));
    }
    if !k.complex().is_connected() {
        return Err(PontryaginError::Precondition("a connected manifold".into()));
    }
    let z = p1_dual_local(k, budget, seed, cache)?;
    Ok(z.terms().values().fold(Q::zero(), |a, b| a + b))
}
