//! The local formula: `f(L) = ⟨c, ζ⟩` with `ζ = η - Σ_v ξ_{lk v}`, where `η`
//! collects the moves induced on vertex links along a path from the simplex
//! boundary to `L`.

use gamma2::{c_of_cycle, Gamma2Chain, Order};
use pachner_engine::{induced_vertex_moves, reduce_to_boundary};
use simplicial_core::{OrientedComplex, Simplex};
use t_algebra::rational::q;
use t_algebra::Q;

use crate::error::PontryaginError;
use crate::xi::XiCache;

/// Overall sign of `f`. The tables fix `c` up to mirror image; this makes
/// `p₁ = 3` on the 9-vertex `CP²` oriented with signature `+1`.
pub const LAMBDA: i64 = -1;

/// Induced moves along the inverted reduction of a 3-sphere `l`.
pub fn eta_chain(l: &OrientedComplex, budget: usize, seed: u64) -> Result<Gamma2Chain, PontryaginError> {
    let seq = reduce_to_boundary(l, budget, seed)?;
    let states = seq.states(l)?;
    let mut eta = Gamma2Chain::new();
    let minus = q(-1);
    for (host, mv) in states.iter().zip(&seq.moves) {
        for im in induced_vertex_moves(host, mv) {
            eta.add_move(&im.link, &im.mv, &minus);
        }
    }
    Ok(eta)
}

/// `ζ` for an oriented 3-sphere: a cycle of the move graph of 2-spheres.
pub fn zeta_chain(l: &OrientedComplex, budget: usize, seed: u64, cache: &XiCache) -> Result<Gamma2Chain, PontryaginError> {
    if l.dim() != 3 {
        return Err(PontryaginError::Precondition(format!("a 3-sphere, got dimension {}", l.dim())));
    }
    let mut zeta = eta_chain(l, budget, seed)?;
    for &v in l.vertices() {
        let lk = l.link(&Simplex::vertex(v))?;
        zeta = zeta.sub(&*cache.xi(&lk)?);
    }
    if !zeta.is_cycle() {
        return Err(PontryaginError::NotACycle("zeta of a 3-sphere".into()));
    }
    Ok(zeta)
}

/// `f(⟨L⟩)` for an oriented combinatorial 3-sphere.
pub fn local_f(l: &OrientedComplex, budget: usize, seed: u64, cache: &XiCache) -> Result<Q, PontryaginError> {
    let zeta = zeta_chain(l, budget, seed, cache)?;
    Ok(c_of_cycle(&zeta, Order::Forward)? * q(LAMBDA))
}

/// `h({β}) = ⟨c, {β} + ξ_{L} - ξ_{β(L)}⟩` for a move `β` on a 2-sphere `L`.
pub fn h_value(l: &OrientedComplex, mv: &pachner_engine::BistellarMove, cache: &XiCache) -> Result<Q, PontryaginError> {
    let mut z = Gamma2Chain::new();
    let after = z.add_move(l, mv, &q(1));
    let z = z.add(&*cache.xi(l)?).sub(&*cache.xi(&after)?);
    if !z.is_cycle() {
        return Err(PontryaginError::NotACycle("argument of h".into()));
    }
    Ok(c_of_cycle(&z, Order::Forward)? * q(LAMBDA))
}
