//! The sphere `L_β` of a move, the homotopy `s` and the edge differentials.

use num_traits::Zero;
use pachner_engine::{apply_move, induced_vertex_moves, is_combinatorial_sphere, BistellarMove};
use simplicial_core::{orient, Complex, OrientedComplex, Simplex, Vertex};

use crate::error::AlgebraError;
use crate::rational::Q;

/// `L_β` together with its two cone vertices.
#[derive(Clone, Debug)]
pub struct MoveSphere {
    pub sphere: OrientedComplex,
    /// Cone vertex over the initial sphere; its link is `-L1`.
    pub u1: Vertex,
    /// Cone vertex over the final sphere; its link is `+L2`.
    pub u2: Vertex,
}

/// Builds `L_β = (u1 * L1) ∪ (u2 * L2) ∪ (σ ∪ τ)` oriented so that the link
/// of `u2` is `+L2`, and checks that the link of `u1` is `-L1`.
pub fn sphere_from_move(l1: &OrientedComplex, mv: &BistellarMove) -> Result<MoveSphere, AlgebraError> {
    let l2 = apply_move(l1, mv)?;
    let top = l1.vertices().iter().chain(l2.vertices()).copied().max().unwrap_or(0);
    let (u1, u2) = (top + 1, top + 2);
    let mut facets: Vec<Simplex> = l1.facets().iter().map(|f| f.with(u1)).collect();
    facets.extend(l2.facets().iter().map(|f| f.with(u2)));
    facets.push(mv.sigma.union(&mv.tau));
    let k = Complex::from_simplices(facets)?;
    let fail = |m: &str| AlgebraError::SphereCheckFailed(m.to_string());
    let mut oc = orient(&k).map_err(|e| fail(&format!("L_beta is not an oriented pseudomanifold: {e}")))?;
    if oc.link(&Simplex::vertex(u2))? != l2 {
        oc = oc.reversed();
    }
    if oc.link(&Simplex::vertex(u2))? != l2 {
        return Err(fail("link of u2 is not L2"));
    }
    if oc.link(&Simplex::vertex(u1))? != l1.reversed() {
        return Err(fail("link of u1 is not -L1"));
    }
    if k.dim() <= 3 && !is_combinatorial_sphere(&k, 10_000, 0).is_yes() {
        return Err(fail("L_beta is not recognised as a sphere"));
    }
    Ok(MoveSphere { sphere: oc, u1, u2 })
}

/// `s(f)({β}) = (-1)^(n-1) f({L_β})` with `n = dim L_β`.
pub fn s_eval<F: Fn(&OrientedComplex) -> Q>(f: F, l1: &OrientedComplex, mv: &BistellarMove) -> Result<Q, AlgebraError> {
    let ms = sphere_from_move(l1, mv)?;
    let v = f(&ms.sphere);
    Ok(if ms.sphere.dim() % 2 == 1 { v } else { -v })
}

/// `(df)({β}) = f(L2) - f(L1)`.
pub fn d_eval<F: Fn(&OrientedComplex) -> Q>(f: F, l1: &OrientedComplex, mv: &BistellarMove) -> Result<Q, AlgebraError> {
    let l2 = apply_move(l1, mv)?;
    Ok(f(&l2) - f(l1))
}

/// Sign in `(δh)({β}) = (-1)^n Σ_{v ∈ U(β)} h({β_v})` for `h` on moves of
/// `n`-spheres. With it `d = δs - sδ` holds and `d` anticommutes with `δ`.
pub fn edge_delta_sign(n: usize) -> i8 {
    if n % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `(δh)({β})` for a move `β` of `(n+1)`-spheres and an evaluator `h` on
/// moves of their vertex links.
pub fn delta_edge_eval<H>(h: H, host: &OrientedComplex, mv: &BistellarMove) -> Q
where
    H: Fn(&OrientedComplex, &BistellarMove) -> Q,
{
    let n = (host.dim() - 1) as usize;
    let s: Q = induced_vertex_moves(host, mv)
        .iter()
        .map(|i| h(&i.link, &i.mv))
        .fold(Q::zero(), |a, b| a + b);
    if edge_delta_sign(n) > 0 {
        s
    } else {
        -s
    }
}
