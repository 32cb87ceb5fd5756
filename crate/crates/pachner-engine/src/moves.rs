//! Bistellar moves: enumeration, application, inverses and induced moves.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use simplicial_core::{OrientedComplex, Simplex, Vertex};

use crate::error::MoveError;

/// Replace the full subcomplex `sigma * ∂tau` by `∂sigma * tau`.
///
/// For a vertex insertion `tau` is the single new vertex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BistellarMove {
    pub sigma: Simplex,
    pub tau: Simplex,
}

impl BistellarMove {
    pub fn new(sigma: Simplex, tau: Simplex) -> Self {
        BistellarMove { sigma, tau }
    }

    pub fn inverse(&self) -> BistellarMove {
        BistellarMove { sigma: self.tau.clone(), tau: self.sigma.clone() }
    }

    /// `dim sigma`.
    pub fn k(&self) -> usize {
        self.sigma.len() - 1
    }

    pub fn is_insertion(&self) -> bool {
        self.tau.len() == 1
    }

    pub fn is_removal(&self) -> bool {
        self.sigma.len() == 1
    }

    /// Vertices that neither appear nor disappear: `V(∂sigma * ∂tau)`.
    pub fn persistent_vertices(&self) -> Vec<Vertex> {
        let mut out = Vec::new();
        if self.sigma.len() >= 2 {
            out.extend_from_slice(self.sigma.vertices());
        }
        if self.tau.len() >= 2 {
            out.extend_from_slice(self.tau.vertices());
        }
        out.sort_unstable();
        out
    }
}

/// Facets containing each non-empty face.
fn cofacets(k: &OrientedComplex) -> BTreeMap<Simplex, Vec<usize>> {
    let mut map: BTreeMap<Simplex, Vec<usize>> = BTreeMap::new();
    for (i, f) in k.facets().iter().enumerate() {
        for s in f.faces().filter(|s| !s.is_empty()) {
            map.entry(s).or_default().push(i);
        }
    }
    map
}

/// Every applicable move on `k`, sorted by `sigma`. Insertions use the
/// smallest unused vertex id.
pub fn enumerate_moves(k: &OrientedComplex) -> Vec<BistellarMove> {
    let n = k.dim();
    if n < 0 {
        return Vec::new();
    }
    let n = n as usize;
    let fresh = k.complex().smallest_unused_vertex();
    let mut out = Vec::new();
    for (sigma, fs) in cofacets(k) {
        if sigma.len() == n + 1 {
            out.push(BistellarMove::new(sigma, Simplex::vertex(fresh)));
            continue;
        }
        let size = n + 2 - sigma.len();
        if fs.len() != size {
            continue;
        }
        let mut tau = Simplex::empty();
        for &i in &fs {
            tau = tau.union(&k.facets()[i].difference(&sigma));
        }
        if tau.len() == size && !k.complex().contains(&tau) {
            out.push(BistellarMove::new(sigma, tau));
        }
    }
    out
}

/// Checks applicability of `mv` on `k`.
pub fn check_move(k: &OrientedComplex, mv: &BistellarMove) -> Result<(), MoveError> {
    let n = k.dim();
    let bad = |m: String| Err(MoveError::InvalidMove(m));
    if n < 0 || mv.sigma.len() + mv.tau.len() != n as usize + 2 {
        return bad(format!("sizes of {:?} and {:?} do not fit dimension {n}", mv.sigma, mv.tau));
    }
    if !mv.sigma.is_disjoint(&mv.tau) {
        return bad("sigma and tau overlap".into());
    }
    if !k.complex().contains(&mv.sigma) {
        return bad(format!("{:?} is not a face", mv.sigma));
    }
    if k.complex().contains(&mv.tau) {
        return bad(format!("{:?} is already a face", mv.tau));
    }
    let containing: Vec<&Simplex> = k.complex().facets_containing(&mv.sigma).collect();
    if containing.len() != mv.tau.len() {
        return bad(format!("link of {:?} is not the boundary of {:?}", mv.sigma, mv.tau));
    }
    for f in containing {
        let rest = f.difference(&mv.sigma);
        if !(rest.is_face_of(&mv.tau) && rest.len() + 1 == mv.tau.len()) {
            return bad(format!("link of {:?} is not the boundary of {:?}", mv.sigma, mv.tau));
        }
    }
    Ok(())
}

/// Applies `mv`. Unchanged facets keep their signs; the new facets are
/// oriented so that the result is coherent.
pub fn apply_move(k: &OrientedComplex, mv: &BistellarMove) -> Result<OrientedComplex, MoveError> {
    check_move(k, mv)?;
    let whole = mv.sigma.union(&mv.tau);
    let sign_at = |v: Vertex| if whole.position(v).unwrap() % 2 == 0 { 1i8 } else { -1 };
    let mut eps = 0i8;
    let mut pairs = Vec::with_capacity(k.facets().len() + mv.sigma.len());
    for (f, s) in k.signed_facets() {
        if mv.sigma.is_face_of(f) {
            let y = mv.tau.difference(f).vertices()[0];
            let e = s * sign_at(y);
            if eps != 0 && e != eps {
                return Err(MoveError::InvalidMove("host orientation is incoherent".into()));
            }
            eps = e;
        } else {
            pairs.push((f.clone(), s));
        }
    }
    for &x in mv.sigma.vertices() {
        pairs.push((whole.without(x), -eps * sign_at(x)));
    }
    Ok(OrientedComplex::from_signed_facets_unchecked(pairs))
}

/// A move induced on a vertex link.
#[derive(Clone, Debug)]
pub struct InducedMove {
    pub vertex: Vertex,
    /// The oriented link of `vertex` in the host.
    pub link: OrientedComplex,
    pub mv: BistellarMove,
}

/// For each `v` in `U(β)`, the move `β_v` on `link v`.
pub fn induced_vertex_moves(k: &OrientedComplex, mv: &BistellarMove) -> Vec<InducedMove> {
    mv.persistent_vertices()
        .into_iter()
        .map(|v| {
            let link = k.link(&Simplex::vertex(v)).expect("vertex of host");
            let induced = if mv.sigma.contains(v) {
                BistellarMove::new(mv.sigma.without(v), mv.tau.clone())
            } else {
                BistellarMove::new(mv.sigma.clone(), mv.tau.without(v))
            };
            InducedMove { vertex: v, link, mv: induced }
        })
        .collect()
}
