//! Rational simplicial chains and the chain `f♯(K)`.

use std::collections::BTreeMap;

use num_traits::Zero;
use simplicial_core::{permutation_sign, OrientedComplex, Simplex, Vertex};

use crate::cochain::LocalCochain;
use crate::error::AlgebraError;
use crate::rational::Q;

/// Coefficients on simplices, each oriented by increasing vertex order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SimplicialChain {
    pub degree: isize,
    terms: BTreeMap<Simplex, Q>,
}

impl SimplicialChain {
    pub fn new(degree: isize) -> Self {
        SimplicialChain { degree, terms: BTreeMap::new() }
    }

    pub fn terms(&self) -> &BTreeMap<Simplex, Q> {
        &self.terms
    }

    /// Adds `c` times the simplex oriented by the sequence `seq`.
    pub fn add_oriented(&mut self, seq: &[Vertex], c: &Q) {
        let s = Simplex::new(seq.iter().copied()).expect("distinct vertices");
        let v = if permutation_sign(seq) > 0 { c.clone() } else { -c.clone() };
        self.add(s, v);
    }

    pub fn add(&mut self, s: Simplex, c: Q) {
        assert_eq!(s.dim(), self.degree);
        let e = self.terms.entry(s.clone()).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&s);
        }
    }

    /// Coefficient of the simplex oriented by `seq`.
    pub fn coefficient(&self, seq: &[Vertex]) -> Q {
        let s = Simplex::new(seq.iter().copied()).expect("distinct vertices");
        let c = self.terms.get(&s).cloned().unwrap_or_else(Q::zero);
        if permutation_sign(seq) > 0 {
            c
        } else {
            -c
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total(&self) -> Q {
        self.terms.values().fold(Q::zero(), |a, b| a + b)
    }

    pub fn boundary(&self) -> SimplicialChain {
        let mut out = SimplicialChain::new(self.degree - 1);
        if self.degree <= 0 {
            return out;
        }
        for (s, c) in &self.terms {
            for (i, f) in s.boundary_faces().enumerate() {
                out.add(f, if i % 2 == 0 { c.clone() } else { -c.clone() });
            }
        }
        out
    }

    pub fn sub(&self, other: &SimplicialChain) -> SimplicialChain {
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add(s.clone(), -c.clone());
        }
        out
    }

    /// Restriction to simplices inside a vertex subset.
    pub fn restrict(&self, vs: &[Vertex]) -> SimplicialChain {
        let mut out = SimplicialChain::new(self.degree);
        for (s, c) in &self.terms {
            if s.vertices().iter().all(|v| vs.contains(v)) {
                out.add(s.clone(), c.clone());
            }
        }
        out
    }
}

/// `Σ f(⟨link σ⟩) σ` over simplices of dimension `m - n`, for any
/// evaluator `f` on oriented `(n - 1)`-spheres.
pub fn f_sharp_with<F>(grade: usize, f: F, k: &OrientedComplex) -> Result<SimplicialChain, AlgebraError>
where
    F: Fn(&OrientedComplex) -> Q,
{
    let m = k.dim();
    if m < grade as isize {
        return Err(AlgebraError::DimensionTooSmall { manifold: m, grade });
    }
    let deg = m - grade as isize;
    let mut out = SimplicialChain::new(deg);
    for s in k.complex().faces_of_dim(deg) {
        let c = f(&k.link(&s)?);
        out.add(s, c);
    }
    Ok(out)
}

pub fn f_sharp(f: &LocalCochain, k: &OrientedComplex) -> Result<SimplicialChain, AlgebraError> {
    f_sharp_with(f.grade, |l| f.value(l), k)
}
