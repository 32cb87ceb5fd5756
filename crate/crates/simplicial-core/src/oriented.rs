use std::collections::{BTreeMap, VecDeque};

use crate::complex::{join_relabeling, Complex};
use crate::error::ComplexError;
use crate::simplex::{permutation_sign, Simplex, Vertex};

/// A closed pseudomanifold with a coherent sign on every facet.
///
/// The sign of a facet refers to its vertices listed in increasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedComplex {
    complex: Complex,
    signs: Vec<i8>,
}

impl OrientedComplex {
    /// Checks coherence of the given signs (aligned with `complex.facets()`).
    pub fn new(complex: Complex, signs: Vec<i8>) -> Result<Self, ComplexError> {
        if signs.len() != complex.facets().len() {
            return Err(ComplexError::BadOrientation(format!(
                "{} signs for {} facets",
                signs.len(),
                complex.facets().len()
            )));
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(ComplexError::BadOrientation("signs must be +1 or -1".into()));
        }
        if !complex.is_closed_pseudomanifold() {
            return Err(ComplexError::NotPseudomanifold(
                "orientation requires a closed pseudomanifold".into(),
            ));
        }
        let oc = OrientedComplex { complex, signs };
        if !oc.is_coherent() {
            return Err(ComplexError::BadOrientation("incoherent signs".into()));
        }
        Ok(oc)
    }

    /// Builds from (facet, sign) pairs without checking coherence.
    pub fn from_signed_facets_unchecked(pairs: Vec<(Simplex, i8)>) -> Self {
        let map: BTreeMap<Simplex, i8> = pairs.into_iter().collect();
        let complex = Complex::from_maximal(map.keys().cloned().collect());
        let signs = complex.facets().iter().map(|f| map[f]).collect();
        OrientedComplex { complex, signs }
    }

    pub fn from_signed_facets(pairs: Vec<(Simplex, i8)>) -> Result<Self, ComplexError> {
        let oc = Self::from_signed_facets_unchecked(pairs);
        Self::new(oc.complex, oc.signs)
    }

    /// Facets given as ordered vertex tuples; each tuple is positively oriented.
    pub fn from_ordered_facets<I, F>(facets: I) -> Result<Self, ComplexError>
    where
        I: IntoIterator<Item = F>,
        F: AsRef<[Vertex]>,
    {
        let mut pairs = Vec::new();
        for f in facets {
            let seq = f.as_ref();
            let s = Simplex::new(seq.iter().copied())?;
            pairs.push((s, permutation_sign(seq)));
        }
        Self::from_signed_facets(pairs)
    }

    pub fn complex(&self) -> &Complex {
        &self.complex
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn facets(&self) -> &[Simplex] {
        self.complex.facets()
    }

    pub fn dim(&self) -> isize {
        self.complex.dim()
    }

    pub fn vertices(&self) -> &[Vertex] {
        self.complex.vertices()
    }

    pub fn num_vertices(&self) -> usize {
        self.complex.num_vertices()
    }

    pub fn signed_facets(&self) -> impl Iterator<Item = (&Simplex, i8)> + '_ {
        self.complex.facets().iter().zip(self.signs.iter().copied())
    }

    pub fn sign_of(&self, facet: &Simplex) -> Option<i8> {
        self.complex
            .facets()
            .binary_search(facet)
            .ok()
            .map(|i| self.signs[i])
    }

    /// Sign of a facet written as the ordered tuple `seq`.
    pub fn ordered_sign(&self, seq: &[Vertex]) -> Option<i8> {
        let s = Simplex::new(seq.iter().copied()).ok()?;
        self.sign_of(&s).map(|e| e * permutation_sign(seq))
    }

    pub fn reversed(&self) -> OrientedComplex {
        OrientedComplex {
            complex: self.complex.clone(),
            signs: self.signs.iter().map(|s| -s).collect(),
        }
    }

    fn is_coherent(&self) -> bool {
        let mut seen: BTreeMap<Simplex, i8> = BTreeMap::new();
        for (f, s) in self.signed_facets() {
            for (i, r) in f.boundary_faces().enumerate() {
                let induced = if i % 2 == 0 { s } else { -s };
                if let Some(prev) = seen.insert(r, induced) {
                    if prev != -induced {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Oriented link of `s`, with `s` listed in increasing order.
    pub fn link(&self, s: &Simplex) -> Result<OrientedComplex, ComplexError> {
        self.link_ordered(s.vertices())
    }

    /// Oriented link of the simplex spanned by `seq` in the given vertex order.
    ///
    /// If the facet `seq ∪ λ` has sign `e` when written as `seq` followed by
    /// `λ` in increasing order, then `λ` gets sign `e` in the link.
    pub fn link_ordered(&self, seq: &[Vertex]) -> Result<OrientedComplex, ComplexError> {
        let s = Simplex::new(seq.iter().copied())?;
        if !self.complex.contains(&s) {
            return Err(ComplexError::SimplexNotInComplex(s));
        }
        let mut pairs = Vec::new();
        for (f, sign) in self.signed_facets() {
            if !s.is_face_of(f) {
                continue;
            }
            let lambda = f.difference(&s);
            let mut order: Vec<Vertex> = seq.to_vec();
            order.extend_from_slice(lambda.vertices());
            pairs.push((lambda, sign * permutation_sign(&order)));
        }
        Ok(OrientedComplex::from_signed_facets_unchecked(pairs))
    }

    pub fn relabel<F: Fn(Vertex) -> Vertex>(&self, f: F) -> OrientedComplex {
        let pairs = self
            .signed_facets()
            .map(|(s, e)| {
                let seq: Vec<Vertex> = s.vertices().iter().map(|&v| f(v)).collect();
                (Simplex::from_distinct(seq.iter().copied()), e * permutation_sign(&seq))
            })
            .collect();
        OrientedComplex::from_signed_facets_unchecked(pairs)
    }

    /// Oriented join: `F1 ∪ F2` gets sign `e1 * e2` when written `F1` then `F2`.
    pub fn join(&self, other: &OrientedComplex) -> (OrientedComplex, BTreeMap<Vertex, Vertex>) {
        let map = join_relabeling(&self.complex, &other.complex);
        let other = other.relabel(|v| map[&v]);
        let mut pairs = Vec::new();
        for (a, ea) in self.signed_facets() {
            for (b, eb) in other.signed_facets() {
                let mut seq = a.vertices().to_vec();
                seq.extend_from_slice(b.vertices());
                pairs.push((a.union(b), ea * eb * permutation_sign(&seq)));
            }
        }
        (OrientedComplex::from_signed_facets_unchecked(pairs), map)
    }
}

/// Propagates coherent signs across codimension-one adjacencies, starting
/// with `+1` on the least facet of each connected component.
pub fn orient(k: &Complex) -> Result<OrientedComplex, ComplexError> {
    if !k.is_closed_pseudomanifold() {
        return Err(ComplexError::NotPseudomanifold(
            "some codimension-one face does not lie in exactly two facets".into(),
        ));
    }
    let facets = k.facets();
    let mut by_ridge: BTreeMap<Simplex, Vec<(usize, usize)>> = BTreeMap::new();
    for (fi, f) in facets.iter().enumerate() {
        for (pos, r) in f.boundary_faces().enumerate() {
            by_ridge.entry(r).or_default().push((fi, pos));
        }
    }
    let mut adj: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); facets.len()];
    for pair in by_ridge.values() {
        let (a, pa) = pair[0];
        let (b, pb) = pair[1];
        adj[a].push((b, pa, pb));
        adj[b].push((a, pb, pa));
    }
    let mut signs = vec![0i8; facets.len()];
    for seed in 0..facets.len() {
        if signs[seed] != 0 {
            continue;
        }
        signs[seed] = 1;
        let mut queue = VecDeque::from([seed]);
        while let Some(f) = queue.pop_front() {
            for &(g, pf, pg) in &adj[f] {
                // induced signs on the shared ridge must be opposite
                let induced_f = if pf % 2 == 0 { signs[f] } else { -signs[f] };
                let want = if pg % 2 == 0 { -induced_f } else { induced_f };
                if signs[g] == 0 {
                    signs[g] = want;
                    queue.push_back(g);
                } else if signs[g] != want {
                    return Err(ComplexError::NonOrientable);
                }
            }
        }
    }
    Ok(OrientedComplex {
        complex: k.clone(),
        signs,
    })
}
