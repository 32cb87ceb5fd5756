use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::sync::OnceLock;

use smallvec::SmallVec;

use crate::error::ComplexError;
use crate::simplex::{Simplex, Vertex};

/// An abstract simplicial complex stored by its facets.
///
/// Faces are implicit: a simplex belongs to the complex iff it is a subset of
/// some facet. The full face set is built lazily on first membership query.
#[derive(Clone, Debug)]
pub struct Complex {
    vertices: Vec<Vertex>,
    facets: Vec<Simplex>,
    dim: isize,
    faces: OnceLock<HashSet<Simplex>>,
}

impl PartialEq for Complex {
    fn eq(&self, other: &Self) -> bool {
        self.facets == other.facets
    }
}

impl Eq for Complex {}

impl Complex {
    /// Builds a complex from a facet list, rejecting repeated vertices and
    /// facets contained in other facets.
    pub fn from_facets<I, F>(facets: I) -> Result<Self, ComplexError>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = Vertex>,
    {
        let simplices = facets
            .into_iter()
            .map(Simplex::new)
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_simplices(simplices)
    }

    pub fn from_simplices(mut facets: Vec<Simplex>) -> Result<Self, ComplexError> {
        if facets.is_empty() {
            return Err(ComplexError::EmptyFacetList);
        }
        facets.sort();
        facets.dedup();
        for i in 0..facets.len() {
            for j in 0..facets.len() {
                if i != j && facets[i].is_face_of(&facets[j]) {
                    return Err(ComplexError::FacetContainment(
                        facets[i].clone(),
                        facets[j].clone(),
                    ));
                }
            }
        }
        Ok(Self::from_maximal(facets))
    }

    /// Builds a complex from an arbitrary family of simplices, keeping only the
    /// maximal ones.
    pub fn from_faces<I: IntoIterator<Item = Simplex>>(faces: I) -> Self {
        let mut all: Vec<Simplex> = faces.into_iter().collect();
        all.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
        all.dedup();
        let mut kept: Vec<Simplex> = Vec::new();
        for s in all {
            if !kept.iter().any(|k| s.is_face_of(k)) {
                kept.push(s);
            }
        }
        if kept.is_empty() {
            kept.push(Simplex::empty());
        }
        Self::from_maximal(kept)
    }

    /// Caller guarantees the simplices are pairwise non-contained.
    pub fn from_maximal(mut facets: Vec<Simplex>) -> Self {
        facets.sort();
        facets.dedup();
        let vertices: BTreeSet<Vertex> = facets
            .iter()
            .flat_map(|f| f.vertices().iter().copied())
            .collect();
        let dim = facets.iter().map(|f| f.dim()).max().unwrap_or(-1);
        Complex {
            vertices: vertices.into_iter().collect(),
            facets,
            dim,
            faces: OnceLock::new(),
        }
    }

    /// The full simplex on `n + 1` vertices `0..=n`.
    pub fn simplex(n: usize) -> Self {
        Self::from_maximal(vec![Simplex::from_distinct(0..=n as Vertex)])
    }

    /// The boundary of the `n`-simplex: an `(n-1)`-sphere on vertices `0..=n`.
    pub fn simplex_boundary(n: usize) -> Self {
        let full = Simplex::from_distinct(0..=n as Vertex);
        Self::from_maximal(full.boundary_faces().collect())
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    pub fn dim(&self) -> isize {
        self.dim
    }

    pub fn is_pure(&self) -> bool {
        self.facets.iter().all(|f| f.dim() == self.dim)
    }

    fn face_set(&self) -> &HashSet<Simplex> {
        self.faces.get_or_init(|| {
            let mut set = HashSet::new();
            for f in &self.facets {
                for s in f.faces() {
                    set.insert(s);
                }
            }
            set
        })
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        if s.len() as isize - 1 == self.dim {
            return self.facets.binary_search(s).is_ok();
        }
        self.face_set().contains(s)
    }

    pub fn faces_of_dim(&self, k: isize) -> Vec<Simplex> {
        let mut out: Vec<Simplex> = if k == self.dim {
            self.facets.clone()
        } else {
            self.face_set()
                .iter()
                .filter(|s| s.dim() == k)
                .cloned()
                .collect()
        };
        out.sort();
        out
    }

    /// All non-empty faces sorted by dimension, then lexicographically.
    pub fn all_faces(&self) -> Vec<Simplex> {
        let mut out: Vec<Simplex> = self
            .face_set()
            .iter()
            .filter(|s| !s.is_empty())
            .cloned()
            .collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        out
    }

    /// Face counts `f_0, f_1, ..., f_dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0usize; (self.dim + 1).max(0) as usize];
        for s in self.face_set() {
            if !s.is_empty() {
                f[s.len() - 1] += 1;
            }
        }
        f
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(i, &c)| if i % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    /// Facets containing `s`.
    pub fn facets_containing<'a>(&'a self, s: &'a Simplex) -> impl Iterator<Item = &'a Simplex> + 'a {
        self.facets.iter().filter(move |f| s.is_face_of(f))
    }

    pub fn link(&self, s: &Simplex) -> Result<Complex, ComplexError> {
        if !self.contains(s) {
            return Err(ComplexError::SimplexNotInComplex(s.clone()));
        }
        Ok(Complex::from_faces(
            self.facets_containing(s).map(|f| f.difference(s)),
        ))
    }

    /// Closed star: the subcomplex generated by facets containing `s`.
    pub fn star(&self, s: &Simplex) -> Result<Complex, ComplexError> {
        if !self.contains(s) {
            return Err(ComplexError::SimplexNotInComplex(s.clone()));
        }
        Ok(Complex::from_maximal(
            self.facets_containing(s).cloned().collect(),
        ))
    }

    pub fn neighbors(&self, v: Vertex) -> Vec<Vertex> {
        let mut out: BTreeSet<Vertex> = BTreeSet::new();
        for f in &self.facets {
            if f.contains(v) {
                out.extend(f.vertices().iter().copied().filter(|&w| w != v));
            }
        }
        out.into_iter().collect()
    }

    /// Degree of `v` in the 1-skeleton.
    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors(v).len()
    }

    pub fn smallest_unused_vertex(&self) -> Vertex {
        let mut next = 0;
        for &v in &self.vertices {
            if v == next {
                next += 1;
            } else if v > next {
                break;
            }
        }
        next
    }

    pub fn relabel<F: Fn(Vertex) -> Vertex>(&self, f: F) -> Complex {
        Complex::from_maximal(self.facets.iter().map(|s| s.map(&f)).collect())
    }

    /// The full subcomplex on a vertex subset.
    pub fn induced(&self, vs: &[Vertex]) -> Complex {
        let set: BTreeSet<Vertex> = vs.iter().copied().collect();
        Complex::from_faces(self.facets.iter().map(|f| {
            Simplex::from_sorted(
                f.vertices()
                    .iter()
                    .copied()
                    .filter(|v| set.contains(v))
                    .collect(),
            )
        }))
    }

    /// Join with `other`. Colliding vertices of `other` are shifted past the
    /// largest vertex of `self`; the map applied to `other` is returned.
    pub fn join(&self, other: &Complex) -> (Complex, BTreeMap<Vertex, Vertex>) {
        let map = join_relabeling(self, other);
        let facets = self
            .facets
            .iter()
            .flat_map(|a| {
                other
                    .facets
                    .iter()
                    .map(|b| a.union(&b.map(|v| map[&v])))
                    .collect::<Vec<_>>()
            })
            .collect();
        (Complex::from_maximal(facets), map)
    }

    /// Cone with a fresh apex (the smallest unused vertex id). Returns the apex.
    pub fn cone(&self) -> (Complex, Vertex) {
        let apex = self.smallest_unused_vertex();
        (
            Complex::from_maximal(self.facets.iter().map(|f| f.with(apex)).collect()),
            apex,
        )
    }

    /// First barycentric subdivision. Vertex `i` of the result stands for the
    /// `i`-th entry of the returned face list.
    pub fn barycentric_subdivision(&self) -> (Complex, Vec<Simplex>) {
        let faces = self.all_faces();
        let index: std::collections::HashMap<&Simplex, Vertex> = faces
            .iter()
            .enumerate()
            .map(|(i, s)| (s, i as Vertex))
            .collect();
        let mut out = Vec::new();
        for f in &self.facets {
            if f.is_empty() {
                continue;
            }
            let verts = f.vertices().to_vec();
            for perm in permutations(&verts) {
                let mut chain = SmallVec::<[Vertex; 6]>::new();
                let mut cur: Vec<Vertex> = Vec::new();
                for v in perm {
                    cur.push(v);
                    let s = Simplex::from_distinct(cur.iter().copied());
                    chain.push(index[&s]);
                }
                chain.sort_unstable();
                out.push(Simplex::from_sorted(chain));
            }
        }
        (Complex::from_maximal(out), faces)
    }

    /// Every codimension-one face lies in exactly two facets and the complex is pure.
    pub fn is_closed_pseudomanifold(&self) -> bool {
        if !self.is_pure() || self.dim < 0 {
            return false;
        }
        ridge_counts(self).values().all(|&c| c == 2)
    }

    /// Vertex sets of the connected components, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut parent: BTreeMap<Vertex, Vertex> =
            self.vertices.iter().map(|&v| (v, v)).collect();
        fn find(p: &mut BTreeMap<Vertex, Vertex>, v: Vertex) -> Vertex {
            let mut r = v;
            while p[&r] != r {
                r = p[&r];
            }
            let mut c = v;
            while p[&c] != r {
                let n = p[&c];
                p.insert(c, r);
                c = n;
            }
            r
        }
        for f in &self.facets {
            let vs = f.vertices();
            for w in vs.iter().skip(1) {
                let a = find(&mut parent, vs[0]);
                let b = find(&mut parent, *w);
                if a != b {
                    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                    parent.insert(hi, lo);
                }
            }
        }
        let mut groups: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
        for &v in &self.vertices {
            let r = find(&mut parent, v);
            groups.entry(r).or_default().push(v);
        }
        groups.into_values().collect()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

pub(crate) fn ridge_counts(k: &Complex) -> BTreeMap<Simplex, usize> {
    let mut counts = BTreeMap::new();
    for f in k.facets() {
        for r in f.boundary_faces() {
            *counts.entry(r).or_insert(0) += 1;
        }
    }
    counts
}

pub(crate) fn join_relabeling(a: &Complex, b: &Complex) -> BTreeMap<Vertex, Vertex> {
    let collide = b.vertices().iter().any(|v| a.vertices().binary_search(v).is_ok());
    let shift = if collide {
        a.vertices().last().map(|&m| m + 1).unwrap_or(0)
    } else {
        0
    };
    let min_b = b.vertices().first().copied().unwrap_or(0);
    b.vertices()
        .iter()
        .map(|&v| (v, if collide { v - min_b + shift } else { v }))
        .collect()
}

fn permutations(items: &[Vertex]) -> Vec<Vec<Vertex>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, head);
            out.push(p);
        }
    }
    out
}
