use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::ComplexError;

pub type Vertex = u32;

/// A finite set of vertices, stored strictly increasing.
///
/// The empty simplex is allowed and has dimension -1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(into = "Vec<Vertex>", try_from = "Vec<Vertex>")]
pub struct Simplex(SmallVec<[Vertex; 6]>);

impl Simplex {
    pub fn empty() -> Self {
        Simplex(SmallVec::new())
    }

    pub fn new<I: IntoIterator<Item = Vertex>>(vertices: I) -> Result<Self, ComplexError> {
        let mut v: SmallVec<[Vertex; 6]> = vertices.into_iter().collect();
        v.sort_unstable();
        for w in v.windows(2) {
            if w[0] == w[1] {
                return Err(ComplexError::DuplicateVertexInFacet(w[0]));
            }
        }
        Ok(Simplex(v))
    }

    /// Builds a simplex from distinct vertices in any order. Panics on repeats.
    pub fn from_distinct<I: IntoIterator<Item = Vertex>>(vertices: I) -> Self {
        Self::new(vertices).expect("repeated vertex")
    }

    pub(crate) fn from_sorted(v: SmallVec<[Vertex; 6]>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        Simplex(v)
    }

    pub fn vertex(v: Vertex) -> Self {
        let mut s = SmallVec::new();
        s.push(v);
        Simplex(s)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.0, &other.0);
        while i < a.len() {
            if j == b.len() {
                return false;
            }
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Less => return false,
            }
        }
        true
    }

    pub fn is_disjoint(&self, other: &Simplex) -> bool {
        self.0.iter().all(|v| !other.contains(*v))
    }

    pub fn union(&self, other: &Simplex) -> Simplex {
        let mut v: SmallVec<[Vertex; 6]> = self.0.iter().chain(other.0.iter()).copied().collect();
        v.sort_unstable();
        v.dedup();
        Simplex(v)
    }

    pub fn intersection(&self, other: &Simplex) -> Simplex {
        Simplex(self.0.iter().copied().filter(|v| other.contains(*v)).collect())
    }

    pub fn difference(&self, other: &Simplex) -> Simplex {
        Simplex(self.0.iter().copied().filter(|v| !other.contains(*v)).collect())
    }

    pub fn with(&self, v: Vertex) -> Simplex {
        let mut s = self.0.clone();
        match s.binary_search(&v) {
            Ok(_) => {}
            Err(p) => s.insert(p, v),
        }
        Simplex(s)
    }

    pub fn without(&self, v: Vertex) -> Simplex {
        Simplex(self.0.iter().copied().filter(|&w| w != v).collect())
    }

    /// Position of `v` in the increasing order, if present.
    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.0.binary_search(&v).ok()
    }

    /// All subsets, including the empty simplex and the simplex itself.
    pub fn faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        let n = self.0.len();
        (0u32..(1u32 << n)).map(move |mask| {
            Simplex((0..n).filter(|i| mask & (1 << i) != 0).map(|i| self.0[i]).collect())
        })
    }

    /// Codimension-one faces, in order of the removed position.
    pub fn boundary_faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        (0..self.0.len()).map(move |i| {
            let mut s = self.0.clone();
            s.remove(i);
            Simplex(s)
        })
    }

    pub fn map<F: Fn(Vertex) -> Vertex>(&self, f: F) -> Simplex {
        Simplex::from_distinct(self.0.iter().map(|&v| f(v)))
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

impl From<Simplex> for Vec<Vertex> {
    fn from(s: Simplex) -> Self {
        s.0.to_vec()
    }
}

impl TryFrom<Vec<Vertex>> for Simplex {
    type Error = ComplexError;
    fn try_from(v: Vec<Vertex>) -> Result<Self, Self::Error> {
        Simplex::new(v)
    }
}

/// Sign of the permutation sorting `seq` (distinct entries).
pub fn permutation_sign(seq: &[Vertex]) -> i8 {
    let mut inv = 0usize;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}
