//! Canonical keys for edges of the move graph.

use std::fmt;

use serde::{Deserialize, Serialize};
use simplicial_core::canonical::{decode_oriented, marked_oriented_key};
use simplicial_core::{OrientedComplex, Simplex};

use crate::moves::{apply_move, BistellarMove};

/// Complexity of a 2-sphere in sixths: `6k`, `6k + 2` or `6k + 4` for
/// minimal degree 3, 4 or at least 5, with `k` the number of vertices.
pub fn sphere_complexity_sixths(k: &OrientedComplex) -> u32 {
    let min_deg = k.vertices().iter().map(|&v| k.complex().degree(v)).min().unwrap_or(0);
    let bump = match min_deg {
        0..=3 => 0,
        4 => 2,
        _ => 4,
    };
    6 * k.num_vertices() as u32 + bump
}

/// Ordering rank of a sphere: complexity for surfaces, vertex count otherwise.
pub fn sphere_rank(k: &OrientedComplex) -> u32 {
    if k.dim() == 2 {
        sphere_complexity_sixths(k)
    } else {
        k.num_vertices() as u32
    }
}

/// An oriented sphere class with a marked face orbit.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MarkedKey {
    pub rank: u32,
    #[serde(with = "hex::serde")]
    pub key: Vec<u8>,
    pub mark: Simplex,
}

impl MarkedKey {
    pub fn of(k: &OrientedComplex, mark: &Simplex) -> MarkedKey {
        let (key, marks) = marked_oriented_key(k, std::slice::from_ref(mark));
        MarkedKey { rank: sphere_rank(k), key, mark: marks.into_iter().next().unwrap() }
    }

    /// The canonical representative sphere (the mark is in its labels).
    pub fn sphere(&self) -> OrientedComplex {
        decode_oriented(&self.key).expect("stored key decodes")
    }
}

impl fmt::Debug for MarkedKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let h = hex::encode(&self.key);
        write!(f, "{}@{}:{:?}", &h[..h.len().min(12)], self.rank, self.mark)
    }
}

/// An edge of the move graph in its canonical direction, from the lesser
/// marked endpoint to the greater one.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeKey {
    pub lo: MarkedKey,
    pub hi: MarkedKey,
}

impl EdgeKey {
    /// A move realising this edge in the canonical direction, on the
    /// canonical representative of the `lo` sphere.
    pub fn representative(&self) -> (OrientedComplex, BistellarMove) {
        let host = self.lo.sphere();
        let mv = crate::moves::enumerate_moves(&host)
            .into_iter()
            .find(|m| m.sigma == self.lo.mark)
            .expect("marked face supports a move");
        (host, mv)
    }

    /// Move complexity in sixths (surfaces).
    pub fn complexity_sixths(&self) -> u32 {
        if self.lo.rank == self.hi.rank {
            self.lo.rank + 1
        } else {
            self.lo.rank.max(self.hi.rank)
        }
    }

    /// The endpoint oriented keys `(tail, head)` in canonical direction.
    pub fn endpoints(&self) -> (&[u8], &[u8]) {
        (&self.lo.key, &self.hi.key)
    }
}

/// Class of a move in the move graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EdgeClass {
    /// The move equals `sign` times the canonical edge.
    Essential { key: EdgeKey, sign: i8 },
    /// The move is equivalent to its own inverse.
    Inessential,
}

impl EdgeClass {
    pub fn essential(self) -> Option<(EdgeKey, i8)> {
        match self {
            EdgeClass::Essential { key, sign } => Some((key, sign)),
            EdgeClass::Inessential => None,
        }
    }
}

/// Edge class of `mv` on `host`, with the result of applying it.
pub fn edge_key_with_result(host: &OrientedComplex, mv: &BistellarMove) -> (EdgeClass, OrientedComplex) {
    let result = apply_move(host, mv).expect("valid move");
    let class = edge_between(host, &mv.sigma, &result, &mv.tau);
    (class, result)
}

pub fn edge_key(host: &OrientedComplex, mv: &BistellarMove) -> EdgeClass {
    edge_key_with_result(host, mv).0
}

/// Edge class from the marked endpoints directly.
pub fn edge_between(host: &OrientedComplex, sigma: &Simplex, result: &OrientedComplex, tau: &Simplex) -> EdgeClass {
    let tail = MarkedKey::of(host, sigma);
    let head = MarkedKey::of(result, tau);
    match tail.cmp(&head) {
        std::cmp::Ordering::Equal => EdgeClass::Inessential,
        std::cmp::Ordering::Less => EdgeClass::Essential { key: EdgeKey { lo: tail, hi: head }, sign: 1 },
        std::cmp::Ordering::Greater => EdgeClass::Essential { key: EdgeKey { lo: head, hi: tail }, sign: -1 },
    }
}

/// The image of an edge under orientation reversal of both endpoints.
pub fn mirror_edge(e: &EdgeKey) -> (EdgeKey, i8) {
    let (host, mv) = e.representative();
    match edge_key(&host.reversed(), &mv) {
        EdgeClass::Essential { key, sign } => (key, sign),
        EdgeClass::Inessential => unreachable!("reversal preserves essentiality"),
    }
}
