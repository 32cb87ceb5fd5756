//! Exact linear algebra over GF(2) and the rationals, plus homology helpers.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{all_faces, perm_sign, Facets};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

/// Rank over GF(2) of rows given as bit vectors.
pub fn rank_gf2(mut rows: Vec<Vec<bool>>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c]) else { continue };
        rows.swap(rank, p);
        for r in 0..rows.len() {
            if r != rank && rows[r][c] {
                let pivot = rows[rank].clone();
                for (x, y) in rows[r].iter_mut().zip(pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Columns of the mod-2 boundary map from `size`-faces to `(size-1)`-faces,
/// written as rows (one per `size`-face).
fn boundary_rows_gf2(f: &[Vec<u32>], size: usize) -> (Vec<Vec<bool>>, BTreeMap<Vec<u32>, usize>) {
    let faces = all_faces(f);
    let lower: BTreeMap<Vec<u32>, usize> = faces
        .iter()
        .filter(|s| s.len() == size - 1)
        .cloned()
        .enumerate()
        .map(|(i, s)| (s, i))
        .collect();
    let rows = faces
        .iter()
        .filter(|s| s.len() == size)
        .map(|s| {
            let mut row = vec![false; lower.len()];
            for i in 0..s.len() {
                let mut r = s.clone();
                r.remove(i);
                row[lower[&r]] ^= true;
            }
            row
        })
        .collect();
    (rows, lower)
}

/// Mod-2 boundary of a chain of `size`-faces, as the set of faces with odd coefficient.
pub fn boundary_gf2(chain: &[Vec<u32>]) -> Facets {
    let mut count: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    for s in chain {
        for i in 0..s.len() {
            let mut r = s.clone();
            r.remove(i);
            *count.entry(r).or_insert(0) += 1;
        }
    }
    count.into_iter().filter(|(_, c)| c % 2 == 1).map(|(s, _)| s).collect()
}

/// Whether the mod-2 cycle `chain` (faces of one size) bounds in the complex.
pub fn is_boundary_gf2(f: &[Vec<u32>], chain: &[Vec<u32>]) -> bool {
    let size = chain.first().map_or(1, |s| s.len());
    let (rows, _) = boundary_rows_gf2(f, size + 1);
    let index: BTreeMap<Vec<u32>, usize> = all_faces(f)
        .into_iter()
        .filter(|s| s.len() == size)
        .enumerate()
        .map(|(i, s)| (s, i))
        .collect();
    let mut v = vec![false; index.len()];
    for s in chain {
        v[index[s]] ^= true;
    }
    let r0 = rank_gf2(rows.clone());
    let mut with = rows;
    with.push(v);
    rank_gf2(with) == r0
}

/// Row-reduces `m` in place over Q; returns pivot columns.
pub fn rref(m: &mut [Vec<Q>]) -> Vec<usize> {
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut row = 0;
    for c in 0..cols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(row, p);
        let inv = Q::one() / m[row][c].clone();
        for x in m[row].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for r in 0..m.len() {
            if r != row && !m[r][c].is_zero() {
                let factor = m[r][c].clone();
                let pivot_row = m[row].clone();
                for (x, y) in m[r].iter_mut().zip(pivot_row) {
                    *x = x.clone() - factor.clone() * y;
                }
            }
        }
        pivots.push(c);
        row += 1;
    }
    pivots
}

pub fn rank_q(m: &[Vec<Q>]) -> usize {
    let mut m = m.to_vec();
    rref(&mut m).len()
}

/// Basis of `{x : m x = 0}`.
pub fn nullspace_q(m: &[Vec<Q>], cols: usize) -> Vec<Vec<Q>> {
    let mut r = m.to_vec();
    let pivots = rref(&mut r);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut x = vec![Q::zero(); cols];
            x[fc] = Q::one();
            for (ri, &pc) in pivots.iter().enumerate() {
                x[pc] = -r[ri][fc].clone();
            }
            x
        })
        .collect()
}

/// Whether `v` lies in the span of `vectors`.
pub fn in_span_q(vectors: &[Vec<Q>], v: &[Q]) -> bool {
    let r0 = rank_q(vectors);
    let mut with = vectors.to_vec();
    with.push(v.to_vec());
    rank_q(&with) == r0
}

/// Oriented boundary matrix over Q: entry `[face][coface]` for faces of size
/// `size - 1` and cofaces of size `size`, both in increasing vertex order.
pub fn boundary_matrix_q(f: &[Vec<u32>], size: usize) -> (Vec<Vec<Q>>, Facets, Facets) {
    let faces = all_faces(f);
    let low: Facets = faces.iter().filter(|s| s.len() == size - 1).cloned().collect();
    let high: Facets = faces.iter().filter(|s| s.len() == size).cloned().collect();
    let index: BTreeMap<&Vec<u32>, usize> = low.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut m = vec![vec![Q::zero(); high.len()]; low.len()];
    for (j, s) in high.iter().enumerate() {
        for i in 0..s.len() {
            let mut r = s.clone();
            r.remove(i);
            m[index[&r]][j] = q(if i % 2 == 0 { 1 } else { -1 });
        }
    }
    (m, low, high)
}

/// Whether a rational chain on `size`-faces is a boundary over Q.
pub fn is_boundary_q(f: &[Vec<u32>], chain: &BTreeMap<Vec<u32>, Q>) -> bool {
    let size = chain.keys().next().map_or(1, |s| s.len());
    let (m, low, _) = boundary_matrix_q(f, size + 1);
    let v: Vec<Q> = low.iter().map(|s| chain.get(s).cloned().unwrap_or_else(Q::zero)).collect();
    let cols: Vec<Vec<Q>> = (0..m.first().map_or(0, |r| r.len()))
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect();
    in_span_q(&cols, &v)
}

/// Signature of a closed oriented 4-manifold with one-dimensional second
/// rational cohomology, from the cup square of a generator evaluated on the
/// fundamental cycle (Alexander-Whitney on increasingly ordered simplices).
pub fn signature_rank_one(f: &[Vec<u32>], signs: &[i64]) -> i64 {
    let facets = crate::sorted_facets(f);
    let sign_of: BTreeMap<Vec<u32>, i64> = f
        .iter()
        .zip(signs)
        .map(|(s, &e)| {
            let mut t = s.clone();
            t.sort_unstable();
            (t, e * perm_sign(s))
        })
        .collect();
    // coboundary d2: C^2 -> C^3 is the transpose of the boundary from 4-sets to 3-sets
    let (b3, tri, _tet) = boundary_matrix_q(&facets, 4);
    let d2: Vec<Vec<Q>> = (0..b3.first().map_or(0, |r| r.len()))
        .map(|j| b3.iter().map(|row| row[j].clone()).collect())
        .collect();
    let z2 = nullspace_q(&d2, tri.len());
    let (b2, _edges, tri2) = boundary_matrix_q(&facets, 3);
    assert_eq!(tri, tri2);
    // coboundaries are the rows of b2 (one per edge), viewed as cochains on triangles
    let b_space: Vec<Vec<Q>> = b2.clone();
    let gen = z2
        .into_iter()
        .find(|z| !in_span_q(&b_space, z))
        .expect("second cohomology vanishes");
    let idx: BTreeMap<&Vec<u32>, usize> = tri.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut total = Q::zero();
    for s in &facets {
        let front = vec![s[0], s[1], s[2]];
        let back = vec![s[2], s[3], s[4]];
        total += q(sign_of[s]) * gen[idx[&front]].clone() * gen[idx[&back]].clone();
    }
    assert!(!total.is_zero(), "degenerate cup square");
    if total.is_positive() {
        1
    } else {
        -1
    }
}
