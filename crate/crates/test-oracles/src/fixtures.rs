//! Hand-written complexes.

use crate::Facets;

pub fn simplex_boundary(n: u32) -> Facets {
    (0..=n)
        .map(|skip| (0..=n).filter(|&v| v != skip).collect())
        .collect()
}

pub fn octahedron() -> Facets {
    let mut out = Vec::new();
    for a in [0, 1] {
        for b in [2, 3] {
            for c in [4, 5] {
                out.push(vec![a, b, c]);
            }
        }
    }
    out
}

pub fn icosahedron() -> Facets {
    let u = |i: u32| 1 + (i % 5);
    let l = |i: u32| 6 + (i % 5);
    let mut out = Vec::new();
    for i in 0..5 {
        out.push(vec![0, u(i), u(i + 1)]);
        out.push(vec![u(i), u(i + 1), l(i)]);
        out.push(vec![u(i + 1), l(i), l(i + 1)]);
        out.push(vec![11, l(i), l(i + 1)]);
    }
    out
}

/// The six-vertex real projective plane.
pub fn rp2_6() -> Facets {
    [
        [1, 2, 3],
        [1, 3, 4],
        [1, 4, 5],
        [1, 5, 6],
        [1, 6, 2],
        [2, 3, 5],
        [3, 4, 6],
        [4, 5, 2],
        [5, 6, 3],
        [6, 2, 4],
    ]
    .iter()
    .map(|t| t.iter().map(|v| v - 1).collect())
    .collect()
}

/// Boundary of the cross-polytope on pairs `{2i, 2i+1}`, `i < k`.
pub fn cross_polytope(k: u32) -> Facets {
    let mut out = vec![Vec::new()];
    for i in 0..k {
        let mut next = Vec::new();
        for f in &out {
            for v in [2 * i, 2 * i + 1] {
                let mut g: Vec<u32> = f.clone();
                g.push(v);
                next.push(g);
            }
        }
        out = next;
    }
    out
}

pub fn polygon(k: u32) -> Facets {
    (0..k).map(|i| {
        let mut e = vec![i, (i + 1) % k];
        e.sort_unstable();
        e
    }).collect()
}

/// The 9-vertex complex projective plane.
pub fn cp2_9() -> Facets {
    vec![
        [0, 1, 2, 3, 4],
        [0, 1, 2, 3, 5],
        [0, 1, 2, 4, 5],
        [0, 1, 3, 4, 6],
        [0, 1, 3, 5, 7],
        [0, 1, 3, 6, 7],
        [0, 1, 4, 5, 6],
        [0, 1, 5, 6, 8],
        [0, 1, 5, 7, 8],
        [0, 1, 6, 7, 8],
        [0, 2, 3, 4, 8],
        [0, 2, 3, 5, 8],
        [0, 2, 4, 5, 6],
        [0, 2, 4, 6, 7],
        [0, 2, 4, 7, 8],
        [0, 2, 5, 6, 8],
        [0, 2, 6, 7, 8],
        [0, 3, 4, 6, 7],
        [0, 3, 4, 7, 8],
        [0, 3, 5, 7, 8],
        [1, 2, 3, 4, 8],
        [1, 2, 3, 5, 7],
        [1, 2, 3, 6, 7],
        [1, 2, 3, 6, 8],
        [1, 2, 4, 5, 7],
        [1, 2, 4, 7, 8],
        [1, 2, 6, 7, 8],
        [1, 3, 4, 6, 8],
        [1, 4, 5, 6, 8],
        [1, 4, 5, 7, 8],
        [2, 3, 5, 6, 7],
        [2, 3, 5, 6, 8],
        [2, 4, 5, 6, 7],
        [3, 4, 5, 6, 7],
        [3, 4, 5, 6, 8],
        [3, 4, 5, 7, 8],
    ]
    .into_iter()
    .map(|f: [u32; 5]| f.to_vec())
    .collect()
}
