//! Slow, independent reference computations on raw facet lists.
//!
//! Nothing here uses the library crates; these are the yardsticks the
//! library is measured against.

pub mod fixtures;
pub mod iso;
pub mod linalg;
pub mod spheres;

pub type Facets = Vec<Vec<u32>>;

pub fn sorted_facets(f: &[Vec<u32>]) -> Facets {
    let mut out: Facets = f
        .iter()
        .map(|s| {
            let mut s = s.clone();
            s.sort_unstable();
            s
        })
        .collect();
    out.sort();
    out
}

pub fn vertex_set(f: &[Vec<u32>]) -> Vec<u32> {
    let mut v: Vec<u32> = f.iter().flatten().copied().collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// All faces (non-empty subsets of facets), sorted by size then lexicographically.
pub fn all_faces(f: &[Vec<u32>]) -> Facets {
    let mut out = std::collections::BTreeSet::new();
    for s in f {
        let n = s.len();
        for mask in 1u32..(1 << n) {
            let mut face: Vec<u32> = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| s[i]).collect();
            face.sort_unstable();
            out.insert(face);
        }
    }
    let mut v: Facets = out.into_iter().collect();
    v.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    v
}

pub fn faces_of_size(f: &[Vec<u32>], size: usize) -> Facets {
    all_faces(f).into_iter().filter(|s| s.len() == size).collect()
}

pub fn euler_characteristic(f: &[Vec<u32>]) -> i64 {
    all_faces(f)
        .iter()
        .map(|s| if s.len() % 2 == 1 { 1 } else { -1 })
        .sum()
}

/// Sign of the permutation sorting `seq`.
pub fn perm_sign(seq: &[u32]) -> i64 {
    let mut inv = 0;
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
