//! Isomorphism by exhaustive backtracking over vertex bijections.

use std::collections::{BTreeMap, BTreeSet};

use crate::{perm_sign, sorted_facets, vertex_set, Facets};

/// Signed facet map: sorted facet -> sign for the increasing order.
pub type Signed = BTreeMap<Vec<u32>, i64>;

pub fn signed(f: &[Vec<u32>], signs: &[i64]) -> Signed {
    f.iter()
        .zip(signs)
        .map(|(s, &e)| {
            let mut t = s.clone();
            t.sort_unstable();
            (t, e * perm_sign(s))
        })
        .collect()
}

/// Searches for a bijection `a -> b` mapping facets onto facets. With signs,
/// the orientation must be multiplied by `want` (+1 preserve, -1 reverse).
pub fn find_isomorphism(a: &Signed, b: &Signed, oriented: bool, want: i64) -> Option<BTreeMap<u32, u32>> {
    let fa: Facets = a.keys().cloned().collect();
    let fb: Facets = b.keys().cloned().collect();
    let va = vertex_set(&fa);
    let vb = vertex_set(&fb);
    if va.len() != vb.len() || fa.len() != fb.len() {
        return None;
    }
    let set_b: BTreeSet<Vec<u32>> = fb.iter().cloned().collect();
    let mut map = BTreeMap::new();
    let mut used = BTreeSet::new();
    let ctx = Ctx { a, b, fa: &fa, set_b: &set_b, va: &va, vb: &vb, oriented, want };
    if ctx.extend(0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

struct Ctx<'a> {
    a: &'a Signed,
    b: &'a Signed,
    fa: &'a Facets,
    set_b: &'a BTreeSet<Vec<u32>>,
    va: &'a [u32],
    vb: &'a [u32],
    oriented: bool,
    want: i64,
}

impl Ctx<'_> {
    fn extend(&self, i: usize, map: &mut BTreeMap<u32, u32>, used: &mut BTreeSet<u32>) -> bool {
        if i == self.va.len() {
            return self.check_full(map);
        }
        let v = self.va[i];
        for &w in self.vb {
            if used.contains(&w) {
                continue;
            }
            map.insert(v, w);
            used.insert(w);
            if self.partial_ok(map) && self.extend(i + 1, map, used) {
                return true;
            }
            map.remove(&v);
            used.remove(&w);
        }
        false
    }

    fn partial_ok(&self, map: &BTreeMap<u32, u32>) -> bool {
        for f in self.fa {
            if f.iter().all(|v| map.contains_key(v)) {
                let mut img: Vec<u32> = f.iter().map(|v| map[v]).collect();
                img.sort_unstable();
                if !self.set_b.contains(&img) {
                    return false;
                }
            }
        }
        true
    }

    fn check_full(&self, map: &BTreeMap<u32, u32>) -> bool {
        for f in self.fa {
            let seq: Vec<u32> = f.iter().map(|v| map[v]).collect();
            let mut img = seq.clone();
            img.sort_unstable();
            let Some(&sb) = self.b.get(&img) else { return false };
            if self.oriented && sb * perm_sign(&seq) != self.want * self.a[f] {
                return false;
            }
        }
        true
    }
}

pub fn isomorphic(a: &[Vec<u32>], b: &[Vec<u32>]) -> bool {
    let sa = signed(a, &vec![1; a.len()]);
    let sb = signed(b, &vec![1; b.len()]);
    find_isomorphism(&sa, &sb, false, 1).is_some()
}

/// Least relabeled facet list over all bijections onto `0..n` (tiny inputs only).
pub fn brute_canonical(f: &[Vec<u32>]) -> Facets {
    let vs = vertex_set(f);
    let n = vs.len();
    let mut perm: Vec<u32> = (0..n as u32).collect();
    let mut best: Option<Facets> = None;
    loop {
        let map: BTreeMap<u32, u32> = vs.iter().copied().zip(perm.iter().copied()).collect();
        let img: Facets = f.iter().map(|s| s.iter().map(|v| map[v]).collect()).collect();
        let img = sorted_facets(&img);
        if best.as_ref().is_none_or(|b| img < *b) {
            best = Some(img);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best.unwrap()
}

pub fn next_permutation(p: &mut [u32]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}
