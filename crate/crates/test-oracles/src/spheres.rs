//! Brute-force enumeration of triangulated 2-spheres by facet-set search.

use std::collections::BTreeMap;

use crate::iso::{find_isomorphism, signed};
use crate::{euler_characteristic, Facets};

fn edge(a: u32, b: u32) -> (u32, u32) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

fn is_sphere(f: &[Vec<u32>], n: u32) -> bool {
    // every vertex used, vertex links are single cycles, connected, chi = 2
    for v in 0..n {
        let mut nbr: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
        for t in f.iter().filter(|t| t.contains(&v)) {
            let o: Vec<u32> = t.iter().copied().filter(|&w| w != v).collect();
            nbr.entry(o[0]).or_default().push(o[1]);
            nbr.entry(o[1]).or_default().push(o[0]);
        }
        if nbr.is_empty() || nbr.values().any(|x| x.len() != 2) {
            return false;
        }
        let start = *nbr.keys().next().unwrap();
        let (mut prev, mut cur, mut len) = (start, nbr[&start][0], 1);
        while cur != start {
            let nx = if nbr[&cur][0] == prev { nbr[&cur][1] } else { nbr[&cur][0] };
            prev = cur;
            cur = nx;
            len += 1;
        }
        if len != nbr.len() {
            return false;
        }
    }
    euler_characteristic(f) == 2
}

/// Isomorphism-class representatives of 2-spheres on exactly `n` vertices.
pub fn enumerate_2spheres(n: u32) -> Vec<Facets> {
    let target = 2 * n as usize - 4;
    let mut found: Vec<Facets> = Vec::new();
    let mut facets: Vec<Vec<u32>> = vec![vec![0, 1, 2]];
    let mut count: BTreeMap<(u32, u32), u8> = BTreeMap::new();
    for e in [(0, 1), (0, 2), (1, 2)] {
        count.insert(e, 1);
    }
    search(n, target, &mut facets, &mut count, &mut found);
    found
}

fn search(
    n: u32,
    target: usize,
    facets: &mut Vec<Vec<u32>>,
    count: &mut BTreeMap<(u32, u32), u8>,
    found: &mut Vec<Facets>,
) {
    let open = count.iter().find(|(_, &c)| c == 1).map(|(&e, _)| e);
    let Some((a, b)) = open else {
        if facets.len() == target && is_sphere(facets, n) {
            let cand = facets.clone();
            let sc = signed(&cand, &vec![1; cand.len()]);
            let known = found.iter().any(|g| {
                let sg = signed(g, &vec![1; g.len()]);
                find_isomorphism(&sc, &sg, false, 1).is_some()
            });
            if !known {
                found.push(cand);
            }
        }
        return;
    };
    if facets.len() >= target {
        return;
    }
    // only allow a new vertex if it is the least unused one (kills relabelings)
    let used_max = facets.iter().flatten().copied().max().unwrap();
    for c in 0..n.min(used_max + 2) {
        if c == a || c == b {
            continue;
        }
        let mut t = vec![a, b, c];
        t.sort_unstable();
        if facets.contains(&t) {
            continue;
        }
        let es = [edge(a, b), edge(a, c), edge(b, c)];
        if es.iter().any(|e| count.get(e).copied().unwrap_or(0) >= 2) {
            continue;
        }
        for e in es {
            *count.entry(e).or_insert(0) += 1;
        }
        facets.push(t);
        search(n, target, facets, count, found);
        facets.pop();
        for e in es {
            let c = count.get_mut(&e).unwrap();
            *c -= 1;
            if *c == 0 {
                count.remove(&e);
            }
        }
    }
}

/// True if some automorphism of the sphere reverses its orientation.
pub fn has_reflection(f: &[Vec<u32>], signs: &[i64]) -> bool {
    let s = signed(f, signs);
    find_isomorphism(&s, &s, true, -1).is_some()
}

/// Coherent signs by propagation, or `None` when non-orientable.
pub fn orient(f: &[Vec<u32>]) -> Option<Vec<i64>> {
    let f: Vec<Vec<u32>> = crate::sorted_facets(f);
    let mut signs = vec![0i64; f.len()];
    let mut ridges: BTreeMap<Vec<u32>, Vec<(usize, usize)>> = BTreeMap::new();
    for (fi, s) in f.iter().enumerate() {
        for i in 0..s.len() {
            let mut r = s.clone();
            r.remove(i);
            ridges.entry(r).or_default().push((fi, i));
        }
    }
    if ridges.values().any(|inc| inc.len() != 2) {
        return None;
    }
    let mut adj: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); f.len()];
    for inc in ridges.values() {
        let ((a, ia), (b, ib)) = (inc[0], inc[1]);
        adj[a].push((ia, b, ib));
        adj[b].push((ib, a, ia));
    }
    for seed in 0..f.len() {
        if signs[seed] != 0 {
            continue;
        }
        signs[seed] = 1;
        let mut stack = vec![seed];
        while let Some(a) = stack.pop() {
            for &(ia, b, ib) in &adj[a] {
                let induced = if ia % 2 == 0 { signs[a] } else { -signs[a] };
                let sb = if ib % 2 == 0 { -induced } else { induced };
                if signs[b] == 0 {
                    signs[b] = sb;
                    stack.push(b);
                } else if signs[b] != sb {
                    return None;
                }
            }
        }
    }
    Some(signs)
}
