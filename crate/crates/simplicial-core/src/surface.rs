//! Rotation systems of oriented closed surfaces.

use std::collections::BTreeMap;

use crate::oriented::OrientedComplex;
use crate::simplex::{permutation_sign, Simplex, Vertex};

/// Counter-clockwise neighbour cycles of an oriented surface.
///
/// A positively oriented triangle `(a, b, c)` makes `c` follow `b` around `a`.
#[derive(Clone, Debug)]
pub struct Rotation {
    succ: BTreeMap<Vertex, BTreeMap<Vertex, Vertex>>,
}

impl Rotation {
    /// Returns `None` unless the complex is 2-dimensional with every vertex
    /// link a single cycle.
    pub fn new(oc: &OrientedComplex) -> Option<Rotation> {
        if oc.dim() != 2 {
            return None;
        }
        let mut succ: BTreeMap<Vertex, BTreeMap<Vertex, Vertex>> = BTreeMap::new();
        for (f, s) in oc.signed_facets() {
            let v = f.vertices();
            let (a, b, c) = if s > 0 { (v[0], v[1], v[2]) } else { (v[0], v[2], v[1]) };
            for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                if succ.entry(x).or_default().insert(y, z).is_some() {
                    return None;
                }
            }
        }
        for m in succ.values() {
            let start = *m.keys().next()?;
            let mut cur = start;
            let mut steps = 0;
            loop {
                cur = *m.get(&cur)?;
                steps += 1;
                if cur == start {
                    break;
                }
                if steps > m.len() {
                    return None;
                }
            }
            if steps != m.len() {
                return None;
            }
        }
        Some(Rotation { succ })
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.succ.keys().copied()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.succ.get(&v).map_or(0, |m| m.len())
    }

    /// Next neighbour of `v` after `u`, counter-clockwise.
    pub fn next(&self, v: Vertex, u: Vertex) -> Vertex {
        self.succ[&v][&u]
    }

    /// Previous neighbour of `v` before `u`, counter-clockwise.
    pub fn prev(&self, v: Vertex, u: Vertex) -> Vertex {
        let m = &self.succ[&v];
        *m.iter().find(|(_, &w)| w == u).map(|(k, _)| k).expect("not a neighbour")
    }

    pub fn is_adjacent(&self, v: Vertex, u: Vertex) -> bool {
        self.succ.get(&v).is_some_and(|m| m.contains_key(&u))
    }

    /// Neighbours of `v` counter-clockwise, starting from `start`.
    pub fn cycle_from(&self, v: Vertex, start: Vertex) -> Vec<Vertex> {
        let m = &self.succ[&v];
        let mut out = vec![start];
        let mut cur = m[&start];
        while cur != start {
            out.push(cur);
            cur = m[&cur];
        }
        out
    }

    /// Neighbours of `v` counter-clockwise, starting from the least one.
    pub fn cycle(&self, v: Vertex) -> Vec<Vertex> {
        let start = *self.succ[&v].keys().next().expect("isolated vertex");
        self.cycle_from(v, start)
    }

    /// Darts `(u, v)` for every ordered adjacent pair.
    pub fn darts(&self) -> Vec<(Vertex, Vertex)> {
        self.succ
            .iter()
            .flat_map(|(&u, m)| m.keys().map(move |&v| (u, v)))
            .collect()
    }

    /// Rotation of the mirrored surface.
    pub fn mirrored(&self) -> Rotation {
        let succ = self
            .succ
            .iter()
            .map(|(&v, m)| (v, m.iter().map(|(&a, &b)| (b, a)).collect()))
            .collect();
        Rotation { succ }
    }

    /// Breadth-first map code from the dart `u -> v`, plus the vertex labels
    /// it induces. Returns `None` as soon as the code exceeds `bound`.
    pub(crate) fn dart_code(
        &self,
        u: Vertex,
        v: Vertex,
        bound: Option<&[u16]>,
    ) -> Option<(Vec<u16>, BTreeMap<Vertex, u16>)> {
        const SEP: u16 = u16::MAX;
        let mut label: BTreeMap<Vertex, u16> = BTreeMap::new();
        let mut first: BTreeMap<Vertex, Vertex> = BTreeMap::new();
        let mut order: Vec<Vertex> = vec![u];
        label.insert(u, 0);
        first.insert(u, v);
        let mut code: Vec<u16> = Vec::with_capacity(8 * self.succ.len());
        let mut head = 0;
        let mut tight = bound.is_some();
        while head < order.len() {
            let w = order[head];
            head += 1;
            let start = first[&w];
            let mut x = start;
            loop {
                let l = match label.get(&x) {
                    Some(&l) => l,
                    None => {
                        let l = order.len() as u16;
                        label.insert(x, l);
                        first.insert(x, w);
                        order.push(x);
                        l
                    }
                };
                code.push(l);
                if tight && !push_ok(&code, bound, &mut tight) {
                    return None;
                }
                x = self.next(w, x);
                if x == start {
                    break;
                }
            }
            code.push(SEP);
            if tight && !push_ok(&code, bound, &mut tight) {
                return None;
            }
        }
        Some((code, label))
    }
}

fn push_ok(code: &[u16], bound: Option<&[u16]>, tight: &mut bool) -> bool {
    let b = bound.unwrap();
    let i = code.len() - 1;
    if i >= b.len() {
        return true;
    }
    match code[i].cmp(&b[i]) {
        std::cmp::Ordering::Greater => false,
        std::cmp::Ordering::Less => {
            *tight = false;
            true
        }
        std::cmp::Ordering::Equal => true,
    }
}

/// Oriented facet list of a surface under a vertex relabeling.
pub(crate) fn relabeled_signed_facets(
    oc: &OrientedComplex,
    label: &BTreeMap<Vertex, u16>,
) -> Vec<(Simplex, i8)> {
    oc.signed_facets()
        .map(|(f, s)| {
            let seq: Vec<Vertex> = f.vertices().iter().map(|v| label[v] as Vertex).collect();
            (Simplex::from_distinct(seq.iter().copied()), s * permutation_sign(&seq))
        })
        .collect()
}
