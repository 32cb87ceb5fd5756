//! Canonical labelings and isomorphism keys.
//!
//! Connected oriented surfaces use breadth-first map codes over all darts.
//! Everything else goes through colour refinement plus an individualisation
//! search, keeping the lexicographically least relabeled facet list.

use std::collections::BTreeMap;

use crate::complex::Complex;
use crate::error::ComplexError;
use crate::oriented::{orient, OrientedComplex};
use crate::simplex::{permutation_sign, Simplex, Vertex};
use crate::surface::{relabeled_signed_facets, Rotation};

const TAG_PLAIN: u8 = 0x01;
const TAG_PLAIN_ORIENTED: u8 = 0x02;
const TAG_MAP: u8 = 0x11;
const TAG_MAP_ORIENTED: u8 = 0x12;

/// Result of canonicalisation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalKey {
    /// Old vertex -> canonical vertex.
    pub labeling: BTreeMap<Vertex, Vertex>,
    /// Identifies the unoriented isomorphism class.
    pub key: Vec<u8>,
    /// Identifies the oriented class; present for oriented input.
    pub oriented_key: Option<Vec<u8>>,
}

fn encode(tag: u8, n: usize, facets: &[(Simplex, i8)], oriented: bool) -> Vec<u8> {
    let mut out = Vec::with_capacity(5 + facets.len() * 8);
    out.push(tag);
    out.extend_from_slice(&(n as u16).to_be_bytes());
    out.extend_from_slice(&(facets.len() as u16).to_be_bytes());
    for (f, _) in facets {
        out.push(f.len() as u8);
        for &v in f.vertices() {
            out.extend_from_slice(&(v as u16).to_be_bytes());
        }
    }
    if oriented {
        out.extend(facets.iter().map(|(_, s)| if *s > 0 { 0u8 } else { 1u8 }));
    }
    out
}

fn decode_parts(key: &[u8]) -> Result<(u8, Vec<(Simplex, i8)>), ComplexError> {
    let bad = || ComplexError::BadKey;
    let tag = *key.first().ok_or_else(bad)?;
    let oriented = matches!(tag, TAG_PLAIN_ORIENTED | TAG_MAP_ORIENTED);
    if !matches!(tag, TAG_PLAIN | TAG_PLAIN_ORIENTED | TAG_MAP | TAG_MAP_ORIENTED) || key.len() < 5 {
        return Err(bad());
    }
    let nf = u16::from_be_bytes([key[3], key[4]]) as usize;
    let mut pos = 5;
    let mut facets = Vec::with_capacity(nf);
    for _ in 0..nf {
        let len = *key.get(pos).ok_or_else(bad)? as usize;
        pos += 1;
        let mut vs = Vec::with_capacity(len);
        for _ in 0..len {
            let b = key.get(pos..pos + 2).ok_or_else(bad)?;
            vs.push(u16::from_be_bytes([b[0], b[1]]) as Vertex);
            pos += 2;
        }
        facets.push((Simplex::new(vs).map_err(|_| bad())?, 1i8));
    }
    if oriented {
        for f in facets.iter_mut() {
            f.1 = if *key.get(pos).ok_or_else(bad)? == 0 { 1 } else { -1 };
            pos += 1;
        }
    }
    if pos != key.len() {
        return Err(bad());
    }
    Ok((tag, facets))
}

/// Rebuilds the canonical representative of an unoriented key.
pub fn decode(key: &[u8]) -> Result<Complex, ComplexError> {
    let (_, facets) = decode_parts(key)?;
    Ok(Complex::from_maximal(facets.into_iter().map(|(f, _)| f).collect()))
}

/// Rebuilds the canonical representative of an oriented key.
pub fn decode_oriented(key: &[u8]) -> Result<OrientedComplex, ComplexError> {
    let (tag, facets) = decode_parts(key)?;
    if !matches!(tag, TAG_PLAIN_ORIENTED | TAG_MAP_ORIENTED) {
        return Err(ComplexError::BadKey);
    }
    Ok(OrientedComplex::from_signed_facets_unchecked(facets))
}

/// Oriented key of the reversed complex.
pub fn mirror_oriented_key(key: &[u8]) -> Result<Vec<u8>, ComplexError> {
    Ok(oriented_key(&decode_oriented(key)?.reversed()))
}

fn relabel_signed(oc_pairs: &[(Simplex, i8)], label: &[Vertex]) -> Vec<(Simplex, i8)> {
    let mut out: Vec<(Simplex, i8)> = oc_pairs
        .iter()
        .map(|(f, s)| {
            let seq: Vec<Vertex> = f.vertices().iter().map(|&v| label[v as usize]).collect();
            (Simplex::from_distinct(seq.iter().copied()), s * permutation_sign(&seq))
        })
        .collect();
    out.sort();
    out
}

/// Colour refinement and individualisation over a complex with vertices
/// renumbered `0..n`.
struct Refiner {
    n: usize,
    facets: Vec<Vec<usize>>,
    incident: Vec<Vec<usize>>,
}

impl Refiner {
    fn new(facets: &[Simplex], index: &BTreeMap<Vertex, usize>) -> Self {
        let n = index.len();
        let facets: Vec<Vec<usize>> = facets
            .iter()
            .map(|f| f.vertices().iter().map(|v| index[v]).collect())
            .collect();
        let mut incident = vec![Vec::new(); n];
        for (i, f) in facets.iter().enumerate() {
            for &v in f {
                incident[v].push(i);
            }
        }
        Refiner { n, facets, incident }
    }

    fn refine(&self, colors: &mut [u32]) {
        let mut classes = count_classes(colors);
        loop {
            let sigs: Vec<(u32, Vec<Vec<u32>>)> = (0..self.n)
                .map(|v| {
                    let mut around: Vec<Vec<u32>> = self.incident[v]
                        .iter()
                        .map(|&fi| {
                            let mut c: Vec<u32> = self.facets[fi]
                                .iter()
                                .filter(|&&w| w != v)
                                .map(|&w| colors[w])
                                .collect();
                            c.sort_unstable();
                            c
                        })
                        .collect();
                    around.sort();
                    (colors[v], around)
                })
                .collect();
            let mut uniq: Vec<&(u32, Vec<Vec<u32>>)> = sigs.iter().collect();
            uniq.sort();
            uniq.dedup();
            for v in 0..self.n {
                colors[v] = uniq.binary_search(&&sigs[v]).unwrap() as u32;
            }
            let now = uniq.len();
            if now == classes {
                break;
            }
            classes = now;
        }
    }

    /// Visits every leaf of the individualisation tree.
    fn leaves<F: FnMut(&[u32])>(&self, colors: Vec<u32>, visit: &mut F) {
        let mut colors = colors;
        self.refine(&mut colors);
        if count_classes(&colors) == self.n {
            visit(&colors);
            return;
        }
        let mut sizes = vec![0usize; self.n];
        for &c in &colors {
            sizes[c as usize] += 1;
        }
        let target = (0..self.n).find(|&c| sizes[c] > 1).unwrap() as u32;
        for v in 0..self.n {
            if colors[v] != target {
                continue;
            }
            let next: Vec<u32> = (0..self.n)
                .map(|w| {
                    let base = 2 * colors[w];
                    if colors[w] == target && w != v {
                        base + 1
                    } else {
                        base
                    }
                })
                .collect();
            self.leaves(next, visit);
        }
    }
}

fn count_classes(colors: &[u32]) -> usize {
    let mut c: Vec<u32> = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

struct GenericResult {
    key: Vec<u8>,
    key_label: Vec<Vertex>,
    oriented: Option<(Vec<u8>, Vec<Vec<Vertex>>, Vec<u8>)>,
}

/// Runs the generic search. With signs, also returns the oriented key, all
/// labelings attaining it, and the key of the reversed orientation.
fn generic(facets: &[Simplex], vertices: &[Vertex], signs: Option<&[i8]>) -> GenericResult {
    let index: BTreeMap<Vertex, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let refiner = Refiner::new(facets, &index);
    let local: Vec<(Simplex, i8)> = facets
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let s = Simplex::from_sorted(f.vertices().iter().map(|v| index[v] as Vertex).collect());
            (s, signs.map_or(1, |sg| sg[i]))
        })
        .collect();
    let n = vertices.len();
    let mut best_plain: Option<(Vec<u8>, Vec<Vertex>)> = None;
    let mut best_or: Option<(Vec<u8>, Vec<Vec<Vertex>>)> = None;
    let mut best_rev: Option<Vec<u8>> = None;
    refiner.leaves(vec![0; n], &mut |colors| {
        let label: Vec<Vertex> = colors.to_vec();
        let relabeled = relabel_signed(&local, &label);
        let plain = encode(TAG_PLAIN, n, &relabeled, false);
        if best_plain.as_ref().is_none_or(|(b, _)| plain < *b) {
            best_plain = Some((plain, label.clone()));
        }
        if signs.is_some() {
            let ork = encode(TAG_PLAIN_ORIENTED, n, &relabeled, true);
            match &mut best_or {
                Some((b, labels)) if ork == *b => labels.push(label.clone()),
                Some((b, _)) if ork > *b => {}
                _ => best_or = Some((ork, vec![label.clone()])),
            }
            let rev: Vec<(Simplex, i8)> = relabeled.iter().map(|(f, s)| (f.clone(), -s)).collect();
            let rk = encode(TAG_PLAIN_ORIENTED, n, &rev, true);
            if best_rev.as_ref().is_none_or(|b| rk < *b) {
                best_rev = Some(rk);
            }
        }
    });
    let (key, key_label) = best_plain.expect("no leaves");
    GenericResult {
        key,
        key_label,
        oriented: best_or.map(|(k, ls)| (k, ls, best_rev.unwrap())),
    }
}

fn min_darts(rot: &Rotation) -> (Vec<u16>, Vec<BTreeMap<Vertex, u16>>) {
    let mut best: Option<Vec<u16>> = None;
    let mut labels: Vec<BTreeMap<Vertex, u16>> = Vec::new();
    for (u, v) in rot.darts() {
        if let Some((code, label)) = rot.dart_code(u, v, best.as_deref()) {
            match &best {
                Some(b) if code == *b => labels.push(label),
                Some(b) if code > *b => {}
                _ => {
                    best = Some(code);
                    labels = vec![label];
                }
            }
        }
    }
    (best.unwrap_or_default(), labels)
}

fn surface_rotation(oc: &OrientedComplex) -> Option<Rotation> {
    if oc.dim() != 2 || !oc.complex().is_connected() {
        return None;
    }
    Rotation::new(oc)
}

fn map_key(oc: &OrientedComplex, label: &BTreeMap<Vertex, u16>, oriented: bool) -> Vec<u8> {
    let mut pairs = relabeled_signed_facets(oc, label);
    pairs.sort();
    let tag = if oriented { TAG_MAP_ORIENTED } else { TAG_MAP };
    encode(tag, oc.num_vertices(), &pairs, oriented)
}

fn to_labeling(label: &BTreeMap<Vertex, u16>) -> BTreeMap<Vertex, Vertex> {
    label.iter().map(|(&a, &b)| (a, b as Vertex)).collect()
}

fn surface_unoriented(oc: &OrientedComplex, rot: &Rotation) -> (Vec<u8>, BTreeMap<Vertex, Vertex>) {
    let (c1, l1) = min_darts(rot);
    let mirror = rot.mirrored();
    let (c2, l2) = min_darts(&mirror);
    if c1 <= c2 {
        (map_key(oc, &l1[0], false), to_labeling(&l1[0]))
    } else {
        let rev = oc.reversed();
        (map_key(&rev, &l2[0], false), to_labeling(&l2[0]))
    }
}

/// Canonical form of an unoriented complex.
pub fn canonical_form(k: &Complex) -> CanonicalKey {
    if k.dim() == 2 && k.is_connected() {
        if let Ok(oc) = orient(k) {
            if let Some(rot) = Rotation::new(&oc) {
                let (key, labeling) = surface_unoriented(&oc, &rot);
                return CanonicalKey { labeling, key, oriented_key: None };
            }
        }
    }
    let g = generic(k.facets(), k.vertices(), None);
    CanonicalKey {
        labeling: k.vertices().iter().copied().zip(g.key_label).collect(),
        key: g.key,
        oriented_key: None,
    }
}

/// Canonical form of an oriented complex; the labeling attains the oriented key.
pub fn canonical_form_oriented(oc: &OrientedComplex) -> CanonicalKey {
    if let Some(rot) = surface_rotation(oc) {
        let (key, _) = surface_unoriented(oc, &rot);
        let (_, labels) = min_darts(&rot);
        return CanonicalKey {
            labeling: to_labeling(&labels[0]),
            key,
            oriented_key: Some(map_key(oc, &labels[0], true)),
        };
    }
    let g = generic(oc.facets(), oc.vertices(), Some(oc.signs()));
    let (ok, labels, _) = g.oriented.unwrap();
    CanonicalKey {
        labeling: oc.vertices().iter().copied().zip(labels[0].iter().copied()).collect(),
        key: g.key,
        oriented_key: Some(ok),
    }
}

/// Oriented key alone.
pub fn oriented_key(oc: &OrientedComplex) -> Vec<u8> {
    if let Some(rot) = surface_rotation(oc) {
        let (_, labels) = min_darts(&rot);
        return map_key(oc, &labels[0], true);
    }
    generic(oc.facets(), oc.vertices(), Some(oc.signs())).oriented.unwrap().0
}

/// Oriented keys of `oc` and of its reversal.
pub fn oriented_key_pair(oc: &OrientedComplex) -> (Vec<u8>, Vec<u8>) {
    if let Some(rot) = surface_rotation(oc) {
        let (_, l1) = min_darts(&rot);
        let (_, l2) = min_darts(&rot.mirrored());
        return (map_key(oc, &l1[0], true), map_key(&oc.reversed(), &l2[0], true));
    }
    let (k, _, r) = generic(oc.facets(), oc.vertices(), Some(oc.signs())).oriented.unwrap();
    (k, r)
}

/// True iff some automorphism reverses the orientation.
pub fn is_achiral(oc: &OrientedComplex) -> bool {
    let (a, b) = oriented_key_pair(oc);
    a == b
}

/// All orientation-preserving relabelings onto the canonical representative.
pub fn canonical_labelings(oc: &OrientedComplex) -> (Vec<u8>, Vec<BTreeMap<Vertex, Vertex>>) {
    if let Some(rot) = surface_rotation(oc) {
        let (_, labels) = min_darts(&rot);
        let key = map_key(oc, &labels[0], true);
        return (key, labels.iter().map(to_labeling).collect());
    }
    let g = generic(oc.facets(), oc.vertices(), Some(oc.signs()));
    let (key, labels, _) = g.oriented.unwrap();
    let maps = labels
        .into_iter()
        .map(|l| oc.vertices().iter().copied().zip(l).collect())
        .collect();
    (key, maps)
}

/// Oriented key together with the least images of `marks` over all
/// canonical labelings (so automorphic markings give equal results).
pub fn marked_oriented_key(oc: &OrientedComplex, marks: &[Simplex]) -> (Vec<u8>, Vec<Simplex>) {
    let (key, maps) = canonical_labelings(oc);
    let best = maps
        .iter()
        .map(|m| marks.iter().map(|s| s.map(|v| m[&v])).collect::<Vec<_>>())
        .min()
        .unwrap_or_default();
    (key, best)
}

/// Orientation-preserving automorphisms, as vertex maps.
pub fn oriented_automorphisms(oc: &OrientedComplex) -> Vec<BTreeMap<Vertex, Vertex>> {
    let (_, maps) = canonical_labelings(oc);
    compose_with_inverse(&maps)
}

/// All automorphisms of an unoriented complex.
pub fn automorphisms(k: &Complex) -> Vec<BTreeMap<Vertex, Vertex>> {
    let index: BTreeMap<Vertex, usize> = k.vertices().iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let refiner = Refiner::new(k.facets(), &index);
    let local: Vec<(Simplex, i8)> = k
        .facets()
        .iter()
        .map(|f| (Simplex::from_sorted(f.vertices().iter().map(|v| index[v] as Vertex).collect()), 1))
        .collect();
    let n = k.num_vertices();
    let mut best: Option<(Vec<u8>, Vec<Vec<Vertex>>)> = None;
    refiner.leaves(vec![0; n], &mut |colors| {
        let label = colors.to_vec();
        let code = encode(TAG_PLAIN, n, &relabel_signed(&local, &label), false);
        match &mut best {
            Some((b, ls)) if code == *b => ls.push(label),
            Some((b, _)) if code > *b => {}
            _ => best = Some((code, vec![label])),
        }
    });
    let maps: Vec<BTreeMap<Vertex, Vertex>> = best
        .unwrap()
        .1
        .into_iter()
        .map(|l| k.vertices().iter().copied().zip(l).collect())
        .collect();
    compose_with_inverse(&maps)
}

fn compose_with_inverse(maps: &[BTreeMap<Vertex, Vertex>]) -> Vec<BTreeMap<Vertex, Vertex>> {
    let inv: BTreeMap<Vertex, Vertex> = maps[0].iter().map(|(&a, &b)| (b, a)).collect();
    let mut out: Vec<BTreeMap<Vertex, Vertex>> = maps
        .iter()
        .map(|m| m.iter().map(|(&a, &b)| (a, inv[&b])).collect())
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Relabels `oc` onto its canonical representative.
pub fn canonical_representative(oc: &OrientedComplex) -> OrientedComplex {
    let ck = canonical_form_oriented(oc);
    oc.relabel(|v| ck.labeling[&v])
}

pub fn is_isomorphic(a: &Complex, b: &Complex) -> bool {
    a.num_vertices() == b.num_vertices()
        && a.facets().len() == b.facets().len()
        && canonical_form(a).key == canonical_form(b).key
}

pub fn is_oriented_isomorphic(a: &OrientedComplex, b: &OrientedComplex) -> bool {
    a.num_vertices() == b.num_vertices()
        && a.facets().len() == b.facets().len()
        && oriented_key(a) == oriented_key(b)
}
