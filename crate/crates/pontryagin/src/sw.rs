//! Mod-2 chains of all `k`-simplices of the barycentric subdivision.

use std::collections::{BTreeSet, HashMap};

use pachner_engine::is_combinatorial_sphere;
use simplicial_core::{Complex, Simplex, Verdict};

use crate::error::PontryaginError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mod2Chain {
    pub degree: usize,
    pub simplices: BTreeSet<Simplex>,
}

impl Mod2Chain {
    pub fn boundary(&self) -> Mod2Chain {
        let mut out = BTreeSet::new();
        if self.degree > 0 {
            for s in &self.simplices {
                for f in s.boundary_faces() {
                    if !out.remove(&f) {
                        out.insert(f);
                    }
                }
            }
        }
        Mod2Chain { degree: self.degree.saturating_sub(1), simplices: out }
    }

    pub fn is_cycle(&self) -> bool {
        self.degree == 0 || self.boundary().simplices.is_empty()
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }
}

/// `W_0, ..., W_n` on the barycentric subdivision `K'`, whose vertex `i`
/// is the barycentre of `faces[i]`.
#[derive(Clone, Debug)]
pub struct SwDuals {
    pub subdivision: Complex,
    pub faces: Vec<Simplex>,
    pub chains: Vec<Mod2Chain>,
}

/// Checks that `k` is closed and every vertex link is a combinatorial sphere.
pub fn check_closed_manifold(k: &Complex, budget: usize) -> Result<(), PontryaginError> {
    if !k.is_closed_pseudomanifold() {
        return Err(PontryaginError::NotClosedManifold("some ridge is not in exactly two facets".into()));
    }
    for &v in k.vertices() {
        let lk = k.link(&Simplex::vertex(v))?;
        match is_combinatorial_sphere(&lk, budget, 0) {
            Verdict::Yes(_) => {}
            Verdict::No(m) => return Err(PontryaginError::NotClosedManifold(format!("link of {v}: {m}"))),
            Verdict::Unknown(m) => {
                return Err(PontryaginError::NotClosedManifold(format!("link of {v} not recognised: {m}")))
            }
        }
    }
    Ok(())
}

pub fn sw_duals(k: &Complex, budget: usize) -> Result<SwDuals, PontryaginError> {
    check_closed_manifold(k, budget)?;
    let (sub, faces) = k.barycentric_subdivision();
    let n = k.dim() as usize;
    let mut chains = Vec::with_capacity(n + 1);
    for d in 0..=n {
        let c = Mod2Chain { degree: d, simplices: sub.faces_of_dim(d as isize).into_iter().collect() };
        if !c.is_cycle() {
            return Err(PontryaginError::NotACycle(format!("W_{d}")));
        }
        chains.push(c);
    }
    Ok(SwDuals { subdivision: sub, faces, chains })
}

/// Whether a mod-2 cycle of `k` bounds, by column reduction of the
/// boundary map on `(degree + 1)`-simplices.
pub fn is_mod2_boundary(k: &Complex, c: &Mod2Chain) -> bool {
    if c.is_empty() {
        return true;
    }
    let index: HashMap<Simplex, u32> = k
        .faces_of_dim(c.degree as isize)
        .into_iter()
        .enumerate()
        .map(|(i, s)| (s, i as u32))
        .collect();
    let column = |faces: &mut dyn Iterator<Item = Simplex>| -> Vec<u32> {
        let mut v: Vec<u32> = faces.filter_map(|f| index.get(&f).copied()).collect();
        v.sort_unstable();
        v
    };
    let mut pivots: HashMap<u32, Vec<u32>> = HashMap::new();
    let reduce = |mut v: Vec<u32>, pivots: &HashMap<u32, Vec<u32>>| -> Vec<u32> {
        while let Some(p) = v.last().and_then(|low| pivots.get(low)) {
            v = xor_sorted(&v, p);
        }
        v
    };
    for s in k.faces_of_dim(c.degree as isize + 1) {
        let v = reduce(column(&mut s.boundary_faces()), &pivots);
        if let Some(&low) = v.last() {
            pivots.insert(low, v);
        }
    }
    let target = column(&mut c.simplices.iter().cloned());
    reduce(target, &pivots).is_empty()
}

fn xor_sorted(a: &[u32], b: &[u32]) -> Vec<u32> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::with_capacity(a.len() + b.len());
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}
