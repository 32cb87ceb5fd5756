//! Isomorphism classes of 2-spheres with few vertices, grown from the
//! tetrahedron boundary by vertex insertions and closed under edge flips.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use pachner_engine::{apply_move, enumerate_moves};
use simplicial_core::canonical::{canonical_representative, is_achiral};
use simplicial_core::{canonical_form, orient, Complex, OrientedComplex};

/// One unoriented class, kept as its canonical oriented representative.
#[derive(Clone, Debug)]
pub struct SphereClassEntry {
    pub sphere: OrientedComplex,
    pub chiral: bool,
}

#[derive(Clone, Debug)]
pub struct Level {
    pub vertices: usize,
    pub classes: Vec<SphereClassEntry>,
}

impl Level {
    pub fn unoriented(&self) -> usize {
        self.classes.len()
    }

    pub fn oriented(&self) -> usize {
        self.classes.iter().map(|c| if c.chiral { 2 } else { 1 }).sum()
    }
}

fn offer(s: OrientedComplex, found: &mut BTreeMap<Vec<u8>, OrientedComplex>, frontier: &mut Vec<OrientedComplex>) {
    if let Entry::Vacant(e) = found.entry(canonical_form(s.complex()).key) {
        let rep = canonical_representative(&s);
        e.insert(rep.clone());
        frontier.push(rep);
    }
}

/// Levels for 4 up to `max_vertices` vertices.
pub fn enumerate_2spheres(max_vertices: usize) -> Vec<Level> {
    let mut levels = Vec::new();
    let mut prev: Vec<OrientedComplex> = Vec::new();
    for n in 4..=max_vertices {
        let mut found: BTreeMap<Vec<u8>, OrientedComplex> = BTreeMap::new();
        let mut frontier: Vec<OrientedComplex> = Vec::new();
        if n == 4 {
            let t = orient(&Complex::simplex_boundary(3)).expect("tetrahedron boundary");
            offer(t, &mut found, &mut frontier);
        } else {
            for s in &prev {
                for m in enumerate_moves(s).into_iter().filter(|m| m.is_insertion()) {
                    offer(apply_move(s, &m).expect("enumerated move"), &mut found, &mut frontier);
                }
            }
        }
        while let Some(s) = frontier.pop() {
            for m in enumerate_moves(&s).into_iter().filter(|m| m.sigma.len() == 2) {
                offer(apply_move(&s, &m).expect("enumerated move"), &mut found, &mut frontier);
            }
        }
        prev = found.values().cloned().collect();
        let classes = prev
            .iter()
            .map(|s| SphereClassEntry { sphere: s.clone(), chiral: !is_achiral(s) })
            .collect();
        levels.push(Level { vertices: n, classes });
    }
    levels
}
