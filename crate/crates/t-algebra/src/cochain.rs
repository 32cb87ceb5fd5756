//! Cochains on sphere classes given by finite tables.

use std::collections::BTreeMap;

use num_traits::Zero;
use simplicial_core::{OrientedComplex, Simplex};

use crate::chain::{sphere_class, SphereChain, SphereClass};
use crate::rational::Q;

/// A function on classes of oriented `(grade - 1)`-spheres with
/// `f(⟨-L⟩) = -f(⟨L⟩)`, zero outside a finite table.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LocalCochain {
    pub grade: usize,
    table: BTreeMap<Vec<u8>, Q>,
}

impl LocalCochain {
    pub fn new(grade: usize) -> Self {
        LocalCochain { grade, table: BTreeMap::new() }
    }

    /// Sets `f(⟨L⟩) = value`. Classes of order two must get 0; returns false otherwise.
    pub fn set(&mut self, l: &OrientedComplex, value: Q) -> bool {
        match sphere_class(l) {
            SphereClass::Chiral { key, sign } => {
                let v = if sign > 0 { value } else { -value };
                if v.is_zero() {
                    self.table.remove(&key);
                } else {
                    self.table.insert(key, v);
                }
                true
            }
            SphereClass::Achiral { .. } => value.is_zero(),
        }
    }

    /// Sets the value on a stored (lesser) key directly.
    pub fn set_key(&mut self, key: Vec<u8>, value: Q) {
        if value.is_zero() {
            self.table.remove(&key);
        } else {
            self.table.insert(key, value);
        }
    }

    pub fn table(&self) -> &BTreeMap<Vec<u8>, Q> {
        &self.table
    }

    pub fn value(&self, l: &OrientedComplex) -> Q {
        match sphere_class(l) {
            SphereClass::Chiral { key, sign } => {
                let v = self.table.get(&key).cloned().unwrap_or_else(Q::zero);
                if sign > 0 {
                    v
                } else {
                    -v
                }
            }
            SphereClass::Achiral { .. } => Q::zero(),
        }
    }

    /// Pairing with a chain of the same grade.
    pub fn pair(&self, x: &SphereChain) -> Q {
        assert_eq!(x.grade(), self.grade);
        x.terms()
            .iter()
            .map(|(k, c)| c * self.table.get(k).cloned().unwrap_or_else(Q::zero))
            .fold(Q::zero(), |a, b| a + b)
    }
}

/// `(δf)(⟨L⟩) = (-1)^n Σ_v f(⟨link v⟩)` for `f` of grade `n` and an `n`-sphere `L`.
pub fn delta_with<F: Fn(&OrientedComplex) -> Q>(grade: usize, f: F, l: &OrientedComplex) -> Q {
    assert_eq!(l.dim(), grade as isize, "delta evaluates on spheres of dimension equal to the grade");
    let s: Q = l
        .vertices()
        .iter()
        .map(|&v| f(&l.link(&Simplex::vertex(v)).unwrap()))
        .fold(Q::zero(), |a, b| a + b);
    if grade % 2 == 0 {
        s
    } else {
        -s
    }
}

pub fn delta_eval(f: &LocalCochain, l: &OrientedComplex) -> Q {
    delta_with(f.grade, |x| f.value(x), l)
}
