#![allow(dead_code)]

use simplicial_core::{orient, Complex, OrientedComplex, Simplex};

pub fn cx(f: &[Vec<u32>]) -> Complex {
    Complex::from_facets(f.iter().cloned()).unwrap()
}

pub fn oc(f: &[Vec<u32>]) -> OrientedComplex {
    orient(&cx(f)).unwrap()
}

pub fn s(v: &[u32]) -> Simplex {
    Simplex::new(v.iter().copied()).unwrap()
}

pub fn facets_of(k: &OrientedComplex) -> Vec<Vec<u32>> {
    k.facets().iter().map(|f| f.vertices().to_vec()).collect()
}

pub fn signs_of(k: &OrientedComplex) -> Vec<i64> {
    k.signs().iter().map(|&x| x as i64).collect()
}
