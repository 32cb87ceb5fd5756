//! Chains in the algebra of oriented sphere classes.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use simplicial_core::canonical::{decode_oriented, oriented_key_pair};
use simplicial_core::{OrientedComplex, Simplex};

use crate::error::AlgebraError;
use crate::rational::{mod2, Q};

/// Normal form of an oriented sphere class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SphereClass {
    /// `⟨L⟩ = sign · ⟨rep(key)⟩`, where `key` is the lesser of the keys of `L` and `-L`.
    Chiral { key: Vec<u8>, sign: i8 },
    /// `⟨L⟩ = ⟨-L⟩`: a class of order two.
    Achiral { key: Vec<u8> },
}

/// Class of `l`. The empty sphere gets the empty key.
pub fn sphere_class(l: &OrientedComplex) -> SphereClass {
    if l.dim() < 0 {
        return SphereClass::Chiral { key: Vec::new(), sign: l.signs().first().copied().unwrap_or(1) };
    }
    let (k, r) = oriented_key_pair(l);
    match k.cmp(&r) {
        std::cmp::Ordering::Equal => SphereClass::Achiral { key: k },
        std::cmp::Ordering::Less => SphereClass::Chiral { key: k, sign: 1 },
        std::cmp::Ordering::Greater => SphereClass::Chiral { key: r, sign: -1 },
    }
}

/// Representative sphere of a stored key.
pub fn representative(key: &[u8]) -> OrientedComplex {
    if key.is_empty() {
        return OrientedComplex::from_signed_facets_unchecked(vec![(Simplex::empty(), 1)]);
    }
    decode_oriented(key).expect("stored keys decode")
}

/// A finite combination of classes of oriented `(grade - 1)`-spheres.
///
/// Over the rationals, classes of order two are dropped. In integral mode
/// they are kept with coefficients reduced modulo 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphereChain {
    grade: usize,
    integral: bool,
    terms: BTreeMap<Vec<u8>, Q>,
    achiral: BTreeMap<Vec<u8>, Q>,
}

impl SphereChain {
    pub fn zero(grade: usize) -> Self {
        SphereChain { grade, integral: false, terms: BTreeMap::new(), achiral: BTreeMap::new() }
    }

    /// Integer coefficients, keeping the 2-torsion part.
    pub fn zero_integral(grade: usize) -> Self {
        SphereChain { integral: true, ..Self::zero(grade) }
    }

    pub fn generator(l: &OrientedComplex) -> Self {
        let mut c = Self::zero((l.dim() + 1) as usize);
        c.add_sphere(l, &Q::one());
        c
    }

    pub fn generator_integral(l: &OrientedComplex) -> Self {
        let mut c = Self::zero_integral((l.dim() + 1) as usize);
        c.add_sphere(l, &Q::one());
        c
    }

    fn like(&self, grade: usize) -> Self {
        SphereChain { grade, integral: self.integral, terms: BTreeMap::new(), achiral: BTreeMap::new() }
    }

    pub fn grade(&self) -> usize {
        self.grade
    }

    pub fn is_integral(&self) -> bool {
        self.integral
    }

    /// Chiral terms, keyed by the lesser oriented key.
    pub fn terms(&self) -> &BTreeMap<Vec<u8>, Q> {
        &self.terms
    }

    /// Order-two terms (integral mode only), coefficients in {0, 1}.
    pub fn torsion_terms(&self) -> &BTreeMap<Vec<u8>, Q> {
        &self.achiral
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.achiral.is_empty()
    }

    pub fn add_sphere(&mut self, l: &OrientedComplex, c: &Q) {
        assert_eq!((l.dim() + 1) as usize, self.grade, "sphere of the wrong dimension");
        self.add_class(sphere_class(l), c);
    }

    pub fn add_class(&mut self, class: SphereClass, c: &Q) {
        match class {
            SphereClass::Chiral { key, sign } => {
                let v = if sign > 0 { c.clone() } else { -c.clone() };
                add_into(&mut self.terms, key, v);
            }
            SphereClass::Achiral { key } => {
                if self.integral {
                    let e = self.achiral.entry(key).or_insert_with(Q::zero);
                    *e = mod2(&(e.clone() + c));
                    self.achiral.retain(|_, v| !v.is_zero());
                }
            }
        }
    }

    pub fn add(&self, other: &SphereChain) -> SphereChain {
        assert_eq!(self.grade, other.grade);
        let mut out = self.clone();
        for (k, v) in &other.terms {
            add_into(&mut out.terms, k.clone(), v.clone());
        }
        for (k, v) in &other.achiral {
            out.add_class(SphereClass::Achiral { key: k.clone() }, v);
        }
        out
    }

    pub fn scale(&self, c: &Q) -> SphereChain {
        let mut out = self.like(self.grade);
        for (k, v) in &self.terms {
            add_into(&mut out.terms, k.clone(), v * c);
        }
        for (k, v) in &self.achiral {
            out.add_class(SphereClass::Achiral { key: k.clone() }, &(v * c));
        }
        out
    }

    pub fn neg(&self) -> SphereChain {
        self.scale(&-Q::one())
    }

    pub fn sub(&self, other: &SphereChain) -> SphereChain {
        self.add(&other.neg())
    }

    /// Every term with its representative and coefficient.
    fn each(&self) -> impl Iterator<Item = (OrientedComplex, &Q)> + '_ {
        self.terms
            .iter()
            .chain(self.achiral.iter())
            .map(|(k, v)| (representative(k), v))
    }
}

fn add_into(map: &mut BTreeMap<Vec<u8>, Q>, key: Vec<u8>, v: Q) {
    let e = map.entry(key.clone()).or_insert_with(Q::zero);
    *e += v;
    if e.is_zero() {
        map.remove(&key);
    }
}

/// `∂⟨L⟩ = Σ_v ⟨link v⟩`; zero on grade 1.
pub fn boundary_t(x: &SphereChain) -> SphereChain {
    assert!(x.grade >= 1, "boundary needs grade at least 1");
    let mut out = x.like(x.grade - 1);
    if x.grade == 1 {
        return out;
    }
    for (l, c) in x.each() {
        for &v in l.vertices() {
            out.add_sphere(&l.link(&Simplex::vertex(v)).unwrap(), c);
        }
    }
    out
}

/// Bilinear extension of `⟨L1⟩⟨L2⟩ = ⟨L1 * L2⟩`.
pub fn join_product_t(a: &SphereChain, b: &SphereChain) -> SphereChain {
    assert_eq!(a.integral, b.integral);
    let mut out = a.like(a.grade + b.grade);
    for (la, ca) in a.each() {
        for (lb, cb) in b.each() {
            let (j, _) = la.join(&lb);
            out.add_sphere(&j, &(ca * cb));
        }
    }
    out
}

/// `Σ_v ⟨link v⟩` for a closed oriented manifold, checked to be a cycle.
pub fn alpha_cycle(k: &OrientedComplex) -> Result<SphereChain, AlgebraError> {
    let mut out = SphereChain::zero(k.dim() as usize);
    for &v in k.vertices() {
        out.add_sphere(&k.link(&Simplex::vertex(v))?, &Q::one());
    }
    if out.grade() >= 1 && !boundary_t(&out).is_zero() {
        return Err(AlgebraError::NotClosedCycle("vertex-link sum has nonzero boundary".into()));
    }
    Ok(out)
}
