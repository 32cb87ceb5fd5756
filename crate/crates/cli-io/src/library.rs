//! Complexes shipped with the tool, each checked against its expected
//! invariants when loaded.

use pachner_engine::is_combinatorial_sphere;
use simplicial_core::format::{parse_any, Parsed};
use simplicial_core::{orient, Complex, Simplex};

#[derive(Clone, Debug)]
pub enum FacetData {
    /// Facet-list text or JSON shipped in `data/`.
    Text(&'static str),
    SimplexBoundary(usize),
    CrossPolytope(u32),
}

#[derive(Clone, Debug)]
pub struct ComplexLibraryEntry {
    pub name: String,
    pub data: FacetData,
    pub f_vector: Vec<usize>,
    pub euler: i64,
    pub orientable: bool,
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn cross_polytope(k: u32) -> Complex {
    let mut out = vec![Vec::new()];
    for i in 0..k {
        out = out
            .into_iter()
            .flat_map(|f: Vec<u32>| {
                [2 * i, 2 * i + 1].map(|v| {
                    let mut g = f.clone();
                    g.push(v);
                    g
                })
            })
            .collect();
    }
    Complex::from_facets(out).expect("cross-polytope facets")
}

pub fn entries() -> Vec<ComplexLibraryEntry> {
    let mut out = Vec::new();
    for n in 1..=6usize {
        let f: Vec<usize> = (0..n).map(|i| binomial(n + 1, i + 1)).collect();
        out.push(ComplexLibraryEntry {
            name: format!("simplex-boundary-{n}"),
            data: FacetData::SimplexBoundary(n),
            euler: if n % 2 == 1 { 2 } else { 0 },
            f_vector: f,
            orientable: true,
        });
    }
    for k in 2..=5u32 {
        let f: Vec<usize> = (0..k as usize).map(|i| (1 << (i + 1)) * binomial(k as usize, i + 1)).collect();
        out.push(ComplexLibraryEntry {
            name: format!("cross-polytope-{k}"),
            data: FacetData::CrossPolytope(k),
            euler: if k % 2 == 1 { 2 } else { 0 },
            f_vector: f,
            orientable: true,
        });
    }
    let text = |name: &str, data, f_vector: Vec<usize>, euler, orientable| ComplexLibraryEntry {
        name: name.to_string(),
        data: FacetData::Text(data),
        f_vector,
        euler,
        orientable,
    };
    out.push(text("octahedron", include_str!("../data/octahedron.facets"), vec![6, 12, 8], 2, true));
    out.push(text("icosahedron", include_str!("../data/icosahedron.facets"), vec![12, 30, 20], 2, true));
    out.push(text("rp2_6", include_str!("../data/rp2_6.facets"), vec![6, 15, 10], 1, false));
    out.push(text("cp2_9", include_str!("../data/cp2_9.json"), vec![9, 36, 84, 90, 36], 3, true));
    out
}

pub fn names() -> Vec<String> {
    entries().into_iter().map(|e| e.name).collect()
}

impl ComplexLibraryEntry {
    /// Builds the complex and checks the recorded invariants.
    pub fn load(&self) -> Result<Parsed, String> {
        let parsed = match &self.data {
            FacetData::Text(t) => parse_any(t).map_err(|e| format!("{}: {e}", self.name))?,
            FacetData::SimplexBoundary(n) => Parsed::Plain(Complex::simplex_boundary(*n)),
            FacetData::CrossPolytope(k) => Parsed::Plain(cross_polytope(*k)),
        };
        let k = parsed.complex();
        let bad = |what: &str| Err(format!("bundled complex {} fails validation: {what}", self.name));
        if k.f_vector() != self.f_vector {
            return bad("f-vector");
        }
        if k.euler_characteristic() != self.euler {
            return bad("Euler characteristic");
        }
        if orient(k).is_ok() != self.orientable {
            return bad("orientability");
        }
        if self.name == "cp2_9" {
            for &v in k.vertices() {
                let lk = k.link(&Simplex::vertex(v)).map_err(|e| e.to_string())?;
                if lk.num_vertices() != 8 || !is_combinatorial_sphere(&lk, 20_000, 0).is_yes() {
                    return bad("vertex link is not an 8-vertex 3-sphere");
                }
            }
        }
        Ok(parsed)
    }
}

pub fn lookup(name: &str) -> Option<ComplexLibraryEntry> {
    entries().into_iter().find(|e| e.name == name)
}
