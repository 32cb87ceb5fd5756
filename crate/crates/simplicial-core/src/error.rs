use thiserror::Error;

use crate::simplex::{Simplex, Vertex};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("vertex {0} repeated inside a facet")]
    DuplicateVertexInFacet(Vertex),
    #[error("facet {0:?} is contained in facet {1:?}")]
    FacetContainment(Simplex, Simplex),
    #[error("empty facet list")]
    EmptyFacetList,
    #[error("simplex {0:?} is not in the complex")]
    SimplexNotInComplex(Simplex),
    #[error("not a closed pseudomanifold: {0}")]
    NotPseudomanifold(String),
    #[error("complex is not orientable")]
    NonOrientable,
    #[error("orientation data does not match the facets: {0}")]
    BadOrientation(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("malformed canonical key")]
    BadKey,
}
