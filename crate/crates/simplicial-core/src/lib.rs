//! Abstract simplicial complexes: construction, links and joins, barycentric
//! subdivision, orientations, canonical forms and low-dimensional sphere tests.

pub mod canonical;
pub mod complex;
pub mod error;
pub mod format;
pub mod oriented;
pub mod recognition;
pub mod simplex;
pub mod surface;

pub use canonical::{canonical_form, canonical_form_oriented, oriented_key, CanonicalKey};
pub use complex::Complex;
pub use error::ComplexError;
pub use oriented::{orient, OrientedComplex};
pub use recognition::Verdict;
pub use simplex::{permutation_sign, Simplex, Vertex};
pub use surface::Rotation;
