//! Sphere and manifold checks that need no move search.

use crate::complex::Complex;
use crate::oriented::orient;
use crate::surface::Rotation;

/// Outcome of a sphere test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<C> {
    Yes(C),
    No(String),
    Unknown(String),
}

impl<C> Verdict<C> {
    pub fn is_yes(&self) -> bool {
        matches!(self, Verdict::Yes(_))
    }
}

/// Decides whether `k` is a combinatorial sphere when `dim k <= 2`.
/// Returns `None` for higher dimensions.
pub fn low_dim_sphere(k: &Complex) -> Option<Verdict<()>> {
    let no = |m: &str| Some(Verdict::No(m.to_string()));
    match k.dim() {
        -1 => Some(Verdict::Yes(())),
        0 => {
            if k.num_vertices() == 2 {
                Some(Verdict::Yes(()))
            } else {
                no("a 0-sphere has exactly two points")
            }
        }
        1 => {
            if !k.is_pure() {
                return no("not pure");
            }
            if k.vertices().iter().any(|&v| k.degree(v) != 2) {
                return no("some vertex does not have degree 2");
            }
            if !k.is_connected() {
                return no("disconnected");
            }
            Some(Verdict::Yes(()))
        }
        2 => {
            if !k.is_closed_pseudomanifold() {
                return no("not a closed pseudomanifold");
            }
            if !k.is_connected() {
                return no("disconnected");
            }
            for &v in k.vertices() {
                let l = k.link(&crate::Simplex::vertex(v)).unwrap();
                if !matches!(low_dim_sphere(&l), Some(Verdict::Yes(_))) {
                    return no(&format!("link of vertex {v} is not a cycle"));
                }
            }
            let chi = k.euler_characteristic();
            if chi != 2 {
                return no(&format!("Euler characteristic {chi}"));
            }
            Some(Verdict::Yes(()))
        }
        _ => None,
    }
}

/// True if `k` is a connected oriented closed surface with cyclic vertex links.
pub fn is_orientable_surface(k: &Complex) -> bool {
    k.dim() == 2
        && k.is_connected()
        && orient(k).ok().and_then(|oc| Rotation::new(&oc)).is_some()
}
