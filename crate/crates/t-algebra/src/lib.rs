//! Chains of oriented sphere classes with the link differential and the join
//! product, local cochains, the chain `f♯(K)`, the sphere `L_β` of a move and
//! the homotopy `s`.

pub mod chain;
pub mod cochain;
pub mod error;
pub mod homotopy;
pub mod json;
pub mod rational;
pub mod simplicial;

pub use chain::{alpha_cycle, boundary_t, join_product_t, sphere_class, SphereChain};
pub use cochain::{delta_eval, LocalCochain};
pub use error::AlgebraError;
pub use json::{ChainJson, CochainJson};
pub use homotopy::{d_eval, delta_edge_eval, edge_delta_sign, s_eval, sphere_from_move, MoveSphere};
pub use rational::Q;
pub use simplicial::{f_sharp, SimplicialChain};
