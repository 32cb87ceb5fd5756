//! The cocycle `h`, the local formula `f` for the first rational Pontryagin
//! class of combinatorial manifolds, the dual chains it produces and the
//! Stiefel-Whitney chains of a barycentric subdivision.

pub mod dual;
pub mod error;
pub mod local;
pub mod sw;
pub mod xi;

pub use dual::{p1_dual_direct, p1_dual_local, p1_number};
pub use error::PontryaginError;
pub use local::{eta_chain, h_value, local_f, zeta_chain, LAMBDA};
pub use sw::{check_closed_manifold, is_mod2_boundary, sw_duals, Mod2Chain, SwDuals};
pub use xi::XiCache;
