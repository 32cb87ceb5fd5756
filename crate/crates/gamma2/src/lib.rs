//! The move graph of oriented 2-spheres: complexity, rational edge chains,
//! elementary cycles with the values of the cocycle `c`, and decomposition
//! of arbitrary cycles into elementary ones.

pub mod chain;
pub mod classify;
pub mod complexity;
pub mod cycles;
pub mod decompose;
pub mod error;

pub use chain::{ChainEntry, Gamma2Chain};
pub use classify::{c_value, omega, read_corner, rho, CycleKind, Reading};
pub use complexity::{edge_complexity, move_complexity, sphere_complexity, Complexity};
pub use cycles::{commutation_cycle, walk, spec_a, spec_b, spec_b_from_diagonal, spec_c, ElementaryCycle};
pub use decompose::{c_of_cycle, decompose_cycle, Decomposition, Order, Term};
pub use error::Gamma2Error;
