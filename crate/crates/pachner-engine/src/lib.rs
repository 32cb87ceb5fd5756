//! Bistellar moves on oriented combinatorial spheres, classes of moves as
//! edges of the move graph, and reduction of spheres to simplex boundaries.

pub mod edge;
pub mod error;
pub mod moves;
pub mod recognize;
pub mod reduce;
pub mod sequence;

pub use edge::{edge_key, sphere_complexity_sixths, EdgeClass, EdgeKey, MarkedKey};
pub use error::MoveError;
pub use moves::{apply_move, enumerate_moves, induced_vertex_moves, BistellarMove, InducedMove};
pub use recognize::is_combinatorial_sphere;
pub use reduce::reduce_to_boundary;
pub use sequence::MoveSequence;
