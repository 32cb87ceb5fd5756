//! Complexity of 2-spheres and of their moves, kept in sixths.

use std::fmt;

use pachner_engine::edge::sphere_complexity_sixths;
use pachner_engine::{apply_move, BistellarMove, EdgeKey};
use serde::{Deserialize, Serialize};
use simplicial_core::OrientedComplex;
use t_algebra::rational::frac;
use t_algebra::Q;

/// A non-negative multiple of 1/6.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Complexity(pub u32);

impl Complexity {
    pub fn sixths(self) -> u32 {
        self.0
    }

    pub fn value(self) -> Q {
        frac(self.0 as i64, 6)
    }

    /// The residue `b` of `6a` modulo 6.
    pub fn residue(self) -> u32 {
        self.0 % 6
    }
}

impl fmt::Display for Complexity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (k, b) = (self.0 / 6, self.0 % 6);
        match b {
            0 => write!(f, "{k}"),
            1 => write!(f, "{k}+1/6"),
            2 => write!(f, "{k}+1/3"),
            3 => write!(f, "{k}+1/2"),
            4 => write!(f, "{k}+2/3"),
            _ => write!(f, "{k}+5/6"),
        }
    }
}

/// `k`, `k+1/3` or `k+2/3` for minimal degree 3, 4 or at least 5.
pub fn sphere_complexity(l: &OrientedComplex) -> Complexity {
    Complexity(sphere_complexity_sixths(l))
}

fn combine(a: Complexity, b: Complexity) -> Complexity {
    if a == b {
        Complexity(a.0 + 1)
    } else {
        a.max(b)
    }
}

pub fn move_complexity(host: &OrientedComplex, mv: &BistellarMove) -> Result<Complexity, pachner_engine::MoveError> {
    let result = apply_move(host, mv)?;
    Ok(combine(sphere_complexity(host), sphere_complexity(&result)))
}

pub fn edge_complexity(e: &EdgeKey) -> Complexity {
    Complexity(e.complexity_sixths())
}
