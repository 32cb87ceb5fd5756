//! Kinds of elementary cycles, the values of `c` on them and the local
//! patterns that identify a commutation square.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use simplicial_core::{OrientedComplex, Rotation, Simplex, Vertex};
use t_algebra::rational::frac;
use t_algebra::Q;

use crate::error::Gamma2Error;
use pachner_engine::BistellarMove;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CycleKind {
    CommA,
    CommB,
    CommC,
    CommD,
    CommE,
    CommF,
    CommG,
    CommH,
    CommI,
    SpecA,
    SpecB,
    SpecC,
}

impl CycleKind {
    pub fn arity(self) -> usize {
        use CycleKind::*;
        match self {
            CommA | CommD | CommG => 0,
            CommB | CommC | CommE | CommF | CommH | CommI => 2,
            SpecA => 3,
            SpecB => 4,
            SpecC => 5,
        }
    }

    pub fn is_commutation(self) -> bool {
        !matches!(self, CycleKind::SpecA | CycleKind::SpecB | CycleKind::SpecC)
    }
}

impl fmt::Display for CycleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use CycleKind::*;
        let s = match self {
            CommA => "Comm-a",
            CommB => "Comm-b",
            CommC => "Comm-c",
            CommD => "Comm-d",
            CommE => "Comm-e",
            CommF => "Comm-f",
            CommG => "Comm-g",
            CommH => "Comm-h",
            CommI => "Comm-i",
            SpecA => "Spec-a",
            SpecB => "Spec-b",
            SpecC => "Spec-c",
        };
        f.write_str(s)
    }
}

/// `(q - p) / ((p+q+2)(p+q+3)(p+q+4))`
pub fn rho(p: u32, q: u32) -> Q {
    let s = (p + q) as i64;
    frac(q as i64 - p as i64, (s + 2) * (s + 3) * (s + 4))
}

/// `1 / ((p+2)(p+3))`
pub fn omega(p: u32) -> Q {
    let p = p as i64;
    frac(1, (p + 2) * (p + 3))
}

/// Value of `c` on the cycle of `kind` with `params`, in the reading of
/// the tabulated configuration.
pub fn c_value(kind: CycleKind, params: &[u32]) -> Result<Q, Gamma2Error> {
    use CycleKind::*;
    if params.len() != kind.arity() {
        return Err(Gamma2Error::InvalidParams(format!(
            "{kind} takes {} parameters, got {}",
            kind.arity(),
            params.len()
        )));
    }
    let w = |i: usize| omega(params[i]);
    let twelfth = frac(1, 12);
    Ok(match kind {
        CommA | CommD | CommG => Q::zero(),
        CommB | CommE | CommH => rho(params[0], params[1]),
        CommC | CommI => rho(0, params[1]) - rho(0, params[0]),
        CommF => rho(0, params[1]) + rho(0, params[0]),
        SpecA => w(0) - w(1) + w(2) - twelfth,
        SpecB => w(0) - w(1) - w(2) + w(3),
        SpecC => w(0) + w(1) + w(2) + w(3) + w(4) - twelfth,
    })
}

/// A reading of a commutation square at one of its corners.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reading {
    pub kind: CycleKind,
    pub params: Vec<u32>,
    /// `±1` relating the tabulated value to `c` on the square.
    pub sign: i8,
}

impl Reading {
    pub fn value(&self) -> Q {
        let v = c_value(self.kind, &self.params).expect("arity checked at construction");
        if self.sign > 0 {
            v
        } else {
            -v
        }
    }
}

pub(crate) fn rotation(oc: &OrientedComplex) -> Option<Rotation> {
    Rotation::new(oc)
}

/// Whether `t` follows `b` in the positive cyclic order of triangle `tri`.
pub(crate) fn directed(r: &Rotation, tri: &Simplex, b: Vertex, t: Vertex) -> bool {
    let third = tri.vertices().iter().copied().find(|&x| x != b && x != t).expect("triangle");
    r.next(b, t) == third
}

/// Triangles strictly between `t1` and `t2` turning counter-clockwise
/// around `v`, starting from `t1`.
pub(crate) fn between(r: &Rotation, v: Vertex, t1: &Simplex, t2: &Simplex) -> Option<u32> {
    let others: Vec<Vertex> = t1.vertices().iter().copied().filter(|&x| x != v).collect();
    let mut x = if r.next(v, others[0]) == others[1] { others[0] } else { others[1] };
    let deg = r.degree(v);
    for count in 0..deg {
        x = r.next(v, x);
        let tri = Simplex::from_distinct([v, x, r.next(v, x)]);
        if &tri == t2 {
            return Some(count as u32);
        }
    }
    None
}

fn sub(a: usize, b: usize) -> Option<u32> {
    a.checked_sub(b).map(|x| x as u32)
}

fn reading(kind: CycleKind, params: Vec<u32>, sign: i8) -> Option<Reading> {
    Some(Reading { kind, params, sign })
}

fn ins_ins(r: &Rotation, s1: &Simplex, s2: &Simplex) -> Option<Reading> {
    let shared = s1.intersection(s2);
    match shared.len() {
        0 => reading(CycleKind::CommA, vec![], 1),
        1 => {
            let v = shared.vertices()[0];
            let q = between(r, v, s1, s2)?;
            let p = sub(r.degree(v), 2 + q as usize)?;
            reading(CycleKind::CommB, vec![p, q], 1)
        }
        2 => {
            let (x, y) = (shared.vertices()[0], shared.vertices()[1]);
            let (b, t) = if directed(r, s1, x, y) { (x, y) } else { (y, x) };
            let p = sub(r.degree(t), 2)?;
            let q = sub(r.degree(b), 2)?;
            reading(CycleKind::CommC, vec![p, q], 1)
        }
        _ => None,
    }
}

fn ins_flip(r: &Rotation, s1: &Simplex, f: &BistellarMove) -> Option<Reading> {
    let square = f.sigma.union(&f.tau);
    let shared = s1.intersection(&square);
    match shared.len() {
        0 => reading(CycleKind::CommD, vec![], 1),
        1 => {
            let v = shared.vertices()[0];
            if !f.tau.contains(v) {
                return None;
            }
            let t2 = f.sigma.with(v);
            let q = between(r, v, s1, &t2)?;
            let p = sub(r.degree(v), 2 + q as usize)?;
            reading(CycleKind::CommE, vec![p, q], 1)
        }
        2 => {
            let t = shared.vertices().iter().copied().find(|&x| f.sigma.contains(x))?;
            let b = shared.vertices().iter().copied().find(|&x| f.tau.contains(x))?;
            let q = sub(r.degree(t), 3)?;
            let p = sub(r.degree(b), 2)?;
            let sign = if directed(r, s1, b, t) { 1 } else { -1 };
            reading(CycleKind::CommF, vec![p, q], sign)
        }
        _ => None,
    }
}

fn flip_flip(r: &Rotation, f1: &BistellarMove, f2: &BistellarMove) -> Option<Reading> {
    let q1 = f1.sigma.union(&f1.tau);
    let q2 = f2.sigma.union(&f2.tau);
    let shared = q1.intersection(&q2);
    match shared.len() {
        0 => reading(CycleKind::CommG, vec![], 1),
        1 => {
            let v = shared.vertices()[0];
            if !(f1.tau.contains(v) && f2.tau.contains(v)) {
                return None;
            }
            let (t1, t2) = (f1.sigma.with(v), f2.sigma.with(v));
            let q = between(r, v, &t1, &t2)?;
            let p = sub(r.degree(v), 2 + q as usize)?;
            reading(CycleKind::CommH, vec![p, q], 1)
        }
        2 => {
            let t = shared.vertices().iter().copied().find(|&x| f1.sigma.contains(x) && f2.tau.contains(x))?;
            let b = shared.vertices().iter().copied().find(|&x| f1.tau.contains(x) && f2.sigma.contains(x))?;
            let q = sub(r.degree(t), 3)?;
            let p = sub(r.degree(b), 3)?;
            let sign = if directed(r, &f1.sigma.with(b), b, t) { 1 } else { -1 };
            reading(CycleKind::CommI, vec![p, q], sign)
        }
        _ => None,
    }
}

/// Reads the square spanned by `n1` then `n2` at `corner`, when both are
/// insertions or flips and the configuration is one of the tabulated ones.
pub fn read_corner(corner: &OrientedComplex, n1: &BistellarMove, n2: &BistellarMove) -> Option<Reading> {
    let usable = |m: &BistellarMove| m.is_insertion() || m.sigma.len() == 2;
    if corner.dim() != 2 || !usable(n1) || !usable(n2) {
        return None;
    }
    let r = rotation(corner)?;
    match (n1.is_insertion(), n2.is_insertion()) {
        (true, true) => ins_ins(&r, &n1.sigma, &n2.sigma),
        (true, false) => ins_flip(&r, &n1.sigma, n2),
        (false, true) => ins_flip(&r, &n2.sigma, n1).map(|x| Reading { sign: -x.sign, ..x }),
        (false, false) => flip_flip(&r, n1, n2),
    }
}
