//! Elementary cycles of the move graph of oriented 2-spheres.

use pachner_engine::moves::check_move;
use pachner_engine::{apply_move, enumerate_moves, BistellarMove};
use simplicial_core::canonical::is_oriented_isomorphic;
use simplicial_core::{OrientedComplex, Rotation, Simplex, Vertex};
use t_algebra::rational::q;
use t_algebra::Q;

use crate::chain::Gamma2Chain;
use crate::classify::{c_value, read_corner, rotation, CycleKind, Reading};
use crate::error::Gamma2Error;

/// A closed walk of moves, its chain and the value of `c` on it.
#[derive(Clone, Debug)]
pub struct ElementaryCycle {
    pub kind: CycleKind,
    pub params: Vec<u32>,
    /// `c(chain) = sign * c_value(kind, params)`.
    pub sign: i8,
    pub start: OrientedComplex,
    pub moves: Vec<BistellarMove>,
    pub chain: Gamma2Chain,
}

impl ElementaryCycle {
    pub fn value(&self) -> Q {
        let v = c_value(self.kind, &self.params).expect("params match kind");
        if self.sign > 0 {
            v
        } else {
            -v
        }
    }
}

fn na(msg: impl Into<String>) -> Gamma2Error {
    Gamma2Error::NotApplicable(msg.into())
}

/// Applies `moves` in turn; returns their chain and the final sphere.
pub fn walk(start: &OrientedComplex, moves: &[BistellarMove]) -> Result<(Gamma2Chain, OrientedComplex), Gamma2Error> {
    let mut chain = Gamma2Chain::new();
    let mut cur = start.clone();
    let one = q(1);
    for mv in moves {
        check_move(&cur, mv).map_err(|e| na(e.to_string()))?;
        cur = chain.add_move(&cur, mv, &one);
    }
    Ok((chain, cur))
}

fn closed_walk(start: &OrientedComplex, moves: &[BistellarMove], literal: bool) -> Result<Gamma2Chain, Gamma2Error> {
    let (chain, end) = walk(start, moves)?;
    let closed = if literal { &end == start } else { is_oriented_isomorphic(&end, start) };
    if !closed {
        return Err(Gamma2Error::ClosureFailure(format!("{} moves do not return to the start", moves.len())));
    }
    if !chain.is_cycle() {
        return Err(Gamma2Error::ClosureFailure("chain has nonzero boundary".into()));
    }
    Ok(chain)
}

/// The move with support `sigma` on `k`, if any; insertions use `fresh`.
pub fn move_at(k: &OrientedComplex, sigma: &Simplex, fresh: Vertex) -> Option<BistellarMove> {
    let n = k.dim();
    if n < 0 || !k.complex().contains(sigma) {
        return None;
    }
    let n = n as usize;
    if sigma.len() == n + 1 {
        let mv = BistellarMove::new(sigma.clone(), Simplex::vertex(fresh));
        return check_move(k, &mv).ok().map(|_| mv);
    }
    let mut tau = Simplex::empty();
    for f in k.complex().facets_containing(sigma) {
        tau = tau.union(&f.difference(sigma));
    }
    let mv = BistellarMove::new(sigma.clone(), tau);
    check_move(k, &mv).ok().map(|_| mv)
}

fn fresh(k: &OrientedComplex) -> Vertex {
    k.complex().smallest_unused_vertex()
}

/// The four moves of the commutation square of `sigma1` and `sigma2` at `l`.
pub fn commutation_moves(
    l: &OrientedComplex,
    sigma1: &Simplex,
    sigma2: &Simplex,
) -> Result<(Vec<OrientedComplex>, [BistellarMove; 2]), Gamma2Error> {
    if l.complex().contains(&sigma1.union(sigma2)) {
        return Err(na(format!("{sigma1:?} and {sigma2:?} span a face")));
    }
    let m1 = move_at(l, sigma1, fresh(l)).ok_or_else(|| na(format!("no move at {sigma1:?}")))?;
    let m2 = move_at(l, sigma2, fresh(l)).ok_or_else(|| na(format!("no move at {sigma2:?}")))?;
    let l2 = apply_move(l, &m1)?;
    let m2b = move_at(&l2, sigma2, fresh(&l2)).ok_or_else(|| na("second move is destroyed by the first"))?;
    if !m2.is_insertion() && m2b.tau != m2.tau {
        return Err(na("second move changes after the first"));
    }
    let l3 = apply_move(&l2, &m2b)?;
    check_move(&l3, &m1.inverse()).map_err(|_| na("first move does not undo"))?;
    let l4 = apply_move(&l3, &m1.inverse())?;
    check_move(&l4, &m2b.inverse()).map_err(|_| na("second move does not undo"))?;
    let back = apply_move(&l4, &m2b.inverse())?;
    if &back != l {
        return Err(Gamma2Error::ClosureFailure("commutation square does not close".into()));
    }
    Ok((vec![l.clone(), l2, l3, l4], [m1, m2b]))
}

/// Every reading of the square at its corners, with the sign relating it
/// to the square started at the first corner.
pub fn commutation_readings(corners: &[OrientedComplex], m1: &BistellarMove, m2: &BistellarMove) -> Vec<Reading> {
    let (i1, i2) = (m1.inverse(), m2.inverse());
    let setups: [(&OrientedComplex, &BistellarMove, &BistellarMove, i8); 4] = [
        (&corners[0], m1, m2, 1),
        (&corners[1], &i1, m2, -1),
        (&corners[2], &i1, &i2, 1),
        (&corners[3], m1, &i2, -1),
    ];
    let mut out = Vec::new();
    for (c, a, b, s) in setups {
        for (x, y, swap) in [(a, b, 1i8), (b, a, -1i8)] {
            if let Some(r) = read_corner(c, x, y) {
                out.push(Reading { sign: r.sign * s * swap, ..r });
            }
        }
    }
    out
}

/// The commutation cycle of the moves supported on `sigma1` and `sigma2`.
pub fn commutation_cycle(l: &OrientedComplex, sigma1: &Simplex, sigma2: &Simplex) -> Result<ElementaryCycle, Gamma2Error> {
    let (corners, [m1, m2]) = commutation_moves(l, sigma1, sigma2)?;
    let moves = vec![m1.clone(), m2.clone(), m1.inverse(), m2.inverse()];
    let chain = closed_walk(l, &moves, true)?;
    let readings = commutation_readings(&corners, &m1, &m2);
    let first = readings
        .first()
        .cloned()
        .ok_or_else(|| Gamma2Error::UnrecognizedConfiguration(format!("square of {sigma1:?} and {sigma2:?}")))?;
    let v = first.value();
    if readings.iter().any(|r| r.value() != v) {
        return Err(Gamma2Error::UnrecognizedConfiguration(format!(
            "corners of the square of {sigma1:?} and {sigma2:?} disagree"
        )));
    }
    Ok(ElementaryCycle { kind: first.kind, params: first.params, sign: first.sign, start: l.clone(), moves, chain })
}

fn tri(a: Vertex, b: Vertex, c: Vertex) -> Simplex {
    Simplex::from_distinct([a, b, c])
}

fn edge(a: Vertex, b: Vertex) -> Simplex {
    Simplex::from_distinct([a, b])
}

fn deg_minus(r: &Rotation, v: Vertex, k: usize) -> Result<u32, Gamma2Error> {
    r.degree(v).checked_sub(k).map(|x| x as u32).ok_or_else(|| na(format!("vertex {v} has degree below {k}")))
}

fn rot(l: &OrientedComplex) -> Result<Rotation, Gamma2Error> {
    rotation(l).ok_or_else(|| na("not an oriented surface"))
}

/// The triangle cycle around a degree-3 vertex `x1` of `top`, started at
/// its neighbour `c`.
pub fn spec_a(top: &OrientedComplex, x1: Vertex, c: Vertex) -> Result<ElementaryCycle, Gamma2Error> {
    let r = rot(top)?;
    if r.degree(x1) != 3 || !r.is_adjacent(x1, c) {
        return Err(na(format!("{x1} is not of degree 3 next to {c}")));
    }
    let a = r.prev(x1, c);
    let t = r.next(x1, c);
    let x2 = fresh(top);
    let moves = vec![
        BistellarMove::new(tri(x1, c, t), Simplex::vertex(x2)),
        BistellarMove::new(edge(x1, c), edge(a, x2)),
        BistellarMove::new(Simplex::vertex(x1), tri(a, x2, t)),
    ];
    let chain = closed_walk(top, &moves, false)?;
    let params = vec![deg_minus(&r, a, 2)?, deg_minus(&r, t, 2)?, deg_minus(&r, c, 2)?];
    Ok(ElementaryCycle { kind: CycleKind::SpecA, params, sign: 1, start: top.clone(), moves, chain })
}

/// The five-move cycle around a degree-4 vertex `x` of `s2`, with `tr`
/// one of its neighbours.
pub fn spec_b(s2: &OrientedComplex, x: Vertex, tr: Vertex) -> Result<ElementaryCycle, Gamma2Error> {
    let r = rot(s2)?;
    if r.degree(x) != 4 || !r.is_adjacent(x, tr) {
        return Err(na(format!("{x} is not of degree 4 next to {tr}")));
    }
    let tl = r.next(x, tr);
    let bl = r.next(x, tl);
    let br = r.next(x, bl);
    if r.is_adjacent(tl, br) || r.is_adjacent(bl, tr) {
        return Err(na("opposite corners already adjacent"));
    }
    let moves = vec![
        BistellarMove::new(edge(x, tr), edge(tl, br)),
        BistellarMove::new(Simplex::vertex(x), tri(tl, bl, br)),
        BistellarMove::new(edge(tl, br), edge(bl, tr)),
        BistellarMove::new(tri(bl, br, tr), Simplex::vertex(x)),
        BistellarMove::new(edge(bl, tr), edge(tl, x)),
    ];
    let chain = closed_walk(s2, &moves, true)?;
    let params = vec![deg_minus(&r, bl, 2)?, deg_minus(&r, tl, 2)?, deg_minus(&r, tr, 2)?, deg_minus(&r, br, 2)?];
    Ok(ElementaryCycle { kind: CycleKind::SpecB, params, sign: 1, start: s2.clone(), moves, chain })
}

/// The same five-move cycle, entered at the sphere before the insertion:
/// `bl`–`tr` is the diagonal that the cycle first crosses.
pub fn spec_b_from_diagonal(s0: &OrientedComplex, bl: Vertex, tr: Vertex) -> Result<ElementaryCycle, Gamma2Error> {
    let r = rot(s0)?;
    if !r.is_adjacent(bl, tr) {
        return Err(na(format!("{bl}{tr} is not an edge")));
    }
    let br = r.prev(bl, tr);
    let tl = r.next(bl, tr);
    let x = fresh(s0);
    let s1 = apply_move(s0, &BistellarMove::new(tri(bl, br, tr), Simplex::vertex(x)))?;
    let flip = BistellarMove::new(edge(bl, tr), edge(tl, x));
    check_move(&s1, &flip).map_err(|e| na(e.to_string()))?;
    let s2 = apply_move(&s1, &flip)?;
    spec_b(&s2, x, tr)
}

/// The pentagon cycle of flips on the fan at `p1` spanned by `p2` and the
/// next three neighbours counter-clockwise.
pub fn spec_c(s: &OrientedComplex, p1: Vertex, p2: Vertex) -> Result<ElementaryCycle, Gamma2Error> {
    let r = rot(s)?;
    if !r.is_adjacent(p1, p2) || r.degree(p1) < 4 {
        return Err(na(format!("no fan at {p1} from {p2}")));
    }
    let p3 = r.next(p1, p2);
    let p4 = r.next(p1, p3);
    let p5 = r.next(p1, p4);
    let p = [p1, p2, p3, p4, p5];
    let at = |i: usize| p[i % 5];
    let moves: Vec<BistellarMove> = [0usize, 2, 4, 1, 3]
        .iter()
        .map(|&i| BistellarMove::new(edge(at(i), at(i + 3)), edge(at(i + 2), at(i + 4))))
        .collect();
    let chain = closed_walk(s, &moves, true)?;
    let inside = [3, 1, 2, 2, 1];
    let params = (0..5).map(|i| deg_minus(&r, p[i], inside[i])).collect::<Result<Vec<_>, _>>()?;
    Ok(ElementaryCycle { kind: CycleKind::SpecC, params, sign: 1, start: s.clone(), moves, chain })
}

/// Commutation cycles of `first` with every other move at `l`.
pub fn commutation_cycles_with(l: &OrientedComplex, first: &Simplex) -> Vec<ElementaryCycle> {
    enumerate_moves(l)
        .iter()
        .filter(|m| &m.sigma != first)
        .filter_map(|m| commutation_cycle(l, first, &m.sigma).ok())
        .collect()
}

pub fn spec_a_cycles(top: &OrientedComplex) -> Vec<ElementaryCycle> {
    let Some(r) = rotation(top) else { return Vec::new() };
    let mut out = Vec::new();
    for v in r.vertices().filter(|&v| r.degree(v) == 3) {
        for c in r.cycle(v) {
            out.extend(spec_a(top, v, c).ok());
        }
    }
    out
}

pub fn spec_b_cycles(s2: &OrientedComplex) -> Vec<ElementaryCycle> {
    let Some(r) = rotation(s2) else { return Vec::new() };
    let mut out = Vec::new();
    for v in r.vertices().filter(|&v| r.degree(v) == 4) {
        for tr in r.cycle(v) {
            out.extend(spec_b(s2, v, tr).ok());
        }
    }
    out
}

pub fn spec_b_cycles_from_diagonals(s0: &OrientedComplex) -> Vec<ElementaryCycle> {
    let Some(r) = rotation(s0) else { return Vec::new() };
    r.darts().into_iter().filter_map(|(a, b)| spec_b_from_diagonal(s0, a, b).ok()).collect()
}

pub fn spec_c_cycles(s: &OrientedComplex) -> Vec<ElementaryCycle> {
    let Some(r) = rotation(s) else { return Vec::new() };
    r.darts().into_iter().filter_map(|(a, b)| spec_c(s, a, b).ok()).collect()
}
