//! Writing a cycle of the move graph as a rational combination of
//! elementary cycles, by induction on the largest edge complexity.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_traits::Zero;
use pachner_engine::edge::{edge_key, sphere_rank, EdgeClass};
use pachner_engine::{apply_move, enumerate_moves, BistellarMove, EdgeKey};
use simplicial_core::OrientedComplex;
use t_algebra::Q;

use crate::chain::Gamma2Chain;
use crate::complexity::{edge_complexity, Complexity};
use crate::cycles::{
    commutation_cycle, commutation_cycles_with, spec_a_cycles, spec_b_cycles, spec_b_cycles_from_diagonals,
    spec_c_cycles, ElementaryCycle,
};
use crate::error::Gamma2Error;

/// Which end of the sorted candidate lists the decomposition takes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Order {
    #[default]
    Forward,
    Reverse,
}

#[derive(Clone, Debug)]
pub struct Term {
    pub coefficient: Q,
    pub cycle: ElementaryCycle,
}

#[derive(Clone, Debug, Default)]
pub struct Decomposition {
    pub terms: Vec<Term>,
}

impl Decomposition {
    /// `Σ t_i c(γ_i)`.
    pub fn c(&self) -> Q {
        self.terms.iter().fold(Q::zero(), |acc, t| acc + &t.coefficient * t.cycle.value())
    }

    pub fn chain(&self) -> Gamma2Chain {
        self.terms.iter().fold(Gamma2Chain::new(), |acc, t| acc.add_scaled(&t.cycle.chain, &t.coefficient))
    }
}

const MAX_STEPS: usize = 1_000_000;

pub fn decompose_cycle(z: &Gamma2Chain, order: Order) -> Result<Decomposition, Gamma2Error> {
    if !z.is_cycle() {
        return Err(Gamma2Error::NotACycle);
    }
    let mut st = State { residual: z.clone(), out: Decomposition::default(), order };
    let mut steps = 0;
    while let Some(top) = st.residual.max_complexity() {
        steps += 1;
        if steps > MAX_STEPS {
            return Err(st.stuck("step limit reached"));
        }
        let target = st.pick_target(top);
        if top.residue() % 2 == 1 {
            st.odd_step(&target, top)?;
        } else {
            st.even_step(&target, top)?;
        }
    }
    if st.out.chain() != *z {
        return Err(st.stuck("terms do not sum to the input"));
    }
    Ok(st.out)
}

/// Value of `c` on a cycle through its decomposition.
pub fn c_of_cycle(z: &Gamma2Chain, order: Order) -> Result<Q, Gamma2Error> {
    decompose_cycle(z, order).map(|d| d.c())
}

struct State {
    residual: Gamma2Chain,
    out: Decomposition,
    order: Order,
}

/// Every edge of `c` other than those in `allowed` is below `top`.
fn others_below(c: &ElementaryCycle, top: Complexity, allowed: impl Fn(&EdgeKey) -> bool) -> bool {
    c.chain.terms().keys().all(|e| allowed(e) || edge_complexity(e) < top)
}

fn encoding(c: &ElementaryCycle) -> (crate::classify::CycleKind, Vec<(EdgeKey, Q)>) {
    (c.kind, c.chain.terms().iter().map(|(e, q)| (e.clone(), q.clone())).collect())
}

impl State {
    fn stuck(&self, reason: impl Into<String>) -> Gamma2Error {
        Gamma2Error::DecompositionStuck { reason: reason.into(), residual: Box::new(self.residual.clone()) }
    }

    fn pick_target(&self, top: Complexity) -> EdgeKey {
        let mut it = self.residual.terms().keys().filter(|e| edge_complexity(e) == top);
        match self.order {
            Order::Forward => it.next(),
            Order::Reverse => it.next_back(),
        }
        .expect("top complexity is attained")
        .clone()
    }

    fn choose(&self, mut cands: Vec<ElementaryCycle>) -> Option<ElementaryCycle> {
        cands.sort_by_cached_key(encoding);
        match self.order {
            Order::Forward => cands.into_iter().next(),
            Order::Reverse => cands.pop(),
        }
    }

    /// `t` with `residual = t * c`, if any.
    fn multiple_of(&self, c: &ElementaryCycle) -> Option<Q> {
        let (e, x) = c.chain.terms().iter().next()?;
        let t = self.residual.coefficient(e) / x;
        (!t.is_zero() && c.chain.scale(&t) == self.residual).then_some(t)
    }

    fn subtract(&mut self, t: Q, cycle: ElementaryCycle) {
        self.residual = self.residual.add_scaled(&cycle.chain, &-t.clone());
        self.out.terms.push(Term { coefficient: t, cycle });
    }

    /// A flip between spheres of equal complexity.
    fn odd_step(&mut self, target: &EdgeKey, top: Complexity) -> Result<(), Gamma2Error> {
        let (l1, mv) = target.representative();
        let l2 = apply_move(&l1, &mv)?;
        let good = |c: &ElementaryCycle| {
            !c.chain.coefficient(target).is_zero() && others_below(c, top, |e| e == target)
        };
        let families: [&dyn Fn() -> Vec<ElementaryCycle>; 4] = [
            &|| commutation_cycles_with(&l1, &mv.sigma),
            &|| {
                let mut tops = vec![l1.clone(), l2.clone()];
                tops.extend(degree_three_removals(&l1));
                tops.extend(degree_three_removals(&l2));
                tops.iter().flat_map(spec_a_cycles).collect()
            },
            &|| {
                let mut v = spec_b_cycles(&l1);
                v.extend(spec_b_cycles(&l2));
                v.extend(spec_b_cycles_from_diagonals(&l1));
                v.extend(spec_b_cycles_from_diagonals(&l2));
                v
            },
            &|| spec_c_cycles(&l1),
        ];
        for family in families {
            let cands: Vec<ElementaryCycle> = family().into_iter().filter(good).collect();
            if let Some((t, c)) = cands.iter().find_map(|c| self.multiple_of(c).map(|t| (t, c.clone()))) {
                self.subtract(t, c);
                return Ok(());
            }
            if let Some(c) = self.choose(cands) {
                let t = self.residual.coefficient(target) / c.chain.coefficient(target);
                self.subtract(t, c);
                return Ok(());
            }
        }
        Err(self.stuck(format!("no elementary cycle removes {target:?}")))
    }

    /// Clears every edge into the head of `target`, all of which lead down
    /// from it.
    fn even_step(&mut self, target: &EdgeKey, top: Complexity) -> Result<(), Gamma2Error> {
        let head_key = target.hi.key.clone();
        let l = target.hi.sphere();
        let rank = sphere_rank(&l);
        let mut down: Vec<(BistellarMove, EdgeKey)> = Vec::new();
        for mv in enumerate_moves(&l) {
            let res = apply_move(&l, &mv)?;
            if sphere_rank(&res) < rank {
                if let EdgeClass::Essential { key, .. } = edge_key(&l, &mv) {
                    down.push((mv, key));
                }
            }
        }
        let nodes: BTreeSet<EdgeKey> = down.iter().map(|(_, k)| k.clone()).collect();
        let at_head = |e: &EdgeKey| e.hi.key == head_key && edge_complexity(e) == top;
        for e in self.residual.terms().keys().filter(|e| at_head(e)) {
            if !nodes.contains(e) {
                return Err(self.stuck(format!("edge {e:?} at the head is not a move down")));
            }
        }
        let mut ordered: Vec<EdgeKey> = nodes.iter().cloned().collect();
        if self.order == Order::Reverse {
            ordered.reverse();
        }

        let mut graph = NodeGraph { l: &l, top, nodes: &nodes, down: &down, adj: BTreeMap::new(), shared: None };
        loop {
            let Some(u) = ordered.iter().find(|n| !self.residual.coefficient(n).is_zero()).cloned() else {
                return Ok(());
            };
            let whole = graph.neighbours(&u).iter().find_map(|(_, c)| self.multiple_of(c).map(|t| (t, c.clone())));
            if let Some((t, c)) = whole {
                self.subtract(t, c);
                continue;
            }
            let path = self.path_to_nonzero(&mut graph, &u)?;
            let mut cur = u;
            for (next, cycle) in path {
                let t = self.residual.coefficient(&cur) / cycle.chain.coefficient(&cur);
                self.subtract(t, cycle);
                cur = next;
            }
        }
    }

    fn path_to_nonzero(
        &self,
        g: &mut NodeGraph<'_>,
        u: &EdgeKey,
    ) -> Result<Vec<(EdgeKey, ElementaryCycle)>, Gamma2Error> {
        let mut prev: BTreeMap<EdgeKey, (EdgeKey, ElementaryCycle)> = BTreeMap::new();
        let mut seen: BTreeSet<EdgeKey> = BTreeSet::from([u.clone()]);
        let mut queue = VecDeque::from([u.clone()]);
        while let Some(a) = queue.pop_front() {
            let mut nbrs = g.neighbours(&a).to_vec();
            if self.order == Order::Reverse {
                nbrs.reverse();
            }
            for (b, cycle) in nbrs {
                if !seen.insert(b.clone()) {
                    continue;
                }
                prev.insert(b.clone(), (a.clone(), cycle));
                if !self.residual.coefficient(&b).is_zero() {
                    let mut path = Vec::new();
                    let mut cur = b;
                    while &cur != u {
                        let (p, c) = prev.remove(&cur).expect("bfs parent");
                        path.push((cur, c));
                        cur = p;
                    }
                    path.reverse();
                    return Ok(path);
                }
                queue.push_back(b);
            }
        }
        Err(self.stuck(format!("moves down at the head of {u:?} are not linked by elementary cycles")))
    }
}

/// Adjacency between classes of moves down from one sphere, built on demand.
struct NodeGraph<'a> {
    l: &'a OrientedComplex,
    top: Complexity,
    nodes: &'a BTreeSet<EdgeKey>,
    down: &'a [(BistellarMove, EdgeKey)],
    adj: BTreeMap<EdgeKey, Vec<(EdgeKey, ElementaryCycle)>>,
    shared: Option<Vec<ElementaryCycle>>,
}

impl NodeGraph<'_> {
    /// The two nodes joined by `c`, if it is usable.
    fn link(&self, c: &ElementaryCycle) -> Option<(EdgeKey, EdgeKey)> {
        let mut hits = Vec::new();
        for e in c.chain.terms().keys() {
            if edge_complexity(e) >= self.top {
                if !self.nodes.contains(e) {
                    return None;
                }
                hits.push(e.clone());
            }
        }
        (hits.len() == 2).then(|| (hits[0].clone(), hits[1].clone()))
    }

    fn neighbours(&mut self, u: &EdgeKey) -> &[(EdgeKey, ElementaryCycle)] {
        if !self.adj.contains_key(u) {
            let mut found: BTreeMap<EdgeKey, ElementaryCycle> = BTreeMap::new();
            let offer = |found: &mut BTreeMap<EdgeKey, ElementaryCycle>, c: ElementaryCycle, this: &Self| {
                if let Some((a, b)) = this.link(&c) {
                    let other = if &a == u {
                        b
                    } else if &b == u {
                        a
                    } else {
                        return;
                    };
                    let replace = match found.get(&other) {
                        None => true,
                        Some(old) => encoding(&c) < encoding(old),
                    };
                    if replace {
                        found.insert(other, c);
                    }
                }
            };
            for (m1, k1) in self.down.iter().filter(|(_, k)| k == u) {
                for (m2, k2) in self.down {
                    if k2 == k1 {
                        continue;
                    }
                    if let Ok(c) = commutation_cycle(self.l, &m1.sigma, &m2.sigma) {
                        offer(&mut found, c, self);
                    }
                }
            }
            if self.shared.is_none() {
                let mut s = spec_b_cycles(self.l);
                s.extend(spec_c_cycles(self.l));
                self.shared = Some(s);
            }
            for c in self.shared.clone().unwrap_or_default() {
                offer(&mut found, c, self);
            }
            self.adj.insert(u.clone(), found.into_iter().collect());
        }
        &self.adj[u]
    }
}

/// Spheres obtained by removing one degree-3 vertex.
fn degree_three_removals(l: &OrientedComplex) -> Vec<OrientedComplex> {
    enumerate_moves(l)
        .into_iter()
        .filter(|m| m.is_removal())
        .filter_map(|m| apply_move(l, &m).ok())
        .collect()
}
