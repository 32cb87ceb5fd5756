//! Rational 1-chains on the move graph of oriented 2-spheres.

use std::collections::BTreeMap;

use num_traits::Zero;
use pachner_engine::edge::{edge_key_with_result, EdgeClass};
use pachner_engine::{BistellarMove, EdgeKey};
use serde::{Deserialize, Serialize};
use simplicial_core::OrientedComplex;
use t_algebra::rational::{parse, to_string};
use t_algebra::Q;

use crate::complexity::{edge_complexity, Complexity};

/// Coefficients on edges in their canonical direction. An inessential move
/// contributes nothing.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Gamma2Chain {
    terms: BTreeMap<EdgeKey, Q>,
}

impl Gamma2Chain {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn terms(&self) -> &BTreeMap<EdgeKey, Q> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, e: &EdgeKey) -> Q {
        self.terms.get(e).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_edge(&mut self, e: EdgeKey, c: Q) {
        let entry = self.terms.entry(e.clone()).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// Adds `c` times the edge of `mv` on `host`; returns the result of the move.
    pub fn add_move(&mut self, host: &OrientedComplex, mv: &BistellarMove, c: &Q) -> OrientedComplex {
        let (class, result) = edge_key_with_result(host, mv);
        if let EdgeClass::Essential { key, sign } = class {
            self.add_edge(key, if sign > 0 { c.clone() } else { -c.clone() });
        }
        result
    }

    pub fn add(&self, other: &Gamma2Chain) -> Gamma2Chain {
        self.add_scaled(other, &Q::from_integer(1.into()))
    }

    pub fn add_scaled(&self, other: &Gamma2Chain, t: &Q) -> Gamma2Chain {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_edge(e.clone(), c * t);
        }
        out
    }

    pub fn sub(&self, other: &Gamma2Chain) -> Gamma2Chain {
        self.add_scaled(other, &-Q::from_integer(1.into()))
    }

    pub fn scale(&self, t: &Q) -> Gamma2Chain {
        Gamma2Chain::new().add_scaled(self, t)
    }

    /// Boundary as a function on oriented sphere keys.
    pub fn boundary(&self) -> BTreeMap<Vec<u8>, Q> {
        let mut out: BTreeMap<Vec<u8>, Q> = BTreeMap::new();
        for (e, c) in &self.terms {
            *out.entry(e.hi.key.clone()).or_insert_with(Q::zero) += c;
            *out.entry(e.lo.key.clone()).or_insert_with(Q::zero) -= c;
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    pub fn is_cycle(&self) -> bool {
        self.boundary().is_empty()
    }

    pub fn max_complexity(&self) -> Option<Complexity> {
        self.terms.keys().map(edge_complexity).max()
    }
}

/// One edge with its coefficient as a decimal fraction string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainEntry {
    pub edge: EdgeKey,
    pub coefficient: String,
}

impl Gamma2Chain {
    pub fn to_entries(&self) -> Vec<ChainEntry> {
        self.terms
            .iter()
            .map(|(e, c)| ChainEntry { edge: e.clone(), coefficient: to_string(c) })
            .collect()
    }

    pub fn from_entries(entries: &[ChainEntry]) -> Option<Gamma2Chain> {
        let mut out = Gamma2Chain::new();
        for en in entries {
            out.add_edge(en.edge.clone(), parse(&en.coefficient)?);
        }
        Some(out)
    }
}
