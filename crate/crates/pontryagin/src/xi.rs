//! The chains `ξ_L` joining each oriented 2-sphere to the tetrahedron
//! boundary, averaged over all complexity-decreasing first moves.

use std::collections::{BTreeMap, HashMap};
use std::path::Path;
use std::sync::{Arc, RwLock};

use gamma2::{ChainEntry, Gamma2Chain};
use num_traits::{One, Zero};
use pachner_engine::edge::{mirror_edge, sphere_rank};
use pachner_engine::{apply_move, enumerate_moves, EdgeKey};
use simplicial_core::canonical::{decode_oriented, oriented_key_pair};
use simplicial_core::OrientedComplex;
use t_algebra::rational::q;
use t_algebra::Q;

use crate::error::PontryaginError;

/// Memo of `ξ` per oriented class, shareable across threads.
#[derive(Default)]
pub struct XiCache {
    chains: RwLock<HashMap<Vec<u8>, Arc<Gamma2Chain>>>,
    mirrors: RwLock<HashMap<EdgeKey, (EdgeKey, i8)>>,
}

impl XiCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.chains.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `ξ_L` for an oriented 2-sphere `L`.
    pub fn xi(&self, l: &OrientedComplex) -> Result<Arc<Gamma2Chain>, PontryaginError> {
        if l.dim() != 2 {
            return Err(PontryaginError::Precondition(format!("a 2-sphere, got dimension {}", l.dim())));
        }
        let (key, mirror) = oriented_key_pair(l);
        self.xi_key(&key, &mirror)
    }

    fn xi_key(&self, key: &[u8], mirror: &[u8]) -> Result<Arc<Gamma2Chain>, PontryaginError> {
        if let Some(c) = self.chains.read().unwrap().get(key) {
            return Ok(c.clone());
        }
        let chain = if key <= mirror {
            self.compute(key)?
        } else {
            let other = self.xi_key(mirror, key)?;
            self.mirror_chain(&other)
        };
        let chain = Arc::new(chain);
        self.chains.write().unwrap().insert(key.to_vec(), chain.clone());
        Ok(chain)
    }

    fn compute(&self, key: &[u8]) -> Result<Gamma2Chain, PontryaginError> {
        let l = decode_oriented(key)?;
        if l.num_vertices() == 4 {
            return Ok(Gamma2Chain::new());
        }
        let rank = sphere_rank(&l);
        let mut sum = Gamma2Chain::new();
        let mut r = 0i64;
        for mv in enumerate_moves(&l) {
            let next = apply_move(&l, &mv)?;
            if sphere_rank(&next) >= rank {
                continue;
            }
            r += 1;
            sum = sum.add(&*self.xi(&next)?);
            sum.add_move(&l, &mv, &q(-1));
        }
        if r == 0 {
            return Err(PontryaginError::Precondition("a 2-sphere with a complexity-decreasing move".into()));
        }
        let xi = sum.scale(&(Q::one() / q(r)));
        check_boundary(&xi, key)?;
        Ok(xi)
    }

    fn mirror_edge(&self, e: &EdgeKey) -> (EdgeKey, i8) {
        if let Some(m) = self.mirrors.read().unwrap().get(e) {
            return m.clone();
        }
        let m = mirror_edge(e);
        self.mirrors.write().unwrap().insert(e.clone(), m.clone());
        m
    }

    /// The image of a chain under orientation reversal of every sphere.
    pub fn mirror_chain(&self, z: &Gamma2Chain) -> Gamma2Chain {
        let mut out = Gamma2Chain::new();
        for (e, c) in z.terms() {
            let (m, s) = self.mirror_edge(e);
            out.add_edge(m, if s > 0 { c.clone() } else { -c.clone() });
        }
        out
    }

    pub fn to_json(&self) -> String {
        let map: BTreeMap<String, Vec<ChainEntry>> = self
            .chains
            .read()
            .unwrap()
            .iter()
            .map(|(k, c)| (hex::encode(k), c.to_entries()))
            .collect();
        serde_json::to_string(&map).expect("serializable")
    }

    /// Reads a cache written by `to_json`, checking every boundary.
    pub fn from_json(text: &str) -> Result<Self, PontryaginError> {
        let map: BTreeMap<String, Vec<ChainEntry>> =
            serde_json::from_str(text).map_err(|e| PontryaginError::Cache(e.to_string()))?;
        let cache = XiCache::new();
        {
            let mut w = cache.chains.write().unwrap();
            for (k, entries) in map {
                let key = hex::decode(&k).map_err(|e| PontryaginError::Cache(e.to_string()))?;
                let chain = Gamma2Chain::from_entries(&entries)
                    .ok_or_else(|| PontryaginError::Cache(format!("bad coefficient under {k}")))?;
                check_boundary(&chain, &key)?;
                w.insert(key, Arc::new(chain));
            }
        }
        Ok(cache)
    }

    pub fn load(path: &Path) -> Result<Self, PontryaginError> {
        if path.exists() {
            Self::from_json(&std::fs::read_to_string(path)?)
        } else {
            Ok(Self::new())
        }
    }

    pub fn save(&self, path: &Path) -> Result<(), PontryaginError> {
        std::fs::write(path, self.to_json())?;
        Ok(())
    }
}

fn tetra_key() -> Vec<u8> {
    let t = simplicial_core::orient(&simplicial_core::Complex::simplex_boundary(3)).expect("orientable");
    oriented_key_pair(&t).0
}

/// `∂ξ_L = {L} - {∂Δ³}`.
fn check_boundary(xi: &Gamma2Chain, key: &[u8]) -> Result<(), PontryaginError> {
    let mut want: BTreeMap<Vec<u8>, Q> = BTreeMap::new();
    *want.entry(key.to_vec()).or_insert_with(Q::zero) += q(1);
    *want.entry(tetra_key()).or_insert_with(Q::zero) -= q(1);
    want.retain(|_, v| !v.is_zero());
    if xi.boundary() != want {
        return Err(PontryaginError::NotACycle(format!("boundary of xi for {}", hex::encode(key))));
    }
    Ok(())
}
