//! JSON form of chains and cochains: arrays of `(oriented key, numerator,
//! denominator)` with the key in hex and both integers as decimal strings.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::chain::{SphereChain, SphereClass};
use crate::cochain::LocalCochain;
use crate::rational::Q;

pub type Entry = (String, String, String);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainJson {
    pub grade: usize,
    pub terms: Vec<Entry>,
    /// Order-two classes of an integral chain.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub torsion: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CochainJson {
    pub grade: usize,
    pub table: Vec<Entry>,
}

fn entry(key: &[u8], c: &Q) -> Entry {
    (hex::encode(key), c.numer().to_string(), c.denom().to_string())
}

fn read_entry(e: &Entry) -> Result<(Vec<u8>, Q), String> {
    let key = hex::decode(&e.0).map_err(|err| format!("key {:?}: {err}", e.0))?;
    let n: BigInt = e.1.parse().map_err(|err| format!("numerator {:?}: {err}", e.1))?;
    let d: BigInt = e.2.parse().map_err(|err| format!("denominator {:?}: {err}", e.2))?;
    if d.is_zero() {
        return Err("zero denominator".into());
    }
    Ok((key, Q::new(n, d)))
}

impl From<&SphereChain> for ChainJson {
    fn from(x: &SphereChain) -> Self {
        ChainJson {
            grade: x.grade(),
            terms: x.terms().iter().map(|(k, c)| entry(k, c)).collect(),
            torsion: x.torsion_terms().keys().map(hex::encode).collect(),
        }
    }
}

impl ChainJson {
    /// Rebuilds the chain. Keys are taken as stored, so they must be lesser keys.
    pub fn to_chain(&self, integral: bool) -> Result<SphereChain, String> {
        let mut out = if integral { SphereChain::zero_integral(self.grade) } else { SphereChain::zero(self.grade) };
        for e in &self.terms {
            let (key, c) = read_entry(e)?;
            out.add_class(SphereClass::Chiral { key, sign: 1 }, &c);
        }
        for t in &self.torsion {
            let key = hex::decode(t).map_err(|err| format!("key {t:?}: {err}"))?;
            out.add_class(SphereClass::Achiral { key }, &Q::from_integer(1.into()));
        }
        Ok(out)
    }
}

impl From<&LocalCochain> for CochainJson {
    fn from(f: &LocalCochain) -> Self {
        CochainJson { grade: f.grade, table: f.table().iter().map(|(k, c)| entry(k, c)).collect() }
    }
}

impl CochainJson {
    pub fn to_cochain(&self) -> Result<LocalCochain, String> {
        let mut f = LocalCochain::new(self.grade);
        for e in &self.table {
            let (key, c) = read_entry(e)?;
            f.set_key(key, c);
        }
        Ok(f)
    }
}
