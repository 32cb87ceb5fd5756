//! Replayable move sequences.

use serde::{Deserialize, Serialize};
use simplicial_core::{oriented_key, OrientedComplex};

use crate::error::MoveError;
use crate::moves::{apply_move, BistellarMove};

/// Moves taking a start sphere to an end sphere, with both oriented keys.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveSequence {
    #[serde(with = "hex::serde")]
    pub start_key: Vec<u8>,
    #[serde(with = "hex::serde")]
    pub end_key: Vec<u8>,
    pub moves: Vec<BistellarMove>,
}

impl MoveSequence {
    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// All intermediate complexes, starting with `start` itself.
    pub fn states(&self, start: &OrientedComplex) -> Result<Vec<OrientedComplex>, MoveError> {
        let mut out = vec![start.clone()];
        for mv in &self.moves {
            let next = apply_move(out.last().unwrap(), mv)?;
            out.push(next);
        }
        Ok(out)
    }

    /// Replays from `start` and checks both keys.
    pub fn replay(&self, start: &OrientedComplex) -> Result<OrientedComplex, MoveError> {
        if oriented_key(start) != self.start_key {
            return Err(MoveError::BadCertificate("start key mismatch".into()));
        }
        let end = self.states(start)?.pop().unwrap();
        if oriented_key(&end) != self.end_key {
            return Err(MoveError::BadCertificate("end key mismatch".into()));
        }
        Ok(end)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self, MoveError> {
        serde_json::from_str(text).map_err(|e| MoveError::BadCertificate(e.to_string()))
    }
}
