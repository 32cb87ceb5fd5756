//! Combinatorial sphere recognition up to dimension 3.

use simplicial_core::recognition::low_dim_sphere;
use simplicial_core::{orient, Complex, Simplex, Verdict};

use crate::error::MoveError;
use crate::reduce::reduce_to_boundary;
use crate::sequence::MoveSequence;

/// Decides sphericity for `dim k <= 3`. In dimension 3 a positive answer
/// carries a reduction certificate; an unsuccessful search gives `Unknown`.
pub fn is_combinatorial_sphere(k: &Complex, budget: usize, seed: u64) -> Verdict<MoveSequence> {
    if k.dim() <= 2 {
        return match low_dim_sphere(k) {
            Some(Verdict::Yes(())) => Verdict::Yes(MoveSequence {
                start_key: Vec::new(),
                end_key: Vec::new(),
                moves: Vec::new(),
            }),
            Some(Verdict::No(m)) => Verdict::No(m),
            Some(Verdict::Unknown(m)) => Verdict::Unknown(m),
            None => unreachable!(),
        };
    }
    if k.dim() > 3 {
        return Verdict::Unknown(format!("dimension {} is not supported", k.dim()));
    }
    if !k.is_closed_pseudomanifold() {
        return Verdict::No("not a closed pseudomanifold".into());
    }
    if !k.is_connected() {
        return Verdict::No("disconnected".into());
    }
    for &v in k.vertices() {
        let l = k.link(&Simplex::vertex(v)).unwrap();
        if let Some(Verdict::No(m)) = low_dim_sphere(&l) {
            return Verdict::No(format!("link of vertex {v}: {m}"));
        }
    }
    if k.euler_characteristic() != 0 {
        return Verdict::No("Euler characteristic is not 0".into());
    }
    let oc = match orient(k) {
        Ok(oc) => oc,
        Err(_) => return Verdict::No("not orientable".into()),
    };
    match reduce_to_boundary(&oc, budget, seed) {
        Ok(seq) => Verdict::Yes(seq),
        Err(MoveError::BudgetExhausted { budget, .. }) => {
            Verdict::Unknown(format!("no reduction found within {budget} moves"))
        }
        Err(e) => Verdict::Unknown(e.to_string()),
    }
}
