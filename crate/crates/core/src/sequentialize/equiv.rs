//! Equivalence of proofs and of jumped structures.

use std::collections::{HashSet, VecDeque};

use super::jumps::JumpedPs;
use crate::error::{Error, Result};
use crate::graph::{canonical_form, iso, ProofStructure};
use crate::sequent::{desequentialize, SequentProof};

/// Two proofs are equivalent when they desequentialize to the same structure.
pub fn proofs_equivalent(p1: &SequentProof, p2: &SequentProof) -> bool {
    iso(&desequentialize(p1).ps, &desequentialize(p2).ps)
}

fn jump_correct(r: &ProofStructure) -> Result<()> {
    if JumpedPs::new(r.clone())?.jump_correct {
        Ok(())
    } else {
        Err(Error::NotJumpCorrect)
    }
}

/// Two jump-correct BTENLL structures are related by rewirings exactly when their
/// underlying structures are isomorphic.
pub fn rewiring_equivalent(r1: &ProofStructure, r2: &ProofStructure) -> Result<bool> {
    jump_correct(r1)?;
    jump_correct(r2)?;
    Ok(iso(&r1.strip_jumps(), &r2.strip_jumps()))
}

/// Breadth-first search from `r1` over single-jump redirections that keep
/// the structure jump-correct, looking for a structure isomorphic to `r2`.
/// Gives up with `Ok(false)` after `max_states` distinct structures.
pub fn rewiring_oracle(r1: &ProofStructure, r2: &ProofStructure, max_states: usize) -> Result<bool> {
    jump_correct(r1)?;
    jump_correct(r2)?;
    let mut seen = HashSet::from([canonical_form(r1)]);
    let mut queue = VecDeque::from([r1.clone()]);
    let targets: Vec<_> = r1.nodes.keys().copied().collect();
    while let Some(r) = queue.pop_front() {
        if iso(&r, r2) {
            return Ok(true);
        }
        for (&b, &old) in &r.jumps {
            for &t in &targets {
                if t == old {
                    continue;
                }
                let mut jumps = r.jumps.clone();
                jumps.insert(b, t);
                let next = r.with_jumps(jumps);
                if seen.len() >= max_states || !seen.insert(canonical_form(&next)) {
                    continue;
                }
                if JumpedPs::new(next.clone())?.jump_correct {
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(false)
}
