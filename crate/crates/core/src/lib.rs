//! Proof-structures of multiplicative linear logic with units.
//!
//! The crate covers validation, switchings and correctness criteria (AC, C,
//! C_#w and the erasing-node conditions), cut elimination, sequent proofs and
//! their desequentialization, sequentialization with and without jumps, and
//! seeded generators for all of these.

pub mod cut;
pub mod dot;
pub mod error;
pub mod formula;
pub mod generator;
pub mod graph;
pub mod sequent;
pub mod sequentialize;
pub mod switching;

pub use error::{Error, Result};
pub use formula::{parse_formula, Formula, FragmentId, Kind, Polarity, Sequent};
pub use graph::{ArcId, Label, NodeId, ProofStructure};
pub use sequent::{check_proof, desequentialize, Rule, SequentProof};
pub use sequentialize::{
    canonical_jumps_btenll, canonical_jumps_icomll, is_sequential_oracle, proofs_equivalent,
    rewiring_equivalent, sequentialize_btenll, sequentialize_icomll, sequentialize_wten, JumpedPs,
};
