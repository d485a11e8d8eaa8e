//! Constructive metatheory.
//!
//! Everything here produces ordinary [`Proof`](crate::Proof) values that the
//! kernel re-checks; nothing in this module is trusted.

mod consistency;
mod deduction;
mod lemmas;
mod search;

use thiserror::Error;

use crate::formula::Formula;
use crate::kernel::CheckError;

pub use consistency::{
    discharge_extension_axiom, inconsistency_from_witness, q_inconsistency_conditions,
    QInconsistency,
};
pub use deduction::{deduction_transform, prove_identity};
pub use lemmas::{derive_lemma, Lemma};
pub use search::{search_proof, search_proof_with, SearchConfig, SearchError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MetaError {
    #[error("input proof is not valid: {0}")]
    Invalid(#[from] CheckError),
    #[error("{0} is not among the hypotheses")]
    NotAHypothesis(Formula),
    #[error("conclusions {a} and {qa} are not of the form A and A -> {q}")]
    WitnessMismatch { q: Formula, a: Formula, qa: Formula },
    #[error("extension axiom index {index} out of range ({available} axioms)")]
    AxiomIndex { index: usize, available: usize },
}
