//! Proof engineering for the implicational propositional calculus.
//!
//! The calculus has implication as its only connective, modus ponens as its
//! only rule, and three axiom schemes:
//!
//! ```text
//! AX1  A ⊃ (B ⊃ A)
//! AX2  [A ⊃ (B ⊃ C)] ⊃ [(A ⊃ B) ⊃ (A ⊃ C)]
//! AX3  [(A ⊃ B) ⊃ A] ⊃ A                      (Peirce)
//! ```
//!
//! The crate provides formulas and their syntax ([`formula`], [`parser`],
//! [`scheme`], [`universe`]), truth-table semantics ([`semantics`]), a small
//! trusted checker ([`kernel`]) for the proofs of [`proof`] and their text
//! format ([`proof_file`]), constructive metatheory ([`metatheory`]) and the
//! Lindenbaum-style completion that turns a non-theorem into a falsifying
//! assignment ([`lindenbaum`]).
//!
//! ```
//! use ipc::{countermodel, parse, OracleMode};
//!
//! let q = parse("(p -> q) -> q").unwrap();
//! let v = countermodel(&q, 3, OracleMode::Semantic).unwrap();
//! assert_eq!(v.to_string(), "p=0 q=0");
//! ```

pub mod cli;
pub mod formula;
pub mod kernel;
pub mod lindenbaum;
pub mod metatheory;
pub mod oracle;
pub mod parser;
pub mod proof;
pub mod proof_file;
pub mod scheme;
pub mod semantics;
pub mod universe;

pub use formula::{print, q_wrap, qq_wrap, variables_of, Formula};
pub use kernel::{check, CheckError};
pub use lindenbaum::{
    complete, countermodel, extract_valuation, q_consistent, verify_valuation_claim,
    CompletionTrace, FormulaValuation,
};
pub use oracle::{theoremhood_in, OracleMode};
pub use parser::{parse, ParseError};
pub use proof::{Derivation, Extension, Justification, Proof, ProofBuilder, Step};
pub use proof_file::{parse_proof_file, print_proof_file, ProofFile};
pub use scheme::{apply, match_scheme, MetaVar, Pattern, SchemeId, Substitution};
pub use semantics::{entails, eval, is_tautology, Valuation, Verdict};
pub use universe::{enumerate, Universe};
