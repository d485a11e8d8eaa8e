//! The trusted proof checker.
//!
//! The kernel never searches: axiom steps carry their substitution and are
//! verified by reconstruction, and modus ponens cites its premises by index.

use std::fmt;

use thiserror::Error;

use crate::formula::Formula;
use crate::proof::{Extension, Justification, Proof};
use crate::scheme::{apply, SchemeId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("proof has no steps")]
    EmptyProof,
    /// `step` is 1-based, matching the proof file numbering.
    #[error("step {step}: {kind}")]
    Step { step: usize, kind: StepError },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StepError {
    BadHypothesisIndex { index: usize, available: usize },
    BadExtensionIndex { index: usize, available: usize },
    /// A cited step number that is not strictly earlier (1-based).
    ForwardReference { cited: usize },
    FormulaMismatch { expected: Formula, found: Formula },
    SchemeMismatch { scheme: SchemeId, detail: String },
    NotAnImplication { major: usize },
    MinorPremiseMismatch { expected: Formula, found: Formula },
}

impl fmt::Display for StepError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StepError::BadHypothesisIndex { index, available } => {
                write!(f, "hypothesis index {index} out of range ({available} hypotheses)")
            }
            StepError::BadExtensionIndex { index, available } => {
                write!(f, "extension axiom index {index} out of range ({available} axioms)")
            }
            StepError::ForwardReference { cited } => {
                write!(f, "cites step {cited}, which is not an earlier step")
            }
            StepError::FormulaMismatch { expected, found } => {
                write!(f, "formula {found} does not match the cited {expected}")
            }
            StepError::SchemeMismatch { scheme, detail } => {
                write!(f, "not an instance of {scheme}: {detail}")
            }
            StepError::NotAnImplication { major } => {
                write!(f, "major premise (step {major}) is not an implication")
            }
            StepError::MinorPremiseMismatch { expected, found } => {
                write!(f, "minor premise is {found} but the major premise needs {expected}")
            }
        }
    }
}

fn check_step(
    proof: &Proof,
    ext: &Extension,
    i: usize,
) -> Result<(), StepError> {
    let step = &proof.steps[i];
    let expect = |cited: &Formula| {
        if cited == &step.formula {
            Ok(())
        } else {
            Err(StepError::FormulaMismatch {
                expected: cited.clone(),
                found: step.formula.clone(),
            })
        }
    };
    match &step.justification {
        Justification::AxiomInstance { scheme, sub } => {
            let allowed = scheme.metavars();
            if let Some((m, _)) = sub.bindings().find(|(m, _)| !allowed.contains(m)) {
                return Err(StepError::SchemeMismatch {
                    scheme: *scheme,
                    detail: format!("metavariable {m} does not occur in the scheme"),
                });
            }
            let instance = apply(sub, &scheme.body()).map_err(|e| StepError::SchemeMismatch {
                scheme: *scheme,
                detail: e.to_string(),
            })?;
            if instance != step.formula {
                return Err(StepError::SchemeMismatch {
                    scheme: *scheme,
                    detail: format!("substitution yields {instance}"),
                });
            }
            Ok(())
        }
        Justification::Hypothesis(k) => {
            let h = proof
                .hypotheses
                .get(*k)
                .ok_or(StepError::BadHypothesisIndex {
                    index: *k,
                    available: proof.hypotheses.len(),
                })?;
            expect(h)
        }
        Justification::ExtensionAxiom(k) => {
            let a = ext
                .added_axioms
                .get(*k)
                .ok_or(StepError::BadExtensionIndex {
                    index: *k,
                    available: ext.added_axioms.len(),
                })?;
            expect(a)
        }
        Justification::ModusPonens { major, minor } => {
            for &cited in [major, minor] {
                if cited >= i {
                    return Err(StepError::ForwardReference { cited: cited + 1 });
                }
            }
            let (antecedent, consequent) = proof.steps[*major]
                .formula
                .as_implication()
                .ok_or(StepError::NotAnImplication { major: major + 1 })?;
            let minor_formula = &proof.steps[*minor].formula;
            if antecedent != minor_formula {
                return Err(StepError::MinorPremiseMismatch {
                    expected: antecedent.clone(),
                    found: minor_formula.clone(),
                });
            }
            expect(consequent)
        }
    }
}

/// Checks every step of `proof` in `ext` and returns its conclusion.
pub fn check(proof: &Proof, ext: &Extension) -> Result<Formula, CheckError> {
    if proof.steps.is_empty() {
        return Err(CheckError::EmptyProof);
    }
    for i in 0..proof.steps.len() {
        check_step(proof, ext, i).map_err(|kind| CheckError::Step { step: i + 1, kind })?;
    }
    Ok(proof.steps.last().unwrap().formula.clone())
}
