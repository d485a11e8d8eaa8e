//! `Q`-inconsistency witnesses and discharging added axioms.

use crate::formula::{q_wrap, qq_wrap, Formula};
use crate::kernel::check;
use crate::oracle::{OracleError, OracleMode, Theory};
use crate::proof::{Extension, Justification, Proof, ProofBuilder};

use super::deduction::discharge;
use super::lemmas::{derive_lemma, Lemma};
use super::MetaError;

/// Given proofs of some `A` and of `A ⊃ q` in `ext`, builds a proof of `q`
/// that passes through `(A ⊃ q) ⊃ q`.
pub fn inconsistency_from_witness(
    ext: &Extension,
    q: &Formula,
    proof_a: &Proof,
    proof_qa: &Proof,
) -> Result<Proof, MetaError> {
    let a = check(proof_a, ext)?;
    let qa = check(proof_qa, ext)?;
    if qa != q_wrap(q, &a) {
        return Err(MetaError::WitnessMismatch {
            q: q.clone(),
            a,
            qa,
        });
    }
    let mut b = ProofBuilder::new();
    let s_a = b.append(proof_a);
    let s_qa = b.append(proof_qa);
    let intro = b.append(&derive_lemma(Lemma::DoubleWrapIntro, q, &a, &a, &a));
    let s_qqa = b.mp(intro, s_a);
    b.mp(s_qqa, s_qa);
    Ok(b.finish())
}

/// Removes added axiom `axiom_index` from `ext_n` and rewrites `p` into a
/// proof of `axiom ⊃ conclusion(p)` valid in the smaller extension
/// (`ext_n` minus that axiom, later indices shifted down by one).
pub fn discharge_extension_axiom(
    p: &Proof,
    ext_n: &Extension,
    axiom_index: usize,
) -> Result<Proof, MetaError> {
    let available = ext_n.added_axioms.len();
    if axiom_index >= available {
        return Err(MetaError::AxiomIndex {
            index: axiom_index,
            available,
        });
    }
    check(p, ext_n)?;
    let removed = &ext_n.added_axioms[axiom_index];

    let mut hypotheses = p.hypotheses.clone();
    let hyp = match hypotheses.iter().position(|h| h == removed) {
        Some(i) => i,
        None => {
            hypotheses.push(removed.clone());
            hypotheses.len() - 1
        }
    };
    let steps = p
        .steps
        .iter()
        .map(|s| {
            let mut s = s.clone();
            if let Justification::ExtensionAxiom(k) = s.justification {
                s.justification = match k.cmp(&axiom_index) {
                    std::cmp::Ordering::Equal => Justification::Hypothesis(hyp),
                    std::cmp::Ordering::Greater => Justification::ExtensionAxiom(k - 1),
                    std::cmp::Ordering::Less => Justification::ExtensionAxiom(k),
                };
            }
            s
        })
        .collect();
    let rewritten = Proof { hypotheses, steps };
    Ok(discharge(&rewritten, removed))
}

/// The three equivalent characterizations of `q` being a theorem of an
/// extension, each evaluated independently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QInconsistency {
    /// `q` is a theorem.
    pub proves_q: bool,
    /// Some candidate `A` has both `A` and `A ⊃ q` as theorems.
    pub witness: Option<Formula>,
    /// Some candidate `A` has both `(A ⊃ q) ⊃ q` and `A ⊃ q` as theorems.
    pub double_witness: Option<Formula>,
}

impl QInconsistency {
    pub fn as_bools(&self) -> [bool; 3] {
        [
            self.proves_q,
            self.witness.is_some(),
            self.double_witness.is_some(),
        ]
    }

    pub fn agree(&self) -> bool {
        let [a, b, c] = self.as_bools();
        a == b && b == c
    }
}

/// Evaluates the three conditions with `oracle`, searching `candidates` for
/// the existential witnesses.
pub fn q_inconsistency_conditions(
    ext: &Extension,
    q: &Formula,
    candidates: &[Formula],
    oracle: OracleMode,
) -> Result<QInconsistency, OracleError> {
    let mut theory = Theory::new(ext, oracle, q, q.variables())?;
    let proves_q = theory.proves(q)?;
    let mut witness = None;
    let mut double_witness = None;
    for a in candidates {
        if witness.is_some() && double_witness.is_some() {
            break;
        }
        let qa = theory.proves(&q_wrap(q, a))?;
        if !qa {
            continue;
        }
        if witness.is_none() && theory.proves(a)? {
            witness = Some(a.clone());
        }
        if double_witness.is_none() && theory.proves(&qq_wrap(q, a))? {
            double_witness = Some(a.clone());
        }
    }
    Ok(QInconsistency {
        proves_q,
        witness,
        double_witness,
    })
}
