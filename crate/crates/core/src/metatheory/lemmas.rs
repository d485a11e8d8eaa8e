//! The eight `Q`-relative lemmas that drive valuation extraction.
//!
//! Writing `QA` for `A ⊃ Q`:
//!
//! | # | statement                                | AX3 |
//! |---|------------------------------------------|-----|
//! | 1 | `(A ⊃ B) ⊃ [(B ⊃ C) ⊃ (A ⊃ C)]`           | no  |
//! | 2 | `(A ⊃ B) ⊃ (QB ⊃ QA)`                     | no  |
//! | 3 | `A ⊃ QQA`                                 | no  |
//! | 4 | `QQQA ⊃ QA`                               | no  |
//! | 5 | `QQB ⊃ QQ(A ⊃ B)`                         | no  |
//! | 6 | `QQA ⊃ [QB ⊃ Q(A ⊃ B)]`                   | no  |
//! | 7 | `QA ⊃ QQ(A ⊃ B)`                          | yes |
//! | 8 | `(QA ⊃ B) ⊃ [(QQA ⊃ B) ⊃ QQB]`            | no  |
//!
//! Each proof is written as a deduction from hypotheses and compiled into a
//! hypothesis-free proof by repeated discharge.

use std::fmt;

use crate::formula::{q_wrap, qq_wrap, Formula};
use crate::proof::{Proof, ProofBuilder};
use crate::scheme::MetaVar;

use super::deduction::discharge;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Lemma {
    /// `(A ⊃ B) ⊃ [(B ⊃ C) ⊃ (A ⊃ C)]`
    Transitivity = 1,
    /// `(A ⊃ B) ⊃ (QB ⊃ QA)`
    Contraposition = 2,
    /// `A ⊃ QQA`
    DoubleWrapIntro = 3,
    /// `QQQA ⊃ QA`
    TripleWrapElim = 4,
    /// `QQB ⊃ QQ(A ⊃ B)`
    ConsequentLift = 5,
    /// `QQA ⊃ [QB ⊃ Q(A ⊃ B)]`
    RefuteImplication = 6,
    /// `QA ⊃ QQ(A ⊃ B)`
    AntecedentLift = 7,
    /// `(QA ⊃ B) ⊃ [(QQA ⊃ B) ⊃ QQB]`
    CaseSplit = 8,
}

impl Lemma {
    pub const ALL: [Lemma; 8] = [
        Lemma::Transitivity,
        Lemma::Contraposition,
        Lemma::DoubleWrapIntro,
        Lemma::TripleWrapElim,
        Lemma::ConsequentLift,
        Lemma::RefuteImplication,
        Lemma::AntecedentLift,
        Lemma::CaseSplit,
    ];

    /// Lemma number 1 through 8.
    pub fn from_index(k: usize) -> Option<Lemma> {
        Lemma::ALL.get(k.checked_sub(1)?).copied()
    }

    pub fn index(self) -> usize {
        self as usize
    }

    /// Metavariables among `A, B, C` that the statement mentions.
    pub fn metavars(self) -> &'static [MetaVar] {
        use MetaVar::*;
        match self {
            Lemma::Transitivity => &[A, B, C],
            Lemma::DoubleWrapIntro | Lemma::TripleWrapElim => &[A],
            _ => &[A, B],
        }
    }

    pub fn uses_q(self) -> bool {
        self != Lemma::Transitivity
    }

    /// Whether the derivation needs the Peirce scheme.
    pub fn requires_peirce(self) -> bool {
        self == Lemma::AntecedentLift
    }

    /// The statement, built directly from its shape.
    pub fn statement(self, q: &Formula, a: &Formula, b: &Formula, c: &Formula) -> Formula {
        let imp = |x: &Formula, y: &Formula| Formula::implies(x.clone(), y.clone());
        let w = |x: &Formula| q_wrap(q, x);
        let ww = |x: &Formula| qq_wrap(q, x);
        match self {
            Lemma::Transitivity => imp(&imp(a, b), &imp(&imp(b, c), &imp(a, c))),
            Lemma::Contraposition => imp(&imp(a, b), &imp(&w(b), &w(a))),
            Lemma::DoubleWrapIntro => imp(a, &ww(a)),
            Lemma::TripleWrapElim => imp(&w(&ww(a)), &w(a)),
            Lemma::ConsequentLift => imp(&ww(b), &ww(&imp(a, b))),
            Lemma::RefuteImplication => imp(&ww(a), &imp(&w(b), &w(&imp(a, b)))),
            Lemma::AntecedentLift => imp(&w(a), &ww(&imp(a, b))),
            Lemma::CaseSplit => imp(&imp(&w(a), b), &imp(&imp(&ww(a), b), &ww(b))),
        }
    }
}

impl fmt::Display for Lemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "thm1.{}", self.index())
    }
}

/// Discharges `hyps` in order, innermost first.
fn discharge_all(mut proof: Proof, hyps: &[&Formula]) -> Proof {
    for h in hyps {
        proof = discharge(&proof, h);
    }
    proof
}

/// Hypothesis-free proof of `lemma` instantiated at `q, a, b, c`. Arguments the
/// lemma does not mention are ignored.
pub fn derive_lemma(lemma: Lemma, q: &Formula, a: &Formula, b: &Formula, c: &Formula) -> Proof {
    let imp = |x: &Formula, y: &Formula| Formula::implies(x.clone(), y.clone());
    let w = |x: &Formula| q_wrap(q, x);
    let ww = |x: &Formula| qq_wrap(q, x);

    match lemma {
        Lemma::Transitivity | Lemma::Contraposition => {
            let c = if lemma == Lemma::Transitivity { c } else { q };
            let (ab, bc) = (imp(a, b), imp(b, c));
            let mut pb = ProofBuilder::new();
            let s_a = pb.hyp(a);
            let s_ab = pb.hyp(&ab);
            let s_b = pb.mp(s_ab, s_a);
            let s_bc = pb.hyp(&bc);
            pb.mp(s_bc, s_b);
            discharge_all(pb.finish(), &[a, &bc, &ab])
        }
        Lemma::DoubleWrapIntro => {
            let qa = w(a);
            let mut pb = ProofBuilder::new();
            let s_a = pb.hyp(a);
            let s_qa = pb.hyp(&qa);
            pb.mp(s_qa, s_a);
            discharge_all(pb.finish(), &[&qa, a])
        }
        Lemma::TripleWrapElim => {
            // QQQA, A ⊢ Q
            let qqqa = w(&ww(a));
            let mut pb = ProofBuilder::new();
            let intro = pb.append(&derive_lemma(Lemma::DoubleWrapIntro, q, a, b, c));
            let s_a = pb.hyp(a);
            let s_qqa = pb.mp(intro, s_a);
            let s_qqqa = pb.hyp(&qqqa);
            pb.mp(s_qqqa, s_qqa);
            discharge_all(pb.finish(), &[a, &qqqa])
        }
        Lemma::ConsequentLift => {
            // QQB, Q(A ⊃ B) ⊢ Q, via B ⊢ A ⊃ B ⊢ Q.
            let (qqb, ab) = (ww(b), imp(a, b));
            let qab = w(&ab);
            let mut pb = ProofBuilder::new();
            let s_b = pb.hyp(b);
            let weaken = pb.ax1(b, a);
            let s_ab = pb.mp(weaken, s_b);
            let s_qab = pb.hyp(&qab);
            pb.mp(s_qab, s_ab);
            let mut pb = ProofBuilder::from_proof(discharge(&pb.finish(), b));
            let s_qb = pb.len() - 1;
            let s_qqb = pb.hyp(&qqb);
            pb.mp(s_qqb, s_qb);
            discharge_all(pb.finish(), &[&qab, &qqb])
        }
        Lemma::RefuteImplication => {
            // QQA, QB, A ⊃ B ⊢ Q, via A ⊢ B ⊢ Q.
            let (qqa, qb, ab) = (ww(a), w(b), imp(a, b));
            let mut pb = ProofBuilder::new();
            let s_a = pb.hyp(a);
            let s_ab = pb.hyp(&ab);
            let s_b = pb.mp(s_ab, s_a);
            let s_qb = pb.hyp(&qb);
            pb.mp(s_qb, s_b);
            let mut pb = ProofBuilder::from_proof(discharge(&pb.finish(), a));
            let s_qa = pb.len() - 1;
            let s_qqa = pb.hyp(&qqa);
            pb.mp(s_qqa, s_qa);
            discharge_all(pb.finish(), &[&ab, &qb, &qqa])
        }
        Lemma::AntecedentLift => {
            // QA, Q(A ⊃ B) ⊢ Q. From Q ⊃ B and QA we get A ⊃ B, hence Q; so
            // (Q ⊃ B) ⊃ Q, and Peirce at (Q, B) closes the gap.
            let (qa, ab) = (w(a), imp(a, b));
            let qab = w(&ab);
            let q_b = imp(q, b);
            let mut pb = ProofBuilder::new();
            let s_a = pb.hyp(a);
            let s_qa = pb.hyp(&qa);
            let s_q = pb.mp(s_qa, s_a);
            let s_qb = pb.hyp(&q_b);
            pb.mp(s_qb, s_q);
            let mut pb = ProofBuilder::from_proof(discharge(&pb.finish(), a));
            let s_ab = pb.len() - 1;
            let s_qab = pb.hyp(&qab);
            pb.mp(s_qab, s_ab);
            let mut pb = ProofBuilder::from_proof(discharge(&pb.finish(), &q_b));
            let s_lhs = pb.len() - 1; // (Q ⊃ B) ⊃ Q
            let peirce = pb.ax3(q, b);
            pb.mp(peirce, s_lhs);
            discharge_all(pb.finish(), &[&qab, &qa])
        }
        Lemma::CaseSplit => {
            // QA ⊃ B, QQA ⊃ B, QB ⊢ Q, via QA ⊢ B ⊢ Q giving QQA.
            let qa = w(a);
            let (qa_b, qqa_b, qb) = (imp(&qa, b), imp(&ww(a), b), w(b));
            let mut pb = ProofBuilder::new();
            let s_qa = pb.hyp(&qa);
            let s_qa_b = pb.hyp(&qa_b);
            let s_b = pb.mp(s_qa_b, s_qa);
            let s_qb = pb.hyp(&qb);
            pb.mp(s_qb, s_b);
            let mut pb = ProofBuilder::from_proof(discharge(&pb.finish(), &qa));
            let s_qqa = pb.len() - 1;
            let s_qqa_b = pb.hyp(&qqa_b);
            let s_b = pb.mp(s_qqa_b, s_qqa);
            let s_qb = pb.hyp(&qb);
            pb.mp(s_qb, s_b);
            discharge_all(pb.finish(), &[&qb, &qqa_b, &qa_b])
        }
    }
}
