//! Hilbert-style proofs and the extensions they live in.

use std::collections::HashMap;

use crate::formula::Formula;
use crate::scheme::{MetaVar, SchemeId, Substitution};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Justification {
    AxiomInstance { scheme: SchemeId, sub: Substitution },
    /// 0-based index into the proof's hypotheses.
    Hypothesis(usize),
    /// 0-based index into the extension's added axioms.
    ExtensionAxiom(usize),
    /// 0-based indices of earlier steps: `major` proves `minor ⊃ this`.
    ModusPonens { major: usize, minor: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Step {
    pub formula: Formula,
    pub justification: Justification,
}

/// A linear deduction from `hypotheses`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Proof {
    pub hypotheses: Vec<Formula>,
    pub steps: Vec<Step>,
}

/// A proof whose hypotheses are meant to be discharged.
pub type Derivation = Proof;

impl Proof {
    pub fn conclusion(&self) -> Option<&Formula> {
        self.steps.last().map(|s| &s.formula)
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Number of axiom steps using `scheme`.
    pub fn scheme_count(&self, scheme: SchemeId) -> usize {
        self.steps
            .iter()
            .filter(|s| {
                matches!(&s.justification, Justification::AxiomInstance { scheme: sc, .. } if *sc == scheme)
            })
            .count()
    }
}

/// The base calculus plus finitely many added axiom formulas. The empty list
/// is the base calculus itself.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Extension {
    pub added_axioms: Vec<Formula>,
}

impl Extension {
    /// The base calculus.
    pub fn base() -> Self {
        Self::default()
    }

    pub fn new(added_axioms: Vec<Formula>) -> Self {
        Extension { added_axioms }
    }

    /// A copy of `self` with one more axiom.
    pub fn with(&self, axiom: Formula) -> Self {
        let mut added_axioms = self.added_axioms.clone();
        added_axioms.push(axiom);
        Extension { added_axioms }
    }

    pub fn is_base(&self) -> bool {
        self.added_axioms.is_empty()
    }

    pub fn position(&self, f: &Formula) -> Option<usize> {
        self.added_axioms.iter().position(|a| a == f)
    }
}

/// Incremental proof construction. Each method appends a step and returns its
/// index; formulas are computed from the justification so a well-typed use of
/// the builder always produces a kernel-valid proof.
#[derive(Debug, Clone, Default)]
pub struct ProofBuilder {
    proof: Proof,
    hyp_index: HashMap<Formula, usize>,
}

impl ProofBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Starts from an existing proof, keeping its hypotheses and steps.
    pub fn from_proof(proof: Proof) -> Self {
        let mut hyp_index = HashMap::new();
        for (i, h) in proof.hypotheses.iter().enumerate() {
            hyp_index.entry(h.clone()).or_insert(i);
        }
        ProofBuilder { proof, hyp_index }
    }

    pub fn with_hypotheses(hypotheses: Vec<Formula>) -> Self {
        Self::from_proof(Proof {
            hypotheses,
            steps: Vec::new(),
        })
    }

    pub fn formula(&self, step: usize) -> &Formula {
        &self.proof.steps[step].formula
    }

    pub fn len(&self) -> usize {
        self.proof.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.proof.steps.is_empty()
    }

    fn push(&mut self, formula: Formula, justification: Justification) -> usize {
        self.proof.steps.push(Step {
            formula,
            justification,
        });
        self.proof.steps.len() - 1
    }

    /// Index of hypothesis `f`, registering it if new.
    pub fn hypothesis_index(&mut self, f: &Formula) -> usize {
        if let Some(&i) = self.hyp_index.get(f) {
            return i;
        }
        self.proof.hypotheses.push(f.clone());
        let i = self.proof.hypotheses.len() - 1;
        self.hyp_index.insert(f.clone(), i);
        i
    }

    /// Cites hypothesis `f`, registering it if new.
    pub fn hyp(&mut self, f: &Formula) -> usize {
        let i = self.hypothesis_index(f);
        self.push(f.clone(), Justification::Hypothesis(i))
    }

    pub fn ext(&mut self, index: usize, f: &Formula) -> usize {
        self.push(f.clone(), Justification::ExtensionAxiom(index))
    }

    pub fn axiom(&mut self, scheme: SchemeId, sub: Substitution) -> usize {
        let formula = scheme.instance(&sub);
        self.push(formula, Justification::AxiomInstance { scheme, sub })
    }

    /// `a ⊃ (b ⊃ a)`
    pub fn ax1(&mut self, a: &Formula, b: &Formula) -> usize {
        let sub = Substitution::new()
            .with(MetaVar::A, a.clone())
            .with(MetaVar::B, b.clone());
        self.axiom(SchemeId::Ax1, sub)
    }

    /// `[a ⊃ (b ⊃ c)] ⊃ [(a ⊃ b) ⊃ (a ⊃ c)]`
    pub fn ax2(&mut self, a: &Formula, b: &Formula, c: &Formula) -> usize {
        let sub = Substitution::new()
            .with(MetaVar::A, a.clone())
            .with(MetaVar::B, b.clone())
            .with(MetaVar::C, c.clone());
        self.axiom(SchemeId::Ax2, sub)
    }

    /// `[(a ⊃ b) ⊃ a] ⊃ a`
    pub fn ax3(&mut self, a: &Formula, b: &Formula) -> usize {
        let sub = Substitution::new()
            .with(MetaVar::A, a.clone())
            .with(MetaVar::B, b.clone());
        self.axiom(SchemeId::Ax3, sub)
    }

    /// Modus ponens. Panics if `major` is not `minor ⊃ X`; callers construct
    /// premises they know to fit.
    pub fn mp(&mut self, major: usize, minor: usize) -> usize {
        let consequent = match self.formula(major).as_implication() {
            Some((a, b)) if a == self.formula(minor) => b.clone(),
            _ => panic!(
                "modus ponens mismatch: major {} does not have antecedent {}",
                self.formula(major),
                self.formula(minor)
            ),
        };
        self.push(consequent, Justification::ModusPonens { major, minor })
    }

    /// Appends every step of `other`. Its hypotheses are mapped by formula
    /// into this builder's hypotheses; extension indices are kept as is.
    /// Returns the index of `other`'s conclusion.
    pub fn append(&mut self, other: &Proof) -> usize {
        let offset = self.len();
        let hyps: Vec<usize> = other
            .hypotheses
            .iter()
            .map(|h| self.hypothesis_index(h))
            .collect();
        for step in &other.steps {
            let justification = match &step.justification {
                Justification::Hypothesis(k) => Justification::Hypothesis(hyps[*k]),
                Justification::ModusPonens { major, minor } => Justification::ModusPonens {
                    major: major + offset,
                    minor: minor + offset,
                },
                j => j.clone(),
            };
            self.push(step.formula.clone(), justification);
        }
        self.len() - 1
    }

    pub fn finish(self) -> Proof {
        self.proof
    }
}
