//! Lindenbaum-style completion over a bounded universe.
//!
//! Fix a formula `q` that the starting extension does not prove. Walking the
//! universe `A_0, A_1, ...` in order, the completion adds `A_n ⊃ q` as an axiom
//! whenever `(A_n ⊃ q) ⊃ q` is not already a theorem. Afterwards every
//! universe formula has exactly one of the two as a theorem, which defines a
//! truth value for it: 1 for `(A ⊃ q) ⊃ q`, 0 for `A ⊃ q`. These values respect
//! the implication rule and give `q` the value 0, so the induced assignment
//! is a countermodel for `q`.

use std::collections::HashMap;

use thiserror::Error;

use crate::formula::{q_wrap, qq_wrap, Formula};
use crate::oracle::{OracleError, OracleMode, Theory};
use crate::proof::Extension;
use crate::semantics::{eval, is_tautology, SemanticsError, Valuation};
use crate::universe::{enumerate, EnumerateError, Universe};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LindenbaumError {
    #[error("the starting extension already proves {0}")]
    NotQConsistent(Formula),
    #[error("adding {axiom} at index {index} made {q} provable")]
    ConsistencyLost {
        index: usize,
        axiom: Formula,
        q: Formula,
    },
    #[error("valuation undefined at {} formula(s), first {}", .formulas.len(), .formulas[0])]
    Undefined { formulas: Vec<Formula> },
    #[error("both A -> q and (A -> q) -> q are theorems for A = {0}")]
    Contradiction(Formula),
    #[error("{0} is a tautology and has no countermodel")]
    Tautology(Formula),
    #[error("extracted valuation gives {0} the value 1")]
    NotRefuted(Formula),
    #[error("assignment {assignment} does not falsify {q}")]
    NotFalsified { q: Formula, assignment: Valuation },
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error(transparent)]
    Semantics(#[from] SemanticsError),
}

/// One step of the completion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceRecord {
    pub index: usize,
    pub formula: Formula,
    /// Whether `(A_n ⊃ q) ⊃ q` was a theorem of the extension built so far.
    pub qqa_theorem: bool,
    /// Whether `A_n ⊃ q` was added; always the negation of `qqa_theorem`.
    pub added: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletionTrace {
    pub q: Formula,
    pub universe: Universe,
    pub initial: Extension,
    pub records: Vec<TraceRecord>,
    /// `initial` followed by every added `A_n ⊃ q`, in index order.
    pub extension: Extension,
}

impl CompletionTrace {
    pub fn added_axioms(&self) -> &[Formula] {
        &self.extension.added_axioms[self.initial.added_axioms.len()..]
    }
}

/// `q` is not a theorem of `ext`.
pub fn q_consistent(ext: &Extension, q: &Formula, oracle: OracleMode) -> Result<bool, OracleError> {
    Ok(!crate::oracle::theoremhood_in(ext, q, oracle)?)
}

fn universe_vars(universe: &Universe, q: &Formula) -> std::collections::BTreeSet<crate::formula::Name> {
    let mut vars = q.variables();
    for v in universe.vars() {
        vars.insert(v.as_str().into());
    }
    vars
}

pub fn complete(
    ext: &Extension,
    q: &Formula,
    universe: &Universe,
    oracle: OracleMode,
) -> Result<CompletionTrace, LindenbaumError> {
    let mut theory = Theory::new(ext, oracle, q, universe_vars(universe, q))?;
    if theory.proves(q)? {
        return Err(LindenbaumError::NotQConsistent(q.clone()));
    }
    let mut records = Vec::with_capacity(universe.len());
    for (index, a) in universe.iter().enumerate() {
        let qqa_theorem = theory.proves(&qq_wrap(q, a))?;
        if !qqa_theorem {
            let axiom = q_wrap(q, a);
            theory.add(axiom.clone())?;
            if theory.proves(q)? {
                return Err(LindenbaumError::ConsistencyLost {
                    index,
                    axiom,
                    q: q.clone(),
                });
            }
        }
        records.push(TraceRecord {
            index,
            formula: a.clone(),
            qqa_theorem,
            added: !qqa_theorem,
        });
    }
    Ok(CompletionTrace {
        q: q.clone(),
        universe: universe.clone(),
        initial: ext.clone(),
        records,
        extension: theory.extension().clone(),
    })
}

/// Truth values on the formulas of a universe together with the induced
/// assignment to its variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaValuation {
    values: Vec<(Formula, bool)>,
    index: HashMap<Formula, usize>,
    assignment: Valuation,
}

impl FormulaValuation {
    /// Builds a valuation from explicit entries. Later duplicates are ignored.
    pub fn from_entries(entries: impl IntoIterator<Item = (Formula, bool)>) -> Self {
        let mut values = Vec::new();
        let mut index = HashMap::new();
        let mut assignment = Valuation::new();
        for (f, v) in entries {
            if index.contains_key(&f) {
                continue;
            }
            if let Some(name) = f.as_var() {
                assignment.set(name, v);
            }
            index.insert(f.clone(), values.len());
            values.push((f, v));
        }
        FormulaValuation {
            values,
            index,
            assignment,
        }
    }

    pub fn value(&self, f: &Formula) -> Option<bool> {
        self.index.get(f).map(|&i| self.values[i].1)
    }

    pub fn entries(&self) -> &[(Formula, bool)] {
        &self.values
    }

    /// Values of the variables in the domain.
    pub fn assignment(&self) -> &Valuation {
        &self.assignment
    }

    /// Formulas whose recorded value differs from their truth-table value
    /// under [`assignment`](Self::assignment).
    pub fn disagreements_with_assignment(&self) -> Vec<Formula> {
        self.values
            .iter()
            .filter(|(f, v)| eval(&self.assignment, f).ok() != Some(*v))
            .map(|(f, _)| f.clone())
            .collect()
    }
}

pub fn extract_valuation(
    trace: &CompletionTrace,
    oracle: OracleMode,
) -> Result<FormulaValuation, LindenbaumError> {
    let q = &trace.q;
    let mut theory = Theory::new(&trace.extension, oracle, q, universe_vars(&trace.universe, q))?;
    let mut entries = Vec::with_capacity(trace.universe.len());
    let mut undefined = Vec::new();
    for a in &trace.universe {
        let one = theory.proves(&qq_wrap(q, a))?;
        let zero = theory.proves(&q_wrap(q, a))?;
        match (one, zero) {
            (true, true) => return Err(LindenbaumError::Contradiction(a.clone())),
            (false, false) => undefined.push(a.clone()),
            (one, _) => entries.push((a.clone(), one)),
        }
    }
    if !undefined.is_empty() {
        return Err(LindenbaumError::Undefined {
            formulas: undefined,
        });
    }
    Ok(FormulaValuation::from_entries(entries))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimViolation {
    pub implication: Formula,
    pub antecedent_value: bool,
    pub consequent_value: bool,
    pub implication_value: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ClaimReport {
    /// Number of implications whose both sides are in the domain.
    pub checked: usize,
    pub violations: Vec<ClaimViolation>,
}

impl ClaimReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `v(A ⊃ B) = 0` iff `v(A) = 1` and `v(B) = 0` wherever all three
/// values are defined.
pub fn verify_valuation_claim(v: &FormulaValuation) -> ClaimReport {
    let mut report = ClaimReport::default();
    for (f, value) in v.entries() {
        let Some((a, b)) = f.as_implication() else {
            continue;
        };
        let (Some(va), Some(vb)) = (v.value(a), v.value(b)) else {
            continue;
        };
        report.checked += 1;
        if *value != (!va || vb) {
            report.violations.push(ClaimViolation {
                implication: f.clone(),
                antecedent_value: va,
                consequent_value: vb,
                implication_value: *value,
            });
        }
    }
    report
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountermodelConfig {
    pub size_bound: usize,
    pub oracle: OracleMode,
    /// How many times the universe may grow by one size step when extraction
    /// is undefined.
    pub retry_cap: usize,
}

impl CountermodelConfig {
    pub fn new(size_bound: usize, oracle: OracleMode) -> Self {
        CountermodelConfig {
            size_bound,
            oracle,
            retry_cap: 2,
        }
    }
}

/// Everything the countermodel pipeline computed on its successful attempt.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountermodelRun {
    pub trace: CompletionTrace,
    pub valuation: FormulaValuation,
    pub claim: ClaimReport,
    /// The falsifying assignment, restricted to the variables of `q`.
    pub assignment: Valuation,
}

pub fn countermodel_run(
    q: &Formula,
    config: &CountermodelConfig,
) -> Result<CountermodelRun, LindenbaumError> {
    if is_tautology(q)?.tautology {
        return Err(LindenbaumError::Tautology(q.clone()));
    }
    let vars: Vec<String> = q.variables().iter().map(|v| v.to_string()).collect();
    let mut last_err = None;
    for attempt in 0..=config.retry_cap {
        let universe = enumerate(&vars, config.size_bound + attempt)?;
        let trace = complete(&Extension::base(), q, &universe, config.oracle)?;
        let valuation = match extract_valuation(&trace, config.oracle) {
            Ok(v) => v,
            Err(e @ LindenbaumError::Undefined { .. }) => {
                last_err = Some(e);
                continue;
            }
            Err(e) => return Err(e),
        };
        match valuation.value(q) {
            None => {
                last_err = Some(LindenbaumError::Undefined {
                    formulas: vec![q.clone()],
                });
                continue;
            }
            Some(true) => return Err(LindenbaumError::NotRefuted(q.clone())),
            Some(false) => {}
        }
        let assignment = valuation.assignment().clone();
        if eval(&assignment, q)? {
            return Err(LindenbaumError::NotFalsified {
                q: q.clone(),
                assignment,
            });
        }
        let claim = verify_valuation_claim(&valuation);
        return Ok(CountermodelRun {
            trace,
            valuation,
            claim,
            assignment,
        });
    }
    Err(last_err.expect("at least one attempt runs"))
}

/// A falsifying assignment for the non-tautology `q`, obtained by completing
/// the base calculus over formulas in the variables of `q` up to
/// `size_bound` leaves.
pub fn countermodel(q: &Formula, size_bound: usize, oracle: OracleMode) -> Result<Valuation, LindenbaumError> {
    countermodel_run(q, &CountermodelConfig::new(size_bound, oracle)).map(|run| run.assignment)
}
