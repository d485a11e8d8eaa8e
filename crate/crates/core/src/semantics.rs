//! Boolean valuations, truth tables and semantic entailment.
//!
//! Truth tables are computed column-wise: every formula is evaluated on all
//! `2^k` rows at once as a packed bit vector. Row `r` assigns the `i`-th
//! variable (in name order) the bit `(r >> (k - 1 - i)) & 1`, so the first
//! variable is the most significant and rows run `00, 01, 10, 11, ...`.
//! Countermodels are always the first falsifying row in this order.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::formula::{Formula, Name};

pub const DEFAULT_MAX_VARS: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemanticsError {
    #[error("variable '{0}' is not assigned by the valuation")]
    UndefinedVariable(String),
    #[error("{count} variables exceed the truth-table limit of {limit}")]
    TooManyVariables { count: usize, limit: usize },
}

/// Assignment of truth values to finitely many variables.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Valuation(BTreeMap<Name, bool>);

impl Valuation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, var: &str, value: bool) -> Self {
        self.set(var, value);
        self
    }

    pub fn set(&mut self, var: &str, value: bool) {
        self.0.insert(Name::from(var), value);
    }

    pub fn get(&self, var: &str) -> Option<bool> {
        self.0.get(var).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, bool)> {
        self.0.iter().map(|(k, v)| (&**k, *v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromIterator<(Name, bool)> for Valuation {
    fn from_iter<T: IntoIterator<Item = (Name, bool)>>(iter: T) -> Self {
        Valuation(iter.into_iter().collect())
    }
}

/// `p=1 q=0`
impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, v)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{k}={}", u8::from(v))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

/// Value of `f` under `v`: an implication is false exactly when its
/// antecedent is true and its consequent false.
pub fn eval(v: &Valuation, f: &Formula) -> Result<bool, SemanticsError> {
    match f {
        Formula::Var(name) => v
            .get(name)
            .ok_or_else(|| SemanticsError::UndefinedVariable(name.to_string())),
        Formula::Implies(a, b) => Ok(!eval(v, a)? || eval(v, b)?),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub tautology: bool,
    /// First falsifying row; present exactly when `tautology` is false.
    pub countermodel: Option<Valuation>,
}

/// Truth-table engine with a configurable variable limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TruthTable {
    pub max_vars: usize,
}

impl Default for TruthTable {
    fn default() -> Self {
        TruthTable {
            max_vars: DEFAULT_MAX_VARS,
        }
    }
}

/// Packed truth columns over a fixed, sorted variable list.
#[derive(Debug, Clone)]
pub(crate) struct Columns {
    vars: Vec<Name>,
    rows: usize,
}

impl Columns {
    pub(crate) fn new(vars: Vec<Name>, max_vars: usize) -> Result<Self, SemanticsError> {
        if vars.len() > max_vars {
            return Err(SemanticsError::TooManyVariables {
                count: vars.len(),
                limit: max_vars,
            });
        }
        let rows = 1usize << vars.len();
        Ok(Columns { vars, rows })
    }

    pub(crate) fn vars(&self) -> &[Name] {
        &self.vars
    }

    fn words(&self) -> usize {
        self.rows.div_ceil(64)
    }

    /// All-ones vector with the padding bits cleared.
    pub(crate) fn ones(&self) -> Vec<u64> {
        let mut out = vec![u64::MAX; self.words()];
        let tail = self.rows % 64;
        if tail != 0 {
            *out.last_mut().unwrap() = (1u64 << tail) - 1;
        }
        out
    }

    fn var_column(&self, i: usize) -> Vec<u64> {
        let k = self.vars.len();
        let shift = k - 1 - i;
        let mut out = vec![0u64; self.words()];
        for r in 0..self.rows {
            if (r >> shift) & 1 == 1 {
                out[r / 64] |= 1 << (r % 64);
            }
        }
        out
    }

    pub(crate) fn table(&self, f: &Formula) -> Result<Vec<u64>, SemanticsError> {
        match f {
            Formula::Var(name) => {
                let i = self
                    .vars
                    .binary_search(name)
                    .map_err(|_| SemanticsError::UndefinedVariable(name.to_string()))?;
                Ok(self.var_column(i))
            }
            Formula::Implies(a, b) => {
                let ta = self.table(a)?;
                let mut tb = self.table(b)?;
                for (x, y) in ta.iter().zip(tb.iter_mut()) {
                    *y |= !x;
                }
                let ones = self.ones();
                for (y, m) in tb.iter_mut().zip(ones) {
                    *y &= m;
                }
                Ok(tb)
            }
        }
    }

    pub(crate) fn row_valuation(&self, r: usize) -> Valuation {
        let k = self.vars.len();
        self.vars
            .iter()
            .enumerate()
            .map(|(i, name)| (name.clone(), (r >> (k - 1 - i)) & 1 == 1))
            .collect()
    }
}

/// First row index at which `mask` is set, if any.
pub(crate) fn first_set(mask: &[u64]) -> Option<usize> {
    mask.iter()
        .enumerate()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

impl TruthTable {
    pub fn with_max_vars(max_vars: usize) -> Self {
        TruthTable { max_vars }
    }

    pub fn is_tautology(&self, f: &Formula) -> Result<Verdict, SemanticsError> {
        let cols = Columns::new(f.variables().into_iter().collect(), self.max_vars)?;
        let table = cols.table(f)?;
        let falsified: Vec<u64> = table
            .iter()
            .zip(cols.ones())
            .map(|(t, m)| !t & m)
            .collect();
        Ok(match first_set(&falsified) {
            None => Verdict {
                tautology: true,
                countermodel: None,
            },
            Some(r) => Verdict {
                tautology: false,
                countermodel: Some(cols.row_valuation(r)),
            },
        })
    }

    /// Whether every valuation satisfying all `axioms` satisfies `f`.
    pub fn entails(&self, axioms: &[Formula], f: &Formula) -> Result<bool, SemanticsError> {
        let mut vars = BTreeSet::new();
        for a in axioms {
            a.collect_variables(&mut vars);
        }
        f.collect_variables(&mut vars);
        let cols = Columns::new(vars.into_iter().collect(), self.max_vars)?;
        let mut models = cols.ones();
        for a in axioms {
            let t = cols.table(a)?;
            for (m, x) in models.iter_mut().zip(t) {
                *m &= x;
            }
        }
        let t = cols.table(f)?;
        Ok(models.iter().zip(t).all(|(m, x)| m & !x == 0))
    }
}

pub fn is_tautology(f: &Formula) -> Result<Verdict, SemanticsError> {
    TruthTable::default().is_tautology(f)
}

pub fn entails(axioms: &[Formula], f: &Formula) -> Result<bool, SemanticsError> {
    TruthTable::default().entails(axioms, f)
}

/// Incrementally maintained set of models of a growing axiom list. Used by the
/// completion loop so that each query costs one column evaluation.
#[derive(Debug, Clone)]
pub(crate) struct ModelSet {
    table: TruthTable,
    axioms: Vec<Formula>,
    cols: Columns,
    models: Vec<u64>,
}

impl ModelSet {
    pub(crate) fn new(
        table: TruthTable,
        axioms: &[Formula],
        extra_vars: impl IntoIterator<Item = Name>,
    ) -> Result<Self, SemanticsError> {
        let mut vars: BTreeSet<Name> = extra_vars.into_iter().collect();
        for a in axioms {
            a.collect_variables(&mut vars);
        }
        let cols = Columns::new(vars.into_iter().collect(), table.max_vars)?;
        let mut set = ModelSet {
            table,
            axioms: Vec::new(),
            models: cols.ones(),
            cols,
        };
        for a in axioms {
            set.add(a.clone())?;
        }
        Ok(set)
    }

    fn widen(&mut self, f: &Formula) -> Result<(), SemanticsError> {
        let mut vars: BTreeSet<Name> = self.cols.vars().iter().cloned().collect();
        let before = vars.len();
        f.collect_variables(&mut vars);
        if vars.len() != before {
            let axioms = std::mem::take(&mut self.axioms);
            *self = ModelSet::new(self.table, &axioms, vars)?;
        }
        Ok(())
    }

    pub(crate) fn add(&mut self, f: Formula) -> Result<(), SemanticsError> {
        self.widen(&f)?;
        let t = self.cols.table(&f)?;
        for (m, x) in self.models.iter_mut().zip(t) {
            *m &= x;
        }
        self.axioms.push(f);
        Ok(())
    }

    pub(crate) fn entails(&mut self, f: &Formula) -> Result<bool, SemanticsError> {
        self.widen(f)?;
        let t = self.cols.table(f)?;
        Ok(self.models.iter().zip(t).all(|(m, x)| m & !x == 0))
    }
}
