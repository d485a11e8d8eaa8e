//! Theoremhood oracles for extensions.
//!
//! [`OracleMode::Semantic`] answers by truth-table entailment from the added
//! axioms; [`OracleMode::Search`] answers by bounded proof search and may
//! report `false` for genuine theorems.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::formula::{Formula, Name};
use crate::metatheory::{search_proof, search_proof_with, SearchConfig, SearchError};
use crate::proof::Extension;
use crate::semantics::{ModelSet, SemanticsError, TruthTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum OracleMode {
    #[default]
    Semantic,
    Search { depth: usize },
}

impl fmt::Display for OracleMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleMode::Semantic => f.write_str("semantic"),
            OracleMode::Search { depth } => write!(f, "search:{depth}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown oracle '{0}' (expected 'semantic' or 'search:<depth>')")]
pub struct UnknownOracle(String);

impl FromStr for OracleMode {
    type Err = UnknownOracle;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "semantic" {
            return Ok(OracleMode::Semantic);
        }
        s.strip_prefix("search:")
            .and_then(|d| d.parse().ok())
            .map(|depth| OracleMode::Search { depth })
            .ok_or_else(|| UnknownOracle(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error(transparent)]
    Semantic(#[from] SemanticsError),
    #[error(transparent)]
    Search(#[from] SearchError),
}

/// Whether `f` is a theorem of `ext` according to `oracle`.
pub fn theoremhood_in(ext: &Extension, f: &Formula, oracle: OracleMode) -> Result<bool, OracleError> {
    match oracle {
        OracleMode::Semantic => Ok(TruthTable::default().entails(&ext.added_axioms, f)?),
        OracleMode::Search { depth } => Ok(search_proof(ext, f, depth)?.is_some()),
    }
}

/// An extension that can grow one axiom at a time while answering
/// theoremhood queries. In search mode the pool includes `Q`-wraps.
#[derive(Debug, Clone)]
pub(crate) struct Theory {
    ext: Extension,
    mode: OracleMode,
    models: Option<ModelSet>,
    search: SearchConfig,
}

impl Theory {
    /// `vars` pre-sizes the semantic truth table; queries mentioning other
    /// variables still work but trigger a rebuild.
    pub(crate) fn new(
        ext: &Extension,
        mode: OracleMode,
        q: &Formula,
        vars: BTreeSet<Name>,
    ) -> Result<Self, OracleError> {
        let models = match mode {
            OracleMode::Semantic => Some(ModelSet::new(
                TruthTable::default(),
                &ext.added_axioms,
                vars,
            )?),
            OracleMode::Search { .. } => None,
        };
        Ok(Theory {
            ext: ext.clone(),
            mode,
            models,
            search: SearchConfig {
                wrap: Some(q.clone()),
                ..SearchConfig::default()
            },
        })
    }

    pub(crate) fn proves(&mut self, f: &Formula) -> Result<bool, OracleError> {
        match (&mut self.models, self.mode) {
            (Some(models), _) => Ok(models.entails(f)?),
            (None, OracleMode::Search { depth }) => {
                Ok(search_proof_with(&self.ext, f, depth, &self.search)?.is_some())
            }
            (None, OracleMode::Semantic) => unreachable!("semantic theory without models"),
        }
    }

    pub(crate) fn add(&mut self, f: Formula) -> Result<(), OracleError> {
        if let Some(models) = &mut self.models {
            models.add(f.clone())?;
        }
        self.ext.added_axioms.push(f);
        Ok(())
    }

    pub(crate) fn extension(&self) -> &Extension {
        &self.ext
    }
}
