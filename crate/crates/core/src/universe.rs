//! Deterministic enumeration of formulas up to a size bound.

use std::collections::HashMap;

use thiserror::Error;

use crate::formula::{is_identifier, Formula};

/// Default cap on the number of formulas a single enumeration may produce.
pub const DEFAULT_MAX_FORMULAS: usize = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("variable list is empty")]
    NoVariables,
    #[error("size bound must be at least 1")]
    ZeroBound,
    #[error("invalid variable name '{0}'")]
    BadVariable(String),
    #[error("enumeration would produce {count} formulas, above the limit of {limit}")]
    TooLarge { count: u128, limit: usize },
}

/// An ordered, duplicate-free list of formulas: all formulas over `vars` with
/// at most `size_bound` variable leaves, sorted by size and then by canonical
/// text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Universe {
    vars: Vec<String>,
    size_bound: usize,
    formulas: Vec<Formula>,
    index: HashMap<Formula, usize>,
}

impl Universe {
    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn size_bound(&self) -> usize {
        self.size_bound
    }

    pub fn formulas(&self) -> &[Formula] {
        &self.formulas
    }

    pub fn len(&self) -> usize {
        self.formulas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.formulas.is_empty()
    }

    pub fn get(&self, n: usize) -> Option<&Formula> {
        self.formulas.get(n)
    }

    /// Position of `f` in the enumeration.
    pub fn position(&self, f: &Formula) -> Option<usize> {
        self.index.get(f).copied()
    }

    pub fn contains(&self, f: &Formula) -> bool {
        self.index.contains_key(f)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Formula> {
        self.formulas.iter()
    }
}

impl<'a> IntoIterator for &'a Universe {
    type Item = &'a Formula;
    type IntoIter = std::slice::Iter<'a, Formula>;

    fn into_iter(self) -> Self::IntoIter {
        self.iter()
    }
}

/// Number of formulas with exactly `n` leaves over `k` variables:
/// `Catalan(n - 1) * k^n`.
fn count_exact(k: u128, n: usize) -> u128 {
    let mut catalan: u128 = 1;
    for i in 0..(n as u128 - 1) {
        catalan = catalan.saturating_mul(2 * (2 * i + 1)) / (i + 2);
    }
    catalan.saturating_mul(k.saturating_pow(n as u32))
}

/// Total number of formulas [`enumerate`] would return.
pub fn universe_size(num_vars: usize, size_bound: usize) -> u128 {
    (1..=size_bound)
        .map(|n| count_exact(num_vars as u128, n))
        .fold(0u128, |acc, c| acc.saturating_add(c))
}

pub fn enumerate<S: AsRef<str>>(vars: &[S], size_bound: usize) -> Result<Universe, EnumerateError> {
    enumerate_with_limit(vars, size_bound, DEFAULT_MAX_FORMULAS)
}

pub fn enumerate_with_limit<S: AsRef<str>>(
    vars: &[S],
    size_bound: usize,
    limit: usize,
) -> Result<Universe, EnumerateError> {
    if size_bound == 0 {
        return Err(EnumerateError::ZeroBound);
    }
    let mut names: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
    if names.is_empty() {
        return Err(EnumerateError::NoVariables);
    }
    if let Some(bad) = names.iter().find(|v| !is_identifier(v)) {
        return Err(EnumerateError::BadVariable(bad.clone()));
    }
    names.sort();
    names.dedup();

    let count = universe_size(names.len(), size_bound);
    if count > limit as u128 {
        return Err(EnumerateError::TooLarge { count, limit });
    }

    // by_size[n] holds all formulas with n + 1 leaves, sorted by text.
    let mut by_size: Vec<Vec<Formula>> = Vec::with_capacity(size_bound);
    by_size.push(names.iter().map(|v| Formula::var(v)).collect());
    for n in 2..=size_bound {
        let mut layer: Vec<(String, Formula)> = Vec::new();
        for left in 1..n {
            for a in &by_size[left - 1] {
                for b in &by_size[n - left - 1] {
                    let f = Formula::implies(a.clone(), b.clone());
                    layer.push((f.to_string(), f));
                }
            }
        }
        layer.sort_by(|x, y| x.0.cmp(&y.0));
        by_size.push(layer.into_iter().map(|(_, f)| f).collect());
    }

    let formulas: Vec<Formula> = by_size.into_iter().flatten().collect();
    let index = formulas
        .iter()
        .enumerate()
        .map(|(i, f)| (f.clone(), i))
        .collect();
    Ok(Universe {
        vars: names,
        size_bound,
        formulas,
        index,
    })
}
