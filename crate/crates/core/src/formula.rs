//! Implicational formulas.
//!
//! A [`Formula`] is either a propositional variable or an implication between
//! two formulas. Formulas are immutable and cheap to clone; subtrees are shared
//! through [`Arc`], so values can be freely sent between threads.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

/// Name of a propositional variable, matching `[a-z][a-zA-Z0-9_]*`.
pub type Name = Arc<str>;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Var(Name),
    Implies(Arc<Formula>, Arc<Formula>),
}

impl Formula {
    /// Builds a variable. The name is not validated; use [`is_identifier`] or
    /// the parser when the name comes from user input.
    pub fn var(name: &str) -> Formula {
        Formula::Var(Arc::from(name))
    }

    pub fn implies(antecedent: Formula, consequent: Formula) -> Formula {
        Formula::Implies(Arc::new(antecedent), Arc::new(consequent))
    }

    /// Returns `(antecedent, consequent)` when `self` is an implication.
    pub fn as_implication(&self) -> Option<(&Formula, &Formula)> {
        match self {
            Formula::Implies(a, b) => Some((a, b)),
            Formula::Var(_) => None,
        }
    }

    pub fn as_var(&self) -> Option<&str> {
        match self {
            Formula::Var(name) => Some(name),
            Formula::Implies(..) => None,
        }
    }

    /// Number of variable leaves.
    pub fn size(&self) -> usize {
        match self {
            Formula::Var(_) => 1,
            Formula::Implies(a, b) => a.size() + b.size(),
        }
    }

    /// Set of variable names occurring in the formula.
    pub fn variables(&self) -> BTreeSet<Name> {
        let mut out = BTreeSet::new();
        self.collect_variables(&mut out);
        out
    }

    pub(crate) fn collect_variables(&self, out: &mut BTreeSet<Name>) {
        match self {
            Formula::Var(name) => {
                out.insert(name.clone());
            }
            Formula::Implies(a, b) => {
                a.collect_variables(out);
                b.collect_variables(out);
            }
        }
    }

    /// All distinct subformulas, including `self`, in post-order of first
    /// occurrence.
    pub fn subformulas(&self) -> Vec<Formula> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        self.collect_subformulas(&mut seen, &mut out);
        out
    }

    fn collect_subformulas(&self, seen: &mut BTreeSet<Formula>, out: &mut Vec<Formula>) {
        if seen.contains(self) {
            return;
        }
        if let Formula::Implies(a, b) = self {
            a.collect_subformulas(seen, out);
            b.collect_subformulas(seen, out);
        }
        seen.insert(self.clone());
        out.push(self.clone());
    }
}

/// `A ⊃ Q`, the negation surrogate of `a` relative to `q`.
pub fn q_wrap(q: &Formula, a: &Formula) -> Formula {
    Formula::implies(a.clone(), q.clone())
}

/// `(A ⊃ Q) ⊃ Q`.
pub fn qq_wrap(q: &Formula, a: &Formula) -> Formula {
    q_wrap(q, &q_wrap(q, a))
}

pub fn variables_of(f: &Formula) -> BTreeSet<Name> {
    f.variables()
}

/// Whether `s` is a legal variable name.
pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_lowercase() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Canonical text: variables bare, every implication parenthesized.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Var(name) => f.write_str(name),
            Formula::Implies(a, b) => write!(f, "({a} -> {b})"),
        }
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Canonical text of a formula. Same as its `Display` output.
pub fn print(f: &Formula) -> String {
    f.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> Formula {
        Formula::var("p")
    }
    fn q() -> Formula {
        Formula::var("q")
    }

    #[test]
    fn prints_canonically() {
        assert_eq!(print(&Formula::implies(p(), q())), "(p -> q)");
        assert_eq!(print(&p()), "p");
        assert_eq!(print(&q_wrap(&q(), &p())), "(p -> q)");
    }

    #[test]
    fn q_wrap_twice_is_double_negation_surrogate() {
        assert_eq!(qq_wrap(&q(), &p()).to_string(), "((p -> q) -> q)");
        assert_eq!(q_wrap(&q(), &q_wrap(&q(), &p())), qq_wrap(&q(), &p()));
        let big_q = Formula::var("r");
        assert_eq!(q_wrap(&big_q, &big_q).to_string(), "(r -> r)");
    }

    #[test]
    fn size_counts_leaves() {
        let f = Formula::implies(Formula::implies(p(), p()), p());
        assert_eq!(f.size(), 3);
        assert_eq!(p().size(), 1);
    }

    #[test]
    fn variables() {
        let f = Formula::implies(p(), Formula::implies(q(), p()));
        let vs: Vec<_> = variables_of(&f).iter().map(|s| s.to_string()).collect();
        assert_eq!(vs, ["p", "q"]);
        assert_eq!(variables_of(&p()).len(), 1);
        let g = Formula::implies(Formula::implies(p(), p()), p());
        assert_eq!(variables_of(&g).len(), 1);
    }

    #[test]
    fn subformulas_are_distinct() {
        let pp = Formula::implies(p(), p());
        let f = Formula::implies(pp.clone(), pp.clone());
        assert_eq!(f.subformulas(), vec![p(), pp, f.clone()]);
    }

    #[test]
    fn identifiers() {
        assert!(is_identifier("p"));
        assert!(is_identifier("x_1Y"));
        assert!(!is_identifier("P"));
        assert!(!is_identifier("1p"));
        assert!(!is_identifier(""));
    }
}
