//! Axiom schemes, substitutions and scheme matching.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::formula::Formula;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MetaVar {
    A,
    B,
    C,
}

impl MetaVar {
    pub const ALL: [MetaVar; 3] = [MetaVar::A, MetaVar::B, MetaVar::C];

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for MetaVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            MetaVar::A => "A",
            MetaVar::B => "B",
            MetaVar::C => "C",
        };
        f.write_str(s)
    }
}

/// A formula whose leaves are metavariables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Pattern {
    Meta(MetaVar),
    Implies(Box<Pattern>, Box<Pattern>),
}

impl Pattern {
    pub fn implies(a: Pattern, b: Pattern) -> Pattern {
        Pattern::Implies(Box::new(a), Box::new(b))
    }

    fn metavars(&self, out: &mut Vec<MetaVar>) {
        match self {
            Pattern::Meta(m) => {
                if !out.contains(m) {
                    out.push(*m);
                }
            }
            Pattern::Implies(a, b) => {
                a.metavars(out);
                b.metavars(out);
            }
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::Meta(m) => write!(f, "{m}"),
            Pattern::Implies(a, b) => write!(f, "({a} -> {b})"),
        }
    }
}

/// Partial map from metavariables to formulas.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Substitution {
    slots: [Option<Formula>; 3],
}

impl Substitution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, m: MetaVar, f: Formula) -> Self {
        self.slots[m.index()] = Some(f);
        self
    }

    pub fn get(&self, m: MetaVar) -> Option<&Formula> {
        self.slots[m.index()].as_ref()
    }

    pub fn set(&mut self, m: MetaVar, f: Formula) {
        self.slots[m.index()] = Some(f);
    }

    /// Bound metavariables in `A, B, C` order.
    pub fn bindings(&self) -> impl Iterator<Item = (MetaVar, &Formula)> {
        MetaVar::ALL
            .into_iter()
            .filter_map(move |m| self.get(m).map(|f| (m, f)))
    }

    pub fn is_empty(&self) -> bool {
        self.slots.iter().all(Option::is_none)
    }
}

/// `A:=p,B:=(p -> q)`, the form used inside proof files.
impl fmt::Display for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (m, formula)) in self.bindings().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}:={formula}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchemeError {
    #[error("metavariable {0} is not bound by the substitution")]
    Unbound(MetaVar),
    #[error("unknown axiom scheme '{0}'")]
    UnknownScheme(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SchemeId {
    /// `A ⊃ (B ⊃ A)`
    Ax1,
    /// `[A ⊃ (B ⊃ C)] ⊃ [(A ⊃ B) ⊃ (A ⊃ C)]`
    Ax2,
    /// Peirce: `[(A ⊃ B) ⊃ A] ⊃ A`
    Ax3,
}

impl SchemeId {
    pub const ALL: [SchemeId; 3] = [SchemeId::Ax1, SchemeId::Ax2, SchemeId::Ax3];

    pub fn body(self) -> Pattern {
        use MetaVar::*;
        let m = Pattern::Meta;
        let imp = Pattern::implies;
        match self {
            SchemeId::Ax1 => imp(m(A), imp(m(B), m(A))),
            SchemeId::Ax2 => imp(
                imp(m(A), imp(m(B), m(C))),
                imp(imp(m(A), m(B)), imp(m(A), m(C))),
            ),
            SchemeId::Ax3 => imp(imp(imp(m(A), m(B)), m(A)), m(A)),
        }
    }

    /// Metavariables occurring in the scheme, in `A, B, C` order.
    pub fn metavars(self) -> Vec<MetaVar> {
        let mut out = Vec::new();
        self.body().metavars(&mut out);
        out.sort();
        out
    }

    /// Instantiates the scheme. Panics if a needed metavariable is missing,
    /// which only happens on programmer error; use [`apply`] for fallible input.
    pub fn instance(self, sub: &Substitution) -> Formula {
        apply(sub, &self.body()).expect("scheme instantiated with a partial substitution")
    }
}

impl fmt::Display for SchemeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SchemeId::Ax1 => "AX1",
            SchemeId::Ax2 => "AX2",
            SchemeId::Ax3 => "AX3",
        };
        f.write_str(s)
    }
}

impl FromStr for SchemeId {
    type Err = SchemeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "AX1" => Ok(SchemeId::Ax1),
            "AX2" => Ok(SchemeId::Ax2),
            "AX3" => Ok(SchemeId::Ax3),
            other => Err(SchemeError::UnknownScheme(other.to_string())),
        }
    }
}

/// Simultaneously replaces every metavariable in `body`.
pub fn apply(sub: &Substitution, body: &Pattern) -> Result<Formula, SchemeError> {
    match body {
        Pattern::Meta(m) => sub.get(*m).cloned().ok_or(SchemeError::Unbound(*m)),
        Pattern::Implies(a, b) => Ok(Formula::implies(apply(sub, a)?, apply(sub, b)?)),
    }
}

fn unify(pattern: &Pattern, f: &Formula, sub: &mut Substitution) -> bool {
    match pattern {
        Pattern::Meta(m) => match sub.get(*m) {
            Some(bound) => bound == f,
            None => {
                sub.set(*m, f.clone());
                true
            }
        },
        Pattern::Implies(pa, pb) => match f {
            Formula::Implies(fa, fb) => unify(pa, fa, sub) && unify(pb, fb, sub),
            Formula::Var(_) => false,
        },
    }
}

/// Finds the substitution that instantiates `scheme` to `f`, if any. When it
/// exists it is unique and binds exactly the scheme's metavariables.
pub fn match_scheme(scheme: SchemeId, f: &Formula) -> Option<Substitution> {
    let mut sub = Substitution::new();
    unify(&scheme.body(), f, &mut sub).then_some(sub)
}
