//! Bounded forward proof search.
//!
//! Level 1 holds the seeds: the added axioms and every axiom instance whose
//! metavariables range over the term pool (subformulas of the goal, of the
//! added axioms, and of any extra terms, optionally with their `Q`-wraps). Level `k + 1` adds the consequent of
//! every known implication whose antecedent is already known. The search is
//! sound but incomplete: a `None` proves nothing.

use std::collections::HashMap;

use thiserror::Error;

use crate::formula::{q_wrap, Formula};
use crate::proof::{Extension, Proof, ProofBuilder};
use crate::scheme::{MetaVar, SchemeId, Substitution};

use super::consistency::discharge_extension_axiom;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("proof search exceeded {limit} known formulas")]
    ResourceLimit { limit: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_formulas: usize,
    /// Additional instantiation terms besides the goal's and axioms'
    /// subformulas.
    pub extra_terms: Vec<Formula>,
    /// When set to `q`, every pool term `s` also contributes `s ⊃ q`.
    pub wrap: Option<Formula>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_formulas: 400_000,
            extra_terms: Vec::new(),
            wrap: None,
        }
    }
}

#[derive(Debug, Clone)]
enum Origin {
    Axiom(SchemeId, Substitution),
    Ext(usize),
    Mp(Formula, Formula),
}

struct Known {
    origins: HashMap<Formula, Origin>,
    order: Vec<Formula>,
    limit: usize,
}

impl Known {
    fn insert(&mut self, f: Formula, origin: Origin) -> Result<(), SearchError> {
        if self.origins.contains_key(&f) {
            return Ok(());
        }
        if self.order.len() >= self.limit {
            return Err(SearchError::ResourceLimit { limit: self.limit });
        }
        self.origins.insert(f.clone(), origin);
        self.order.push(f);
        Ok(())
    }
}

fn term_pool(ext: &Extension, goal: &Formula, config: &SearchConfig) -> Vec<Formula> {
    let mut pool: Vec<Formula> = Vec::new();
    let mut sources = vec![goal];
    sources.extend(ext.added_axioms.iter());
    sources.extend(config.extra_terms.iter());
    for s in sources {
        pool.extend(s.subformulas());
    }
    if let Some(q) = &config.wrap {
        let wraps: Vec<Formula> = pool.iter().map(|s| q_wrap(q, s)).collect();
        pool.extend(wraps);
    }
    let mut keyed: Vec<(usize, String, Formula)> = pool
        .into_iter()
        .map(|f| (f.size(), f.to_string(), f))
        .collect();
    keyed.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    keyed.dedup_by(|a, b| a.2 == b.2);
    keyed.into_iter().map(|(_, _, f)| f).collect()
}

fn reconstruct(known: &Known, goal: &Formula) -> Proof {
    fn go(
        known: &Known,
        f: &Formula,
        b: &mut ProofBuilder,
        placed: &mut HashMap<Formula, usize>,
    ) -> usize {
        if let Some(&i) = placed.get(f) {
            return i;
        }
        let i = match &known.origins[f] {
            Origin::Axiom(scheme, sub) => b.axiom(*scheme, sub.clone()),
            Origin::Ext(k) => b.ext(*k, f),
            Origin::Mp(major, minor) => {
                let i = go(known, major, b, placed);
                let j = go(known, minor, b, placed);
                b.mp(i, j)
            }
        };
        placed.insert(f.clone(), i);
        i
    }
    let mut b = ProofBuilder::new();
    go(known, goal, &mut b, &mut HashMap::new());
    b.finish()
}

pub fn search_proof(
    ext: &Extension,
    goal: &Formula,
    depth: usize,
) -> Result<Option<Proof>, SearchError> {
    search_proof_with(ext, goal, depth, &SearchConfig::default())
}

/// Searches for `goal` directly and, failing that, for its final consequent
/// with the antecedents assumed as extra added axioms, which are then
/// discharged. Within each attempt, the first proof found at the lowest
/// level wins; ties are broken by discovery order, which is fixed by the
/// sorted term pool, so results are deterministic.
pub fn search_proof_with(
    ext: &Extension,
    goal: &Formula,
    depth: usize,
    config: &SearchConfig,
) -> Result<Option<Proof>, SearchError> {
    if depth == 0 {
        return Ok(None);
    }
    if let Some(p) = saturate(ext, goal, depth, config)? {
        return Ok(Some(p));
    }
    let mut antecedents = Vec::new();
    let mut head = goal;
    while let Some((a, b)) = head.as_implication() {
        antecedents.push(a.clone());
        head = b;
    }
    if antecedents.is_empty() {
        return Ok(None);
    }
    let mut assumed = ext.clone();
    assumed.added_axioms.extend(antecedents.iter().cloned());
    let Some(mut proof) = saturate(&assumed, head, depth, config)? else {
        return Ok(None);
    };
    for _ in &antecedents {
        let last = assumed.added_axioms.len() - 1;
        proof = discharge_extension_axiom(&proof, &assumed, last)
            .expect("saturation yields kernel-valid proofs");
        assumed.added_axioms.pop();
    }
    Ok(Some(proof))
}

fn saturate(
    ext: &Extension,
    goal: &Formula,
    depth: usize,
    config: &SearchConfig,
) -> Result<Option<Proof>, SearchError> {
    let mut known = Known {
        origins: HashMap::new(),
        order: Vec::new(),
        limit: config.max_formulas,
    };
    for (k, a) in ext.added_axioms.iter().enumerate() {
        known.insert(a.clone(), Origin::Ext(k))?;
    }
    let pool = term_pool(ext, goal, config);
    let bind = |pairs: &[(MetaVar, &Formula)]| {
        pairs
            .iter()
            .fold(Substitution::new(), |s, (m, f)| s.with(*m, (*f).clone()))
    };
    for x in &pool {
        for y in &pool {
            for scheme in [SchemeId::Ax1, SchemeId::Ax3] {
                let sub = bind(&[(MetaVar::A, x), (MetaVar::B, y)]);
                known.insert(scheme.instance(&sub), Origin::Axiom(scheme, sub))?;
            }
            for z in &pool {
                let sub = bind(&[(MetaVar::A, x), (MetaVar::B, y), (MetaVar::C, z)]);
                known.insert(SchemeId::Ax2.instance(&sub), Origin::Axiom(SchemeId::Ax2, sub))?;
            }
        }
    }
    if known.origins.contains_key(goal) {
        return Ok(Some(reconstruct(&known, goal)));
    }

    for _ in 1..depth {
        let mut fresh: Vec<(Formula, Origin)> = Vec::new();
        let mut fresh_set = std::collections::HashSet::new();
        for f in &known.order {
            if let Some((a, b)) = f.as_implication() {
                if known.origins.contains_key(a)
                    && !known.origins.contains_key(b)
                    && fresh_set.insert(b.clone())
                {
                    fresh.push((b.clone(), Origin::Mp(f.clone(), a.clone())));
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        for (f, origin) in fresh {
            known.insert(f, origin)?;
        }
        if known.origins.contains_key(goal) {
            return Ok(Some(reconstruct(&known, goal)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::check;
    use crate::parser::parse;
    use crate::semantics::entails;

    fn f(s: &str) -> Formula {
        parse(s).unwrap()
    }

    #[test]
    fn finds_axiom_instances_at_depth_one() {
        let p = search_proof(&Extension::base(), &f("p -> (q -> p)"), 1)
            .unwrap()
            .unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(check(&p, &Extension::base()).unwrap(), f("p -> (q -> p)"));
    }

    #[test]
    fn finds_modus_ponens_over_added_axioms() {
        let ext = Extension::new(vec![f("p"), f("p -> q")]);
        assert!(search_proof(&ext, &f("q"), 1).unwrap().is_none());
        let p = search_proof(&ext, &f("q"), 2).unwrap().unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(check(&p, &ext).unwrap(), f("q"));
    }

    #[test]
    fn finds_identity_directly_at_depth_three() {
        let goal = f("p -> p");
        assert!(saturate(&Extension::base(), &goal, 2, &SearchConfig::default())
            .unwrap()
            .is_none());
        let p = saturate(&Extension::base(), &goal, 3, &SearchConfig::default())
            .unwrap()
            .unwrap();
        assert_eq!(p.len(), 5);
        assert_eq!(check(&p, &Extension::base()).unwrap(), goal);
    }

    #[test]
    fn splitting_finds_contraction() {
        let goal = f("(p -> (p -> q)) -> (p -> q)");
        let plain = saturate(&Extension::base(), &goal, 6, &SearchConfig::default()).unwrap();
        assert!(plain.is_none());
        let p = search_proof(&Extension::base(), &goal, 3).unwrap().unwrap();
        assert!(p.hypotheses.is_empty());
        assert_eq!(check(&p, &Extension::base()).unwrap(), goal);
    }

    #[test]
    fn never_proves_a_variable() {
        for depth in 0..6 {
            assert!(search_proof(&Extension::base(), &f("p"), depth)
                .unwrap()
                .is_none());
        }
    }

    #[test]
    fn found_proofs_are_sound() {
        let ext = Extension::new(vec![f("p -> q")]);
        for goal in ["(q -> r) -> (p -> r)", "p -> p", "q -> (p -> q)", "p -> q"] {
            if let Some(proof) = search_proof(&ext, &f(goal), 4).unwrap() {
                assert_eq!(check(&proof, &ext).unwrap(), f(goal));
                assert!(entails(&ext.added_axioms, &f(goal)).unwrap());
            }
        }
    }

    #[test]
    fn deterministic() {
        let ext = Extension::new(vec![f("p -> q")]);
        let a = search_proof(&ext, &f("p -> p"), 4).unwrap();
        let b = search_proof(&ext, &f("p -> p"), 4).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn wraps_widen_the_pool() {
        let ext = Extension::new(vec![f("r")]);
        let plain = term_pool(&ext, &f("p -> p"), &SearchConfig::default());
        assert_eq!(plain, vec![f("p"), f("r"), f("p -> p")]);
        let cfg = SearchConfig {
            wrap: Some(f("q")),
            ..SearchConfig::default()
        };
        let wrapped = term_pool(&ext, &f("p -> p"), &cfg);
        assert_eq!(wrapped.len(), 6);
        assert!(wrapped.contains(&f("(p -> p) -> q")));
        assert!(wrapped.contains(&f("r -> q")));
        let found = search_proof_with(&ext, &f("(r -> q) -> q"), 2, &cfg).unwrap().unwrap();
        assert_eq!(check(&found, &ext).unwrap(), f("(r -> q) -> q"));
    }

    #[test]
    fn resource_limit() {
        let cfg = SearchConfig {
            max_formulas: 10,
            ..SearchConfig::default()
        };
        assert_eq!(
            search_proof_with(&Extension::base(), &f("p -> q"), 3, &cfg),
            Err(SearchError::ResourceLimit { limit: 10 })
        );
    }
}
