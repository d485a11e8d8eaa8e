//! Seeded generators shared by the integration tests.

#![allow(dead_code)]

use ipc::{q_wrap, qq_wrap, Extension, Formula, Proof, ProofBuilder};
use ipc::metatheory::prove_identity;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;
pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

const NAMES: [&str; 3] = ["p", "q", "r"];

/// One to `max` variable names drawn from `p, q, r`.
pub fn variables(rng: &mut TestRng, max: usize) -> Vec<&'static str> {
    let k = rng.gen_range(1..=max.min(NAMES.len()));
    NAMES[..k].to_vec()
}

/// A formula with exactly `size` leaves.
pub fn formula_of_size(rng: &mut TestRng, vars: &[&str], size: usize) -> Formula {
    if size <= 1 {
        return Formula::var(vars.choose(rng).unwrap());
    }
    let left = rng.gen_range(1..size);
    Formula::implies(
        formula_of_size(rng, vars, left),
        formula_of_size(rng, vars, size - left),
    )
}

pub fn formula(rng: &mut TestRng, vars: &[&str], max_size: usize) -> Formula {
    let size = rng.gen_range(1..=max_size);
    formula_of_size(rng, vars, size)
}

/// Indices `(major, minor)` where modus ponens applies.
fn mp_candidates(b: &ProofBuilder) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..b.len() {
        if let Some((a, _)) = b.formula(i).as_implication() {
            for j in 0..b.len() {
                if b.formula(j) == a {
                    out.push((i, j));
                }
            }
        }
    }
    out
}

/// Adds one random step. AX1 and AX2 often reuse earlier step formulas so
/// that modus ponens has something to work on.
fn random_step(rng: &mut TestRng, b: &mut ProofBuilder, vars: &[&str], hyps: &[Formula]) {
    let mps = mp_candidates(b);
    if !mps.is_empty() && rng.gen_bool(0.45) {
        let (i, j) = *mps.choose(rng).unwrap();
        b.mp(i, j);
        return;
    }
    let existing = |rng: &mut TestRng, b: &ProofBuilder| {
        if b.is_empty() || rng.gen_bool(0.3) {
            formula(rng, vars, 3)
        } else {
            b.formula(rng.gen_range(0..b.len())).clone()
        }
    };
    match rng.gen_range(0..10) {
        0..=2 if !hyps.is_empty() => {
            let h = hyps.choose(rng).unwrap().clone();
            b.hyp(&h);
        }
        0..=4 => {
            let a = existing(rng, b);
            let x = formula(rng, vars, 2);
            b.ax1(&a, &x);
        }
        5..=7 => {
            let major = existing(rng, b);
            match major.as_implication().and_then(|(a, bc)| {
                bc.as_implication().map(|(x, c)| (a.clone(), x.clone(), c.clone()))
            }) {
                Some((a, x, c)) => b.ax2(&a, &x, &c),
                None => b.ax2(
                    &formula(rng, vars, 2),
                    &formula(rng, vars, 2),
                    &formula(rng, vars, 2),
                ),
            };
        }
        _ => {
            let a = formula(rng, vars, 2);
            let x = formula(rng, vars, 2);
            b.ax3(&a, &x);
        }
    }
}

/// A kernel-valid derivation in the base calculus with at most `max_steps`
/// steps, up to three distinct hypotheses and up to three variables. Every
/// hypothesis is cited at least once.
pub fn derivation(rng: &mut TestRng, max_steps: usize) -> Proof {
    let vars = variables(rng, 3);
    let n_hyps = rng.gen_range(1..=3);
    let mut hyps: Vec<Formula> = Vec::new();
    while hyps.len() < n_hyps {
        let h = formula(rng, &vars, 3);
        if !hyps.contains(&h) {
            hyps.push(h);
        }
    }
    let steps = rng.gen_range(n_hyps.max(1)..=max_steps);
    let mut b = ProofBuilder::new();
    for h in &hyps {
        b.hyp(h);
    }
    while b.len() < steps {
        random_step(rng, &mut b, &vars, &hyps);
    }
    b.finish()
}

/// A kernel-valid proof in the base calculus without hypotheses.
pub fn closed_proof(rng: &mut TestRng, max_steps: usize) -> Proof {
    let vars = variables(rng, 3);
    let steps = rng.gen_range(1..=max_steps);
    let mut b = ProofBuilder::new();
    while b.len() < steps {
        random_step(rng, &mut b, &vars, &[]);
    }
    b.finish()
}

/// A proof of `q` in `M + {QA}` together with the extension and the index of
/// `QA` in it. `M` is returned separately.
pub struct Refutation {
    pub q: Formula,
    pub a: Formula,
    pub m: Extension,
    pub extended: Extension,
    pub qa_index: usize,
    pub proof: Proof,
}

impl Refutation {
    pub fn expected(&self) -> Formula {
        qq_wrap(&self.q, &self.a)
    }
}

/// Builds `proof_of_a` (valid in `M`, with `M`'s indices) followed by `QA`
/// and modus ponens, after inserting `QA` at a random position of `M`.
pub fn refutation(rng: &mut TestRng) -> Refutation {
    let vars = variables(rng, 3);
    let q = formula(rng, &vars, 2);
    let mut m: Vec<Formula> = (0..rng.gen_range(0..=2))
        .map(|_| formula(rng, &vars, 3))
        .collect();

    // How A becomes available in M.
    let route = rng.gen_range(0..5);
    let a = formula(rng, &vars, 3);
    let a = match route {
        2 => {
            let x = formula(rng, &vars, 2);
            let y = formula(rng, &vars, 2);
            Formula::implies(x.clone(), Formula::implies(y, x))
        }
        3 => {
            let x = formula(rng, &vars, 2);
            Formula::implies(x.clone(), x)
        }
        _ => a,
    };
    let mut body = ProofBuilder::new();
    // Extension indices refer to M until QA is spliced in below.
    match route {
        0 => {
            m.push(a.clone());
            body.ext(m.len() - 1, &a);
        }
        1 => {
            let b_f = formula(rng, &vars, 2);
            m.push(b_f.clone());
            m.push(Formula::implies(b_f.clone(), a.clone()));
            let i = body.ext(m.len() - 1, &Formula::implies(b_f.clone(), a.clone()));
            let j = body.ext(m.len() - 2, &b_f);
            body.mp(i, j);
        }
        2 => {
            let (x, rest) = a.as_implication().unwrap();
            let (y, _) = rest.as_implication().unwrap();
            body.ax1(x, y);
        }
        3 => {
            let (x, _) = a.as_implication().unwrap();
            body.append(&prove_identity(x));
        }
        _ => {
            m.push(qq_wrap(&q, &a));
        }
    }

    let qa = q_wrap(&q, &a);
    let qa_index = rng.gen_range(0..=m.len());
    let shift = |k: usize| if k >= qa_index { k + 1 } else { k };
    let mut extended = m.clone();
    extended.insert(qa_index, qa.clone());

    let mut b = ProofBuilder::new();
    let s_qa;
    if route == 4 {
        let qqa = qq_wrap(&q, &a);
        let i = b.ext(shift(m.len() - 1), &qqa);
        s_qa = b.ext(qa_index, &qa);
        b.mp(i, s_qa);
    } else {
        let shifted = reindex(&body.finish(), shift);
        let s_a = b.append(&shifted);
        s_qa = b.ext(qa_index, &qa);
        b.mp(s_qa, s_a);
    }
    let proof = b.finish();
    Refutation {
        q,
        a,
        m: Extension::new(m),
        extended: Extension::new(extended),
        qa_index,
        proof,
    }
}

fn reindex(p: &Proof, shift: impl Fn(usize) -> usize) -> Proof {
    let mut p = p.clone();
    for s in &mut p.steps {
        if let ipc::Justification::ExtensionAxiom(k) = s.justification {
            s.justification = ipc::Justification::ExtensionAxiom(shift(k));
        }
    }
    p
}

/// A finite extension with at most three added axioms over at most three
/// variables, and a sampled `q` of size at most four. About a third of the
/// samples take `q` from inside the axioms, which tends to make the
/// extension `q`-inconsistent.
pub fn extension_and_q(rng: &mut TestRng) -> (Extension, Formula, Vec<&'static str>) {
    let vars = variables(rng, 3);
    let axioms: Vec<Formula> = (0..rng.gen_range(0..=3))
        .map(|_| formula(rng, &vars, 3))
        .collect();
    let inner: Vec<Formula> = axioms
        .iter()
        .flat_map(|a| a.subformulas())
        .filter(|f| f.size() <= 4)
        .collect();
    let q = if !inner.is_empty() && rng.gen_bool(0.35) {
        inner.choose(rng).unwrap().clone()
    } else {
        formula(rng, &vars, 4)
    };
    (Extension::new(axioms), q, vars)
}
