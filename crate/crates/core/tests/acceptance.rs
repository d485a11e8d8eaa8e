//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::Rng;

use ipc::lindenbaum::{countermodel_run, CountermodelConfig, LindenbaumError};
use ipc::metatheory::{
    deduction_transform, derive_lemma, discharge_extension_axiom, q_inconsistency_conditions,
    search_proof, Lemma,
};
use ipc::{check, enumerate, eval, is_tautology, parse, Extension, Formula, OracleMode, SchemeId};

struct Outcome {
    failures: Vec<String>,
    detail: String,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            failures: Vec::new(),
            detail: String::new(),
        }
    }

    fn fail(&mut self, msg: impl Into<String>) {
        self.failures.push(msg.into());
    }
}

fn f(s: &str) -> Formula {
    parse(s).unwrap()
}

fn lemma_library() -> Outcome {
    // Independently written instances at q := q, A := p, B := r, C := s.
    let expected = [
        "(p -> r) -> ((r -> s) -> (p -> s))",
        "(p -> r) -> ((r -> q) -> (p -> q))",
        "p -> ((p -> q) -> q)",
        "(((p -> q) -> q) -> q) -> (p -> q)",
        "((r -> q) -> q) -> (((p -> r) -> q) -> q)",
        "((p -> q) -> q) -> ((r -> q) -> ((p -> r) -> q))",
        "(p -> q) -> (((p -> r) -> q) -> q)",
        "((p -> q) -> r) -> ((((p -> q) -> q) -> r) -> ((r -> q) -> q))",
    ];
    let (q, a, b, c) = (f("q"), f("p"), f("r"), f("s"));
    let mut out = Outcome::new();
    let mut ax3_counts = Vec::new();
    for (k, text) in (1..=8).zip(expected) {
        let lemma = Lemma::from_index(k).unwrap();
        let proof = derive_lemma(lemma, &q, &a, &b, &c);
        let conclusion = match check(&proof, &Extension::base()) {
            Ok(c) => c,
            Err(e) => {
                out.fail(format!("{lemma}: kernel rejected: {e}"));
                continue;
            }
        };
        if !proof.hypotheses.is_empty() {
            out.fail(format!("{lemma}: proof has hypotheses"));
        }
        let want = f(text);
        if conclusion.to_string() != want.to_string() {
            out.fail(format!("{lemma}: concluded {conclusion}, expected {want}"));
        }
        let ax3 = proof.scheme_count(SchemeId::Ax3);
        ax3_counts.push(ax3);
        if (k == 7) != (ax3 >= 1) {
            out.fail(format!("{lemma}: {ax3} AX3 steps"));
        }
        if !is_tautology(&conclusion).unwrap().tautology {
            out.fail(format!("{lemma}: conclusion is not a tautology"));
        }
    }
    out.detail = format!("AX3 counts {ax3_counts:?}");
    out
}

fn deduction_theorem() -> Outcome {
    let mut rng = common::rng(0xD7);
    let mut out = Outcome::new();
    let mut total_steps = 0;
    for case in 0..200 {
        let d = common::derivation(&mut rng, 10);
        total_steps += d.len();
        let base = Extension::base();
        if let Err(e) = check(&d, &base) {
            out.fail(format!("case {case}: generator produced invalid derivation: {e}"));
            continue;
        }
        let a = d.hypotheses[rng.gen_range(0..d.hypotheses.len())].clone();
        let t = match deduction_transform(&d, &base, &a) {
            Ok(t) => t,
            Err(e) => {
                out.fail(format!("case {case}: {e}"));
                continue;
            }
        };
        let want_hyps: Vec<Formula> = d.hypotheses.iter().filter(|h| **h != a).cloned().collect();
        if t.hypotheses != want_hyps {
            out.fail(format!("case {case}: hypotheses {:?}, expected {want_hyps:?}", t.hypotheses));
        }
        let want = Formula::implies(a.clone(), d.conclusion().unwrap().clone());
        match check(&t, &base) {
            Ok(c) if c == want => {}
            Ok(c) => out.fail(format!("case {case}: concluded {c}, expected {want}")),
            Err(e) => out.fail(format!("case {case}: transformed proof invalid: {e}")),
        }
    }
    out.detail = format!("200 derivations, {total_steps} steps");
    out
}

fn soundness_fuzz() -> Outcome {
    let mut rng = common::rng(0x50);
    let mut out = Outcome::new();
    let mut mp_steps = 0;
    for case in 0..1000 {
        let p = common::closed_proof(&mut rng, 12);
        mp_steps += p
            .steps
            .iter()
            .filter(|s| matches!(s.justification, ipc::Justification::ModusPonens { .. }))
            .count();
        let c = match check(&p, &Extension::base()) {
            Ok(c) => c,
            Err(e) => {
                out.fail(format!("case {case}: generator produced invalid proof: {e}"));
                continue;
            }
        };
        if !is_tautology(&c).unwrap().tautology {
            out.fail(format!("case {case}: theorem {c} is not a tautology"));
        }
    }
    out.detail = format!("1000 proofs, {mp_steps} modus ponens steps");
    out
}

/// Runs the countermodel pipeline on every formula over {p, q} up to five
/// leaves. Returns criterion 4 and criterion 5 outcomes.
fn completeness() -> (Outcome, Outcome) {
    let universe = enumerate(&["p", "q"], 5).unwrap();
    let mut c4 = Outcome::new();
    let mut c5 = Outcome::new();
    let (mut refuted, mut tautologies, mut runs, mut checked) = (0, 0, 0, 0);
    for q in universe.iter() {
        let taut = is_tautology(q).unwrap().tautology;
        let config = CountermodelConfig::new(q.size(), OracleMode::Semantic);
        match (taut, countermodel_run(q, &config)) {
            (true, Err(LindenbaumError::Tautology(_))) => tautologies += 1,
            (true, other) => c4.fail(format!("{q}: tautology not refused: {other:?}")),
            (false, Ok(run)) => {
                runs += 1;
                match eval(&run.assignment, q) {
                    Ok(false) => refuted += 1,
                    Ok(true) => c4.fail(format!("{q}: {} does not falsify", run.assignment)),
                    Err(e) => c4.fail(format!("{q}: {e}")),
                }
                checked += run.claim.checked;
                if !run.claim.holds() {
                    c5.fail(format!("{q}: {} claim violations", run.claim.violations.len()));
                }
                if run.valuation.value(q) != Some(false) {
                    c5.fail(format!("{q}: v(q) is {:?}", run.valuation.value(q)));
                }
            }
            (false, Err(e)) => c4.fail(format!("{q}: {e}")),
        }
    }
    c4.detail = format!(
        "{} formulas: {refuted} falsified, {tautologies} tautologies refused",
        universe.len()
    );
    c5.detail = format!("{runs} runs, {checked} implications checked");
    (c4, c5)
}

fn q_inconsistency_equivalence() -> Outcome {
    let mut rng = common::rng(0x22);
    let mut out = Outcome::new();
    let mut inconsistent = 0;
    for case in 0..50 {
        let (ext, q, vars) = common::extension_and_q(&mut rng);
        let universe = enumerate(&vars, 4).unwrap();
        let c = q_inconsistency_conditions(&ext, &q, universe.formulas(), OracleMode::Semantic)
            .unwrap();
        if c.proves_q {
            inconsistent += 1;
        }
        if !c.agree() {
            out.fail(format!(
                "case {case}: {:?} proves {q}: conditions {:?}",
                ext.added_axioms,
                c.as_bools()
            ));
        }
    }
    out.detail = format!("50 extensions, {inconsistent} q-inconsistent");
    out
}

fn constructive_discharge() -> Outcome {
    let mut rng = common::rng(0x23);
    let mut out = Outcome::new();
    for case in 0..50 {
        let r = common::refutation(&mut rng);
        match check(&r.proof, &r.extended) {
            Ok(c) if c == r.q => {}
            other => {
                out.fail(format!("case {case}: synthetic proof of q broken: {other:?}"));
                continue;
            }
        }
        let d = match discharge_extension_axiom(&r.proof, &r.extended, r.qa_index) {
            Ok(d) => d,
            Err(e) => {
                out.fail(format!("case {case}: {e}"));
                continue;
            }
        };
        match check(&d, &r.m) {
            Ok(c) if c == r.expected() && d.hypotheses.is_empty() => {}
            Ok(c) => out.fail(format!("case {case}: concluded {c}, expected {}", r.expected())),
            Err(e) => out.fail(format!("case {case}: discharged proof invalid: {e}")),
        }
    }
    out.detail = "50 discharges".to_string();
    out
}

fn oracle_cross_check() -> Outcome {
    let universe = enumerate(&["p", "q"], 4).unwrap();
    let mut out = Outcome::new();
    let (mut found, mut limited) = (0, 0);
    for goal in universe.iter() {
        match search_proof(&Extension::base(), goal, 6) {
            Ok(Some(proof)) => {
                found += 1;
                if check(&proof, &Extension::base()).as_ref() != Ok(goal) {
                    out.fail(format!("{goal}: search returned an invalid proof"));
                }
                if !is_tautology(goal).unwrap().tautology {
                    out.fail(format!("{goal}: found by search but not a tautology"));
                }
            }
            Ok(None) => {}
            Err(_) => limited += 1,
        }
    }
    out.detail = format!(
        "{} formulas, {found} proved, {limited} hit the resource limit",
        universe.len()
    );
    out
}

fn report(n: usize, name: &str, limit: Option<Duration>, elapsed: Duration, o: &Outcome) -> bool {
    let slow = limit.is_some_and(|l| elapsed > l);
    let ok = o.failures.is_empty() && !slow;
    let limit_text = limit.map_or(String::new(), |l| format!(" / {:.0} s", l.as_secs_f64()));
    println!(
        "{} criterion {n} {name}: {} failures, {:.2} s{limit_text}; {}",
        if ok { "PASS" } else { "FAIL" },
        o.failures.len(),
        elapsed.as_secs_f64(),
        o.detail
    );
    for msg in o.failures.iter().take(5) {
        println!("    {msg}");
    }
    ok
}

fn timed<T>(run: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let v = run();
    (v, start.elapsed())
}

fn main() -> ExitCode {
    let secs = |s| Some(Duration::from_secs(s));
    let mut all = true;

    let (o, t) = timed(lemma_library);
    all &= report(1, "lemma library", secs(5), t, &o);
    let (o, t) = timed(deduction_theorem);
    all &= report(2, "deduction theorem", secs(10), t, &o);
    let (o, t) = timed(soundness_fuzz);
    all &= report(3, "soundness fuzz", secs(30), t, &o);
    let ((c4, c5), t) = timed(completeness);
    all &= report(4, "countermodels over {p,q} size <= 5", secs(60), t, &c4);
    all &= report(5, "valuation claim", None, t, &c5);
    let (o, t) = timed(q_inconsistency_equivalence);
    all &= report(6, "q-inconsistency conditions", None, t, &o);
    let (o, t) = timed(constructive_discharge);
    all &= report(7, "constructive discharge", None, t, &o);
    let (o, t) = timed(oracle_cross_check);
    all &= report(8, "search vs semantic oracle", None, t, &o);

    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
