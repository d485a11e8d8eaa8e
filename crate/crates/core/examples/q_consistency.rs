use ipc::metatheory::{
    discharge_extension_axiom, inconsistency_from_witness, q_inconsistency_conditions,
};
use ipc::{check, enumerate, parse, Extension, OracleMode, ProofBuilder};

fn main() {
    let f = |s: &str| parse(s).unwrap();
    let q = f("q");
    let u = enumerate(&["p", "q"], 3).unwrap();

    for axioms in [vec!["p -> q"], vec!["p", "p -> q"], vec!["(p -> q) -> q", "p -> q"]] {
        let ext = Extension::new(axioms.iter().map(|s| f(s)).collect());
        let c = q_inconsistency_conditions(&ext, &q, u.formulas(), OracleMode::Semantic).unwrap();
        println!("{axioms:?}: {:?}, witness {:?}", c.as_bools(), c.witness.map(|w| w.to_string()));
    }

    // An explicit witness: p and p -> q give q.
    let ext = Extension::new(vec![f("p"), f("p -> q")]);
    let one = |k: usize| {
        let mut b = ProofBuilder::new();
        b.ext(k, &ext.added_axioms[k]);
        b.finish()
    };
    let proof = inconsistency_from_witness(&ext, &q, &one(0), &one(1)).unwrap();
    println!("q in {} steps: {}", proof.len(), check(&proof, &ext).unwrap());

    // Dropping p -> q turns the proof of q into a proof of (p -> q) -> q.
    let smaller = discharge_extension_axiom(&proof, &ext, 1).unwrap();
    let m = Extension::new(vec![f("p")]);
    println!("in {{p}}: {}", check(&smaller, &m).unwrap());
}
