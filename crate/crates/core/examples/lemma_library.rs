//! Builds every lemma of the library and checks it.

use ipc::metatheory::{derive_lemma, Lemma};
use ipc::{check, is_tautology, parse, Extension, SchemeId};

fn main() {
    let f = |s: &str| parse(s).unwrap();
    let (q, a, b, c) = (f("q"), f("p"), f("r"), f("s"));
    for lemma in Lemma::ALL {
        let proof = derive_lemma(lemma, &q, &a, &b, &c);
        let conclusion = check(&proof, &Extension::base()).unwrap();
        println!(
            "{lemma}  steps={:<5} peirce={}  tautology={}  {conclusion}",
            proof.len(),
            proof.scheme_count(SchemeId::Ax3),
            is_tautology(&conclusion).unwrap().tautology,
        );
    }

    // The same lemma with compound arguments.
    let proof = derive_lemma(Lemma::AntecedentLift, &f("q -> q"), &f("p -> r"), &f("s"), &c);
    println!("instance: {}", check(&proof, &Extension::base()).unwrap());
}
