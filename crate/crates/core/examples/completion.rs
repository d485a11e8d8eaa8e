//! Completes the base calculus with respect to a non-theorem and reads off
//! truth values.

use ipc::cli::trace_records;
use ipc::{complete, enumerate, extract_valuation, parse, verify_valuation_claim, Extension, OracleMode};

fn main() {
    let q = parse("(p -> q) -> q").unwrap();
    let universe = enumerate(&["p", "q"], 3).unwrap();
    let trace = complete(&Extension::base(), &q, &universe, OracleMode::Semantic).unwrap();
    print!("{}", trace_records(&trace));
    println!("{} of {} axioms added", trace.added_axioms().len(), universe.len());

    let v = extract_valuation(&trace, OracleMode::Semantic).unwrap();
    println!("assignment {}", v.assignment());
    for f in ["p", "q", "p -> q", "(p -> q) -> q"] {
        let f = parse(f).unwrap();
        println!("  v({f}) = {}", u8::from(v.value(&f).unwrap()));
    }
    let report = verify_valuation_claim(&v);
    println!("{} implications checked, {} violations", report.checked, report.violations.len());
}
