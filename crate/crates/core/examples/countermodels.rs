use ipc::lindenbaum::LindenbaumError;
use ipc::{countermodel, eval, parse, OracleMode};

fn main() {
    for text in [
        "p",
        "p -> q",
        "(p -> q) -> q",
        "((p -> q) -> q) -> p",
        "(p -> (q -> r)) -> (q -> r)",
        "((p -> q) -> p) -> p",
    ] {
        let f = parse(text).unwrap();
        match countermodel(&f, 3, OracleMode::Semantic) {
            Ok(v) => println!("{:<40} falsified by {v} (value {})", f.to_string(), u8::from(eval(&v, &f).unwrap())),
            Err(LindenbaumError::Tautology(_)) => println!("{:<40} is a tautology", f.to_string()),
            Err(e) => println!("{:<40} {e}", f.to_string()),
        }
    }

    // Bounded search can stand in for the truth tables on small universes.
    let f = parse("p -> q").unwrap();
    match countermodel(&f, 2, OracleMode::Search { depth: 4 }) {
        Ok(v) => println!("via search: {f} falsified by {v}"),
        Err(e) => println!("via search: {e}"),
    }
}
