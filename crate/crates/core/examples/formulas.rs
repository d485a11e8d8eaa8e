//! Parsing, printing and enumerating formulas.

use ipc::{enumerate, parse, q_wrap, qq_wrap};

fn main() {
    let f = parse("((p -> q) -> p) ⊃ p").unwrap();
    println!("canonical:   {f}");
    println!("size:        {}", f.size());
    println!("variables:   {:?}", f.variables());
    println!("subformulas: {}", f.subformulas().len());

    let q = parse("q").unwrap();
    let a = parse("p").unwrap();
    println!("QA  = {}", q_wrap(&q, &a));
    println!("QQA = {}", qq_wrap(&q, &a));

    match parse("p -> (q") {
        Ok(_) => unreachable!(),
        Err(e) => println!("error: {e}"),
    }

    let u = enumerate(&["p", "q"], 3).unwrap();
    println!("{} formulas over {{p, q}} with at most 3 leaves; first ten:", u.len());
    for f in u.iter().take(10) {
        println!("  {f}");
    }
}
