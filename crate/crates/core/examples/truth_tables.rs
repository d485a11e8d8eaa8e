use ipc::semantics::TruthTable;
use ipc::{entails, eval, is_tautology, parse, Valuation};

fn main() {
    for text in [
        "((p -> q) -> p) -> p",
        "(p -> q) -> ((q -> r) -> (p -> r))",
        "(p -> q) -> q",
        "p -> (q -> r)",
    ] {
        let f = parse(text).unwrap();
        let verdict = is_tautology(&f).unwrap();
        match verdict.countermodel {
            None => println!("tautology      {f}"),
            Some(v) => println!("falsified by {v}  {f}"),
        }
    }

    let v = Valuation::new().with("p", true).with("q", false);
    println!("p=1 q=0 gives (q -> p) = {}", eval(&v, &parse("q -> p").unwrap()).unwrap());

    let gamma = [parse("p -> q").unwrap(), parse("q -> r").unwrap()];
    println!("{{p -> q, q -> r}} entails p -> r: {}", entails(&gamma, &parse("p -> r").unwrap()).unwrap());

    let tiny = TruthTable::with_max_vars(1);
    println!("with a 1-variable limit: {}", tiny.is_tautology(&parse("p -> q").unwrap()).unwrap_err());
}
