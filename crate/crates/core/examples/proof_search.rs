use ipc::metatheory::{search_proof, search_proof_with, SearchConfig};
use ipc::proof_file::print_proof;
use ipc::{check, parse, Extension};

fn main() {
    let base = Extension::base();
    for goal in ["p -> p", "(p -> (p -> q)) -> (p -> q)", "((p -> q) -> p) -> p", "p"] {
        let goal = parse(goal).unwrap();
        let found: Vec<String> = (1..=3)
            .map(|depth| match search_proof(&base, &goal, depth).unwrap() {
                Some(p) => format!("{} steps", p.len()),
                None => "-".to_string(),
            })
            .collect();
        println!("{goal}: depths 1..3 give {found:?}");
    }

    let ext = Extension::new(vec![parse("p -> q").unwrap(), parse("q -> r").unwrap()]);
    let goal = parse("p -> r").unwrap();
    if let Some(p) = search_proof(&ext, &goal, 3).unwrap() {
        println!("\n{} from the added axioms:", check(&p, &ext).unwrap());
        print!("{}", print_proof(&p, &ext));
    }

    let tight = SearchConfig {
        max_formulas: 50,
        ..SearchConfig::default()
    };
    println!("\n{:?}", search_proof_with(&base, &goal, 4, &tight));
}
