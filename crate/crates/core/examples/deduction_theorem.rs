use ipc::metatheory::deduction_transform;
use ipc::proof_file::print_proof;
use ipc::{check, parse, Extension, ProofBuilder};

fn main() {
    let f = |s: &str| parse(s).unwrap();
    let (a, ab, bc) = (f("p"), f("p -> q"), f("q -> r"));

    // r from p, p -> q, q -> r
    let mut b = ProofBuilder::new();
    let s_a = b.hyp(&a);
    let s_ab = b.hyp(&ab);
    let s_bc = b.hyp(&bc);
    let s_b = b.mp(s_ab, s_a);
    b.mp(s_bc, s_b);
    let d = b.finish();

    let base = Extension::base();
    println!("original ({} steps):\n{}", d.len(), print_proof(&d, &base));

    let mut current = d;
    for h in [&a, &bc, &ab] {
        current = deduction_transform(&current, &base, h).unwrap();
        println!(
            "after discharging {h}: {} steps, concludes {}",
            current.len(),
            check(&current, &base).unwrap()
        );
    }
}
