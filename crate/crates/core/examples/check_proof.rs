//! Writes a proof in the text format, then checks it and a broken copy.

use ipc::{check, parse_proof_file};

const PROOF: &str = "\
# identity, from the first two schemes
1. (p -> ((p -> p) -> p)) | AX1{A:=p,B:=(p -> p)}
2. ((p -> ((p -> p) -> p)) -> ((p -> (p -> p)) -> (p -> p))) | AX2{A:=p,B:=(p -> p),C:=p}
3. ((p -> (p -> p)) -> (p -> p)) | MP 2 1
4. (p -> (p -> p)) | AX1{A:=p,B:=p}
5. (p -> p) | MP 3 4
";

fn main() {
    let file = parse_proof_file(PROOF).unwrap();
    match check(&file.proof, &file.ext) {
        Ok(c) => println!("valid, concludes {c} in {} steps", file.proof.len()),
        Err(e) => println!("invalid: {e}"),
    }

    let broken = parse_proof_file(&PROOF.replace("MP 3 4", "MP 4 3")).unwrap();
    match check(&broken.proof, &broken.ext) {
        Ok(c) => println!("unexpectedly valid: {c}"),
        Err(e) => println!("broken copy rejected: {e}"),
    }
}
