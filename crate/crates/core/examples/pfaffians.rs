//! Pfaffians of parity matrices, Gordon's reduction and the minor summation formula.
use ll_lab::pfaffian::{parity_matrix, verify_gordon, verify_minor_summation, GordonVariant};

fn main() {
    for n in (2..=8).step_by(2) {
        println!("Pf(parity {n}x{n}) = {}", parity_matrix(n).pfaffian().unwrap());
    }
    for w in 1..=3 {
        for v in GordonVariant::ALL {
            let r = verify_gordon(w, v);
            println!("{} w={w}: {}", r.theorem, if r.equal { "equal" } else { "differs" });
        }
    }
    let rs = verify_minor_summation(4, 6, 5, 1);
    for r in &rs {
        println!("{}", r.to_json_line(false));
    }
}
