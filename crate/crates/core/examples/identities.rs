//! Bounded Littlewood identities checked as exact polynomial equalities.
//!
//! cargo run --example identities -- 3 2
use ll_lab::identity::{verify_identity, TheoremId};

fn main() {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("numeric bound"));
    let n = args.next().unwrap_or(2);
    let w = args.next().unwrap_or(2);
    for id in TheoremId::ALL {
        let reports = verify_identity(id, &(1..=n).collect::<Vec<_>>(), &(1..=w).collect::<Vec<_>>());
        let ok = reports.iter().filter(|r| r.passed()).count();
        println!("{:<14} {ok}/{} cases", id.name(), reports.len());
    }
}
