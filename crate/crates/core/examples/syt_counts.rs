//! Standard Young tableaux of bounded width counted three independent ways.
use ll_lab::suite::{emit_table, TableKind};
use ll_lab::syt::{klo_count, syt_count, CountMethod, KloVariant, SytQuery};

fn main() {
    print!("{}", emit_table(TableKind::SytCounts, 8, &[1, 2]).text);
    println!();
    // refined by the number of odd rows, width 5
    for n in 0..=6 {
        let row: Vec<String> = (0..=n)
            .map(|k| {
                let brute = syt_count(SytQuery::odd_rows(n, 5, k), CountMethod::BruteForce);
                assert_eq!(brute, klo_count(KloVariant::RefOdd, n, 2, k));
                brute.to_string()
            })
            .collect();
        println!("n={n}: {}", row.join(" "));
    }
}
