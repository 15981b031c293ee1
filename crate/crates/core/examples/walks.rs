//! Up-down tableaux, their weights, and vacillating walks in a Weyl chamber.
use ll_lab::partition::{part, Partition};
use ll_lab::walks::{classify_peaks, enumerate_ud, nonintersecting_families, walk_count, WalkClass};

fn main() {
    let e = Partition::empty();
    for (t, weight) in enumerate_ud(2, 1, &e, &e).unwrap() {
        let peaks = classify_peaks(&t);
        println!("{t}  weight {weight}  peaks {:?}", peaks.peaks);
    }
    println!();
    for class in WalkClass::ALL {
        let counts: Vec<usize> = (0..=8).map(|n| walk_count(class, n, 2, &e, &e).unwrap()).collect();
        println!("{:<9} w=2: {counts:?}", class.name());
    }
    let ud = enumerate_ud(3, 2, &e, &part(&[1, 1])).unwrap().len();
    let paths = nonintersecting_families(3, 2, &e, &part(&[1, 1])).unwrap();
    println!("\nup-down tableaux ∅ → (1,1) of length 6: {ud}, path families: {paths}");
}
