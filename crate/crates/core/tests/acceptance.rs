//! One test per acceptance criterion. Each prints a single `PASS` or `FAIL`
//! line so `cargo test --test acceptance -- --nocapture` reads as a checklist.

use ll_lab::identity::TheoremId;
use ll_lab::partition::Partition;
use ll_lab::pfaffian::{parity_matrix, verify_gordon, verify_minor_summation, GordonVariant};
use ll_lab::report::VerifyReport;
use ll_lab::lambda_ring::{verify_adjointness, verify_skew_lemmas};
use ll_lab::so_characters::{verify_kratt, verify_specialization};
use ll_lab::suite::{collect_reports, render_reports, SuiteConfig, Target};
use ll_lab::syt::{catalan, central_binomial, syt_count, verify_syt_counts, CountMethod, SytQuery};
use ll_lab::walks::{verify_combinatorial, walk_count, CombTheorem, WalkClass};
use num_bigint::BigInt;
use std::time::Instant;

fn verdict(name: &str, failures: Vec<String>) {
    if failures.is_empty() {
        println!("PASS {name}");
    } else {
        println!("FAIL {name}: {}", failures.join("; "));
        panic!("{name} failed");
    }
}

fn failures(reports: &[VerifyReport]) -> Vec<String> {
    reports.iter().filter(|r| !r.passed()).map(|r| r.to_json_line(false)).collect()
}

fn suite(targets: Vec<Target>, ns: Vec<usize>, ws: Vec<usize>) -> SuiteConfig {
    SuiteConfig { targets, ns, ws, ..SuiteConfig::default() }
}

#[test]
fn bounded_littlewood_identities() {
    let start = Instant::now();
    let cfg = suite(TheoremId::ALL.into_iter().map(Target::Identity).collect(), vec![1, 2, 3], vec![1, 2]);
    let reports = collect_reports(&cfg).unwrap();
    let mut bad = failures(&reports);
    if reports.iter().any(|r| !r.asserted) {
        bad.push("a claimed case was only informational".into());
    }
    for id in TheoremId::ALL {
        if !reports.iter().any(|r| r.theorem == id.name()) {
            bad.push(format!("{} produced no report", id.name()));
        }
    }
    if start.elapsed().as_secs() >= 300 {
        bad.push(format!("took {:?}", start.elapsed()));
    }
    verdict("bounded Littlewood identities, n ≤ 3, w ∈ {1,2}, under 5 minutes", bad);
}

#[test]
fn pfaffian_lemmas() {
    let mut bad = Vec::new();
    for (n, want) in [(4, 2), (6, 4)] {
        let pf = parity_matrix(n).pfaffian().unwrap();
        if pf != BigInt::from(want) {
            bad.push(format!("Pf of the {n}x{n} parity matrix is {pf}, expected {want}"));
        }
    }
    for w in 1..=3 {
        for v in GordonVariant::ALL {
            bad.extend(failures(&[verify_gordon(w, v)]));
        }
    }
    for (m, p) in [(2, 4), (4, 6)] {
        let rs = verify_minor_summation(m, p, 20, 11);
        if rs.len() < 20 {
            bad.push(format!("only {} instances for ({m},{p})", rs.len()));
        }
        bad.extend(failures(&rs));
    }
    verdict("parity Pfaffians 2 and 4, Gordon variants w ≤ 3, minor summation", bad);
}

#[test]
fn skewing_lemmas() {
    let mut rs = verify_skew_lemmas(8, 0..=4, 3, 5);
    let adj = verify_adjointness(6, 50, 5);
    let mut bad = if adj.len() == 50 { Vec::new() } else { vec![format!("{} adjointness pairs", adj.len())] };
    rs.extend(adj);
    bad.extend(failures(&rs));
    verdict("skew-power lemmas at degree 8 and adjointness on 50 pairs", bad);
}

#[test]
fn syt_counting() {
    let reports = verify_syt_counts(8, &[1, 2]);
    let mut bad = failures(&reports);
    for kind in ["syt_hook_sum", "syt_gessel", "syt_klo", "syt_refined"] {
        if !reports.iter().any(|r| r.theorem == kind) {
            bad.push(format!("no {kind} reports"));
        }
    }
    for (n, width, want) in [(3, 3, 4), (4, 3, 9), (3, 2, 3), (4, 2, 6)] {
        let got = syt_count(SytQuery::new(n, width), CountMethod::BruteForce);
        if got != BigInt::from(want) {
            bad.push(format!("|SYT_{{{n},{width}}}| = {got}, expected {want}"));
        }
    }
    verdict("SYT counts agree across brute force, Bessel series and closed forms", bad);
}

#[test]
fn up_down_tableau_interpretations() {
    let mut bad = Vec::new();
    let thms = [
        CombTheorem::GouldenMudEven,
        CombTheorem::GouldenMudOdd,
        CombTheorem::UdOdd1,
        CombTheorem::UdOdd2,
        CombTheorem::UdEven,
        CombTheorem::UdEvenPrime,
        CombTheorem::UdEvenH,
    ];
    for thm in thms {
        for w in 1..=2 {
            for n in 1..=3 {
                for k in thm.k_values(w) {
                    bad.extend(failures(&verify_combinatorial(thm, n, w, k).unwrap()));
                }
            }
        }
    }
    verdict("up-down tableau generating functions, n ≤ 3, w ∈ {1,2}", bad);
}

#[test]
fn walk_identities_and_sequences() {
    let mut bad = Vec::new();
    for thm in [CombTheorem::SytOdd, CombTheorem::SytEven, CombTheorem::Zeilberger, CombTheorem::EuEtAl] {
        for w in 1..=2 {
            for n in 1..=6 {
                for k in thm.k_values(w) {
                    bad.extend(failures(&verify_combinatorial(thm, n, w, k).unwrap()));
                }
            }
        }
    }
    let e = Partition::empty();
    let riordan: Vec<usize> = (0..=6).map(|n| walk_count(WalkClass::VtGt, n, 1, &e, &e).unwrap()).collect();
    if riordan != [1, 0, 1, 1, 3, 6, 15] {
        bad.push(format!("positive lazy walks {riordan:?}"));
    }
    for n in 1..=3u64 {
        let one = BigInt::from(walk_count(WalkClass::MvtStar, 2 * n as usize, 1, &e, &e).unwrap());
        if one != central_binomial(n) {
            bad.push(format!("marked walks w=1, 2n={}: {one}", 2 * n));
        }
        let two = BigInt::from(walk_count(WalkClass::MvtStar, 2 * n as usize, 2, &e, &e).unwrap());
        let c = catalan(n as i64);
        if two != &c * &c {
            bad.push(format!("marked walks w=2, 2n={}: {two}", 2 * n));
        }
    }
    verdict("walk identities n ≤ 6 with Riordan, central binomial and Catalan² checks", bad);
}

#[test]
fn nearly_rectangular_characters() {
    let mut bad = Vec::new();
    for n in 1..=3 {
        for twice_c in 1..=4 {
            for k in 0..=twice_c {
                bad.extend(failures(&verify_kratt(twice_c, k, n)));
            }
        }
        bad.extend(failures(&verify_specialization(n)));
    }
    verdict("orthogonal characters of nearly rectangular shapes, c ≤ 2, n ≤ 3", bad);
}

#[test]
fn deterministic_output() {
    let cfg = |jobs| SuiteConfig { seed: 42, jobs, ..SuiteConfig::default() };
    let render = |c: &SuiteConfig| render_reports(c, &collect_reports(c).unwrap());
    let (a, b) = (cfg(1), cfg(4));
    let first = render(&a);
    let mut bad = Vec::new();
    if first != render(&a) {
        bad.push("two runs differ".into());
    }
    if first != render(&b) {
        bad.push("output depends on the worker count".into());
    }
    if !first.lines().all(|l| l.contains("\"seed\":42")) {
        bad.push("a line lacks the seed".into());
    }
    verdict("identical config and seed give byte-identical JSON", bad);
}
