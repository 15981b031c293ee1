//! Driving the suite runner from code: a small grid rendered as a table.
use ll_lab::suite::{run_suite, Format, SuiteConfig};

fn main() {
    let cfg = SuiteConfig { ns: vec![1, 2], ws: vec![1], format: Format::Table, ..SuiteConfig::default() }
        .with_theorems("BK_odd1,RG_even_minus,UDodd1,SYTeven,kratt")
        .unwrap();
    let status = run_suite(&cfg, &mut std::io::stdout());
    std::process::exit(status.code());
}
