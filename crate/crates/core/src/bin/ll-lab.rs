use clap::{Parser, Subcommand};
use ll_lab::suite::{default_jobs, emit_table, parse_grid, run_suite, ExitStatus, Format, SuiteConfig, TableKind};
use std::process::exit;

#[derive(Parser)]
#[command(name = "ll-lab", version, about = "Exact checks of bounded Littlewood identities and their combinatorics")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run verification suites and print one JSON line per report.
    Verify {
        /// Comma-separated theorem ids, or `all`.
        #[arg(long, default_value = "all")]
        theorem: String,
        /// Number of variables or length: `3`, `1..3` or `1,2`.
        #[arg(long, default_value = "1..3")]
        n: String,
        /// Width parameter grid.
        #[arg(long, default_value = "1..2")]
        w: String,
        /// Restrict the refinement parameter.
        #[arg(long)]
        k: Option<String>,
        /// Truncation degree for symmetric function checks.
        #[arg(long, default_value_t = 8)]
        degree: usize,
        /// Series order for tableau counts.
        #[arg(long, default_value_t = 8)]
        order: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads; defaults to LL_LAB_JOBS or the core count.
        #[arg(long)]
        jobs: Option<usize>,
        /// `json` or `table`.
        #[arg(long, default_value = "json")]
        format: String,
        /// Include per-report wall time (makes output non-reproducible).
        #[arg(long)]
        timing: bool,
    },
    /// Print a count table: syt_counts, walk_counts or oeis_check.
    Table {
        kind: String,
        #[arg(long, default_value = "6")]
        n: String,
        #[arg(long, default_value = "1..2")]
        w: String,
    },
}

fn usage(msg: impl std::fmt::Display) -> ! {
    eprintln!("usage error: {msg}");
    exit(ExitStatus::Usage.code())
}

fn main() {
    let cli = Cli::try_parse().unwrap_or_else(|e| {
        let _ = e.print();
        exit(if e.use_stderr() { ExitStatus::Usage.code() } else { 0 })
    });
    match cli.cmd {
        Cmd::Verify { theorem, n, w, k, degree, order, seed, jobs, format, timing } => {
            let cfg = (|| -> ll_lab::Result<SuiteConfig> {
                let cfg = SuiteConfig {
                    ns: parse_grid(&n)?,
                    ws: parse_grid(&w)?,
                    ks: k.as_deref().map(parse_grid).transpose()?,
                    degree,
                    order,
                    seed,
                    jobs: jobs.unwrap_or_else(default_jobs),
                    format: format.parse::<Format>()?,
                    timing,
                    ..SuiteConfig::default()
                }
                .with_theorems(&theorem)?;
                cfg.validate()?;
                Ok(cfg)
            })()
            .unwrap_or_else(|e| usage(e));
            let status = run_suite(&cfg, &mut std::io::stdout().lock());
            exit(status.code());
        }
        Cmd::Table { kind, n, w } => {
            let kind: TableKind = kind.parse().unwrap_or_else(|e| usage(e));
            let n_max = parse_grid(&n).ok().and_then(|v| v.last().copied()).unwrap_or_else(|| usage("bad --n"));
            let ws = parse_grid(&w).unwrap_or_else(|e| usage(e));
            let t = emit_table(kind, n_max, &ws);
            print!("{}", t.text);
            exit(if t.agree { 0 } else { ExitStatus::Failure.code() });
        }
    }
}
