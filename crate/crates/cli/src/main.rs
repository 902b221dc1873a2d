//! `sendov-lab`: degree bounds, the comparison table, verification suites
//! and fuzzing for Sendov's conjecture.
//!
//! Exit codes: 0 success, 1 a check or fuzz trial failed, 2 bad arguments,
//! domain errors or unreadable input.

mod render;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use sendov_core::bounds::{breakdown, mean_upper_bound};
use sendov_core::table::comparison_table;
use sendov_core::verify::{
    fuzz_sendov, run_all, DEFAULT_EXTRA_RANDOM, DEFAULT_GRID_STEP, DEFAULT_SEED, VIOLATION_SLACK,
};
use sendov_core::{critical_report, Execution, SendovInstance};

use render::{aligned, breakdown_fields, csv_records, csv_table, json_lines, num, OutcomeRow};

#[derive(Debug, Parser)]
#[command(name = "sendov-lab", version, about = "Explicit degree bounds and numerical checks for Sendov's conjecture")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

/// `--seed`, else `SENDOV_LAB_SEED`, else [`DEFAULT_SEED`] (42).
#[derive(Debug, Args)]
struct SeedArg {
    #[arg(long, env = "SENDOV_LAB_SEED", default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Every intermediate quantity of the degree bound at `a`.
    Bound {
        #[arg(long)]
        a: f64,
    },
    /// The headline bound next to Dégot's thresholds for a = 0.1, ..., 0.9.
    Table,
    /// Inequality suite, limit checks and estimate chain.
    Verify {
        #[arg(long, default_value_t = DEFAULT_GRID_STEP)]
        grid_step: f64,
        #[command(flatten)]
        seed: SeedArg,
    },
    /// Random instances with zeros uniform on the unit disk.
    Fuzz {
        #[arg(long)]
        a: f64,
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[command(flatten)]
        seed: SeedArg,
    },
    /// Critical points of one instance read from JSON `{"a": .., "zeros": [[re, im], ..]}`.
    Check {
        #[arg(long)]
        instance: PathBuf,
    },
    /// Upper bound on the mean of the zeros.
    MeanBound {
        #[arg(long)]
        a: f64,
        #[arg(long)]
        n: u64,
    },
}

/// Rendered output and whether every check passed.
struct Outcome {
    text: String,
    passed: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, passed: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(o) => {
            if let Err(e) = emit(&cli, &o.text) {
                eprintln!("error: {e:#}");
                return ExitCode::from(2);
            }
            if o.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn emit(cli: &Cli, text: &str) -> Result<()> {
    match &cli.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    let fmt = cli.format;
    match &cli.command {
        Command::Bound { a } => cmd_bound(*a, fmt),
        Command::Table => cmd_table(fmt),
        Command::Verify { grid_step, seed } => cmd_verify(*grid_step, seed.seed, fmt),
        Command::Fuzz { a, degree, trials, seed } => cmd_fuzz(*a, *degree, *trials, seed.seed, fmt),
        Command::Check { instance } => cmd_check(instance, fmt),
        Command::MeanBound { a, n } => cmd_mean_bound(*a, *n, fmt),
    }
}

fn cmd_bound(a: f64, fmt: Format) -> Result<Outcome> {
    let b = breakdown(a)?;
    let fields = breakdown_fields(&b);
    let text = match fmt {
        Format::Json => serde_json::to_string(&b)? + "\n",
        Format::Csv => {
            let header: Vec<&str> = fields.iter().map(|(k, _)| *k).collect();
            csv_table(&header, &[fields.iter().map(|(_, v)| v.to_string()).collect()])?
        }
        Format::Text => {
            let rows: Vec<(&str, String)> = fields.iter().map(|(k, v)| (*k, num(*v))).collect();
            let mut s = aligned(&rows);
            for v in b.invariant_violations() {
                s.push_str(&format!("warning: invariant {v} does not hold\n"));
            }
            s
        }
    };
    Ok(Outcome::ok(text))
}

fn cmd_table(fmt: Format) -> Result<Outcome> {
    let rows = comparison_table();
    let text = match fmt {
        Format::Json => json_lines(&rows)?,
        Format::Csv => csv_records(&rows)?,
        Format::Text => {
            let mut s = format!("{:<5} {:>9} {:>13} {:>10} {:>8}\n", "a", "Degot N", "N(a)", "printed", "diff");
            for r in &rows {
                s.push_str(&format!(
                    "{:<5} {:>9} {:>13} {:>10} {:>7.2}%{}\n",
                    r.a,
                    r.degot_n,
                    num(r.computed_n),
                    num(r.printed_n),
                    100.0 * r.relative_diff,
                    if r.flagged { "  FLAG: rounds to ".to_string() + &num(r.rounded_n) } else { String::new() }
                ));
            }
            s
        }
    };
    Ok(Outcome::ok(text))
}

fn cmd_verify(grid_step: f64, seed: u64, fmt: Format) -> Result<Outcome> {
    let out = run_all(grid_step, DEFAULT_EXTRA_RANDOM, seed, Execution::Parallel)?;
    let passed = out.iter().all(|o| o.passed);
    let text = match fmt {
        Format::Json => json_lines(&out)?,
        Format::Csv => csv_records(&out.iter().map(OutcomeRow::from).collect::<Vec<_>>())?,
        Format::Text => {
            let w = out.iter().map(|o| o.check_id.len()).max().unwrap_or(0);
            let mut s = String::new();
            for o in &out {
                s.push_str(&format!(
                    "{} {:<w$}  margin {:>12}  at {}\n",
                    if o.passed { "PASS" } else { "FAIL" },
                    o.check_id,
                    num(o.worst_margin),
                    render::location(&o.worst_location)
                ));
            }
            let failed = out.iter().filter(|o| !o.passed).count();
            s.push_str(&format!("{} checks, {} failed\n", out.len(), failed));
            s
        }
    };
    Ok(Outcome { text, passed })
}

fn cmd_fuzz(a: f64, degree: usize, trials: u64, seed: u64, fmt: Format) -> Result<Outcome> {
    let r = fuzz_sendov(a, degree, trials, seed, Execution::Parallel)?;
    let text = match fmt {
        Format::Json => serde_json::to_string(&r)? + "\n",
        Format::Csv => csv_records(&[r.summary()])?,
        Format::Text => {
            let mut s = aligned(&[
                ("a", r.a.to_string()),
                ("degree", r.degree.to_string()),
                ("trials", r.trials.to_string()),
                ("seed", r.seed.to_string()),
                ("passes", r.passes.to_string()),
                ("violations", r.violations.to_string()),
                ("non_converged", r.non_converged.to_string()),
                ("max_sendov_distance", num(r.max_sendov_distance)),
            ]);
            for inst in &r.violating_instances {
                s.push_str(&format!("violation: {}\n", serde_json::to_string(inst)?));
            }
            s
        }
    };
    Ok(Outcome { text, passed: r.violations == 0 })
}

fn cmd_check(path: &Path, fmt: Format) -> Result<Outcome> {
    let raw = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let inst: SendovInstance = serde_json::from_str(&raw).with_context(|| format!("parsing {}", path.display()))?;
    let r = critical_report(&inst)?;
    let verdict = if !r.converged {
        "UNCERTIFIED"
    } else if r.within_unit_distance(VIOLATION_SLACK) {
        "PASS"
    } else {
        "FAIL"
    };
    let text = match fmt {
        Format::Json => {
            #[derive(serde::Serialize)]
            struct Checked<'a> {
                verdict: &'a str,
                #[serde(flatten)]
                report: &'a sendov_core::CriticalPointReport,
            }
            serde_json::to_string(&Checked { verdict, report: &r })? + "\n"
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = r
                .critical_points
                .iter()
                .zip(&r.residuals)
                .map(|(w, res)| {
                    vec![w.re.to_string(), w.im.to_string(), (w - inst.a()).norm().to_string(), res.to_string()]
                })
                .collect();
            csv_table(&["re", "im", "distance_to_a", "residual"], &rows)?
        }
        Format::Text => {
            let mut s = aligned(&[
                ("degree", inst.degree().to_string()),
                ("sendov_distance", num(r.sendov_distance)),
                ("mean_real_part", num(r.mean_real_part)),
                ("converged", r.converged.to_string()),
                ("verdict", verdict.to_string()),
            ]);
            s.push_str("critical points:\n");
            for w in &r.critical_points {
                let sign = if w.im.is_sign_negative() { "" } else { "+" };
                s.push_str(&format!("  {} {sign}{}i\n", num(w.re), num(w.im)));
            }
            s
        }
    };
    Ok(Outcome { text, passed: verdict == "PASS" })
}

fn cmd_mean_bound(a: f64, n: u64, fmt: Format) -> Result<Outcome> {
    let m = mean_upper_bound(a, n)?;
    let text = match fmt {
        Format::Json => serde_json::to_string(&m)? + "\n",
        Format::Csv => csv_records(&[m])?,
        Format::Text => aligned(&[
            ("a", num(m.a)),
            ("n", m.n.to_string()),
            ("bound_at_quarter", num(m.bound_at_quarter)),
            ("bound_inf", num(m.bound_inf)),
            ("delta_at_inf", num(m.delta_at_inf)),
        ]),
    };
    Ok(Outcome::ok(text))
}
