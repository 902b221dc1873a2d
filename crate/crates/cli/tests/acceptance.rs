//! Acceptance criteria, one line each. Runs without the libtest harness so
//! the lines show up in plain `cargo test` output; exits non-zero if any
//! criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sendov_core::bounds::{mean_objective, mean_upper_bound, mu2, mu2_quadratic_residual, n0};
use sendov_core::geometry::matching_error;
use sendov_core::table::comparison_table;
use sendov_core::verify::{
    fuzz_matrix, run_inequality_suite, verify_estimate_chain, verify_limits, DEFAULT_EXTRA_RANDOM, DEFAULT_SEED,
};
use sendov_core::{find_roots, Complex64, Execution, Polynomial};

struct Verdict {
    passed: bool,
    detail: String,
}

fn verdict(passed: bool, detail: impl Into<String>) -> Verdict {
    Verdict { passed, detail: detail.into() }
}

fn lab(args: &[&str]) -> (Option<i32>, Vec<u8>) {
    let o = Command::new(env!("CARGO_BIN_EXE_sendov-lab"))
        .args(args)
        .env_remove("SENDOV_LAB_SEED")
        .output()
        .expect("binary runs");
    (o.status.code(), o.stdout)
}

fn table_reproduction() -> Verdict {
    let start = Instant::now();
    let (code, _) = lab(&["table", "--format", "csv"]);
    let elapsed = start.elapsed();
    let rows = comparison_table();
    let worst = rows[1..].iter().map(|r| r.relative_diff.abs()).fold(0.0, f64::max);
    let first = &rows[0];
    let ok = code == Some(0)
        && worst <= 0.05
        && first.flagged
        && (first.computed_n / 3.17e11 - 1.0).abs() < 5e-3
        && first.relative_diff.abs() <= 0.10
        && rows[1..].iter().all(|r| !r.flagged)
        && elapsed < Duration::from_secs(1);
    verdict(
        ok,
        format!(
            "worst |diff| a>=0.2 {:.2}%, a=0.1 computed {:.4e} vs 3.4e11 ({:.2}%, flagged={}), {elapsed:.2?}",
            100.0 * worst,
            first.computed_n,
            100.0 * first.relative_diff,
            first.flagged
        ),
    )
}

fn endpoint_constants() -> Verdict {
    let start = Instant::now();
    let exact = 3.0 * (13f64.sqrt() - 3.0) / 2.0;
    let rel = (mu2(1.0).unwrap() - exact).abs() / exact;
    let limits = verify_limits();
    let lim_ok = limits.iter().filter(|o| o.check_id.contains("limit_at_zero")).all(|o| o.passed);
    let elapsed = start.elapsed();
    verdict(
        rel <= 1e-12 && lim_ok && limits.iter().all(|o| o.passed) && elapsed < Duration::from_secs(1),
        format!(
            "mu2(1) rel err {rel:.1e}; limit checks {}/{} pass; {elapsed:.2?}",
            limits.iter().filter(|o| o.passed).count(),
            limits.len()
        ),
    )
}

fn inequality_suite() -> Verdict {
    let start = Instant::now();
    let mut out = run_inequality_suite(1e-3, DEFAULT_EXTRA_RANDOM, DEFAULT_SEED, Execution::Sequential).unwrap();
    out.extend(verify_estimate_chain(1e-3, Execution::Sequential).unwrap());
    let elapsed = start.elapsed();
    let bad: Vec<&str> =
        out.iter().filter(|o| !(o.passed && o.worst_margin > 0.0)).map(|o| o.check_id.as_str()).collect();
    let min = out.iter().map(|o| o.worst_margin).fold(f64::INFINITY, f64::min);
    verdict(
        bad.is_empty() && elapsed < Duration::from_secs(30),
        format!("{} checks, smallest margin {min:.2e}, failing {bad:?}, {elapsed:.2?} single-threaded", out.len()),
    )
}

fn quadratic_residual() -> Verdict {
    let worst = (1..1000)
        .map(|k| {
            let a = k as f64 / 1000.0;
            (mu2_quadratic_residual(a, mu2(a).unwrap()), a)
        })
        .fold((0.0, 0.0), |w, x| if x.0 > w.0 { x } else { w });
    verdict(worst.0 <= 1e-9, format!("worst residual {:.3e} at a = {}", worst.0, worst.1))
}

fn root_round_trip() -> Verdict {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let (mut worst, mut unconverged) = (0.0f64, 0);
    for _ in 0..500 {
        let n = rng.random_range(2..=50);
        let mut roots: Vec<Complex64> = Vec::with_capacity(n);
        while roots.len() < n {
            let z = Complex64::from_polar(rng.random::<f64>().sqrt(), rng.random_range(0.0..std::f64::consts::TAU));
            if roots.iter().all(|w| (w - z).norm() >= 1e-3) {
                roots.push(z);
            }
        }
        let r = find_roots(&Polynomial::from_roots(&roots).unwrap()).unwrap();
        unconverged += usize::from(!r.converged);
        worst = worst.max(matching_error(&r.roots, &roots));
    }
    let elapsed = start.elapsed();
    verdict(
        worst <= 1e-8 && unconverged == 0 && elapsed < Duration::from_secs(60),
        format!("500 polynomials, worst matched error {worst:.2e}, {unconverged} not converged, {elapsed:.2?}"),
    )
}

fn mean_bound_oracle() -> Verdict {
    const SCAN: usize = 1_000_000;
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let a = rng.random_range(0.02..0.98);
        let n = 10f64.powf(rng.random_range(0.31..6.0)).round().max(2.0) as u64;
        let brute =
            (1..SCAN).map(|k| mean_objective(a, n as f64, a * k as f64 / SCAN as f64)).fold(f64::INFINITY, f64::min);
        worst = worst.max((mean_upper_bound(a, n).unwrap().bound_inf - brute).abs());
    }
    let mut quarter_ok = true;
    for k in 1..20 {
        let a = k as f64 / 20.0;
        let n = n0(a).unwrap().ceil() as u64;
        quarter_ok &= mean_upper_bound(a, n).unwrap().bound_at_quarter <= a / 4.0;
    }
    verdict(
        worst <= 1e-9 && quarter_ok,
        format!("20 pairs, worst |inf - scan| {worst:.2e}; delta = a/4 at n = ceil(N0) gives <= a/4 for a = 0.05..0.95: {quarter_ok}"),
    )
}

fn fuzz_matrix_criterion() -> Verdict {
    let start = Instant::now();
    let a: Vec<f64> = (1..=9).map(|k| k as f64 / 10.0).collect();
    let reports = fuzz_matrix(&a, &[2, 4, 8, 16, 32, 64], 1000, DEFAULT_SEED, Execution::Parallel).unwrap();
    let elapsed = start.elapsed();
    let violations: u64 = reports.iter().map(|r| r.violations).sum();
    let non_converged: u64 = reports.iter().map(|r| r.non_converged).sum();
    let max = reports.iter().map(|r| r.max_sendov_distance).fold(0.0, f64::max);
    verdict(
        violations == 0 && elapsed < Duration::from_secs(300),
        format!(
            "{} cells x 1000 trials, {violations} violations, {non_converged} not converged, max distance {max:.4}, {elapsed:.2?}",
            reports.len()
        ),
    )
}

fn determinism() -> Verdict {
    let verify = ["verify", "--format", "json"];
    let fuzz = ["fuzz", "--a", "0.7", "--degree", "16", "--trials", "300", "--format", "csv"];
    let fuzz_json = ["fuzz", "--a", "0.3", "--degree", "9", "--trials", "300", "--format", "json"];
    let same = [&verify[..], &fuzz[..], &fuzz_json[..]].iter().all(|args| {
        let (c1, first) = lab(args);
        let (c2, second) = lab(args);
        c1 == Some(0) && c2 == Some(0) && !first.is_empty() && first == second
    });
    verdict(same, "verify (JSON lines), fuzz (CSV and JSON) byte-identical across two runs")
}

type Criterion = (&'static str, fn() -> Verdict);

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 table reproduction", table_reproduction),
        ("2 endpoint constants", endpoint_constants),
        ("3 inequality suite", inequality_suite),
        ("4 quadratic residual", quadratic_residual),
        ("5 root-finder oracle", root_round_trip),
        ("6 mean-bound oracle", mean_bound_oracle),
        ("7 fuzz matrix", fuzz_matrix_criterion),
        ("8 determinism", determinism),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let v = check();
        failed += usize::from(!v.passed);
        println!("criterion {name}: {} ({})", if v.passed { "PASS" } else { "FAIL" }, v.detail);
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}
