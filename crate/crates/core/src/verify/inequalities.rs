use crate::bounds::{
    alpha_param, aux_params, d_function, final_bound, log_k_factors, log_k_prime, mu1, mu2, mu2_quadratic_residual, n1,
    n2, n3, r_param, small_circle_bound, sqrt_gap,
};
use crate::error::Result;
use crate::exec::Execution;

use super::{check_grid_step, merge_points, open_grid, random_points, Check, VerificationOutcome, STRICT_MARGIN};

pub const DEFAULT_EXTRA_RANDOM: usize = 100;
/// The threshold quadratic for `mu1` degenerates at `a = 1`; its checks stop here.
const MU1_CUTOFF: f64 = 0.999;
const MU2_RESIDUAL_LIMIT: f64 = 1e-9;
const LOG_LOWER: f64 = -0.99;
const LOG_UPPER: f64 = 10.0;

/// Grid checks on the thresholds and growth factors, over `a` in `(0, 1)`
/// with spacing `grid_step` plus `extra_random` seeded points. The two log
/// inequalities sweep their own `x` ranges with the same spacing.
pub fn run_inequality_suite(
    grid_step: f64,
    extra_random: usize,
    seed: u64,
    exec: Execution,
) -> Result<Vec<VerificationOutcome>> {
    let h = check_grid_step(grid_step)?;
    let a_points = merge_points(open_grid(0.0, 1.0, h), random_points(0.0, 1.0, extra_random, seed));
    let mut log_points = merge_points(
        open_grid(LOG_LOWER, LOG_UPPER, h),
        random_points(LOG_LOWER, LOG_UPPER, extra_random, seed.wrapping_add(1)),
    );
    log_points.push(LOG_UPPER);

    let on_a = a_checks(h);
    let mut out: Vec<VerificationOutcome> = on_a.iter().map(|c| c.run(&a_points, exec)).collect();
    for c in log_checks() {
        out.push(c.run(&log_points, exec));
    }
    Ok(out)
}

fn a_checks(h: f64) -> Vec<Check> {
    vec![
        Check::new("bound.mu2_in_unit_interval", STRICT_MARGIN, "min(mu2, 1 - mu2)", |a| {
            let m = mu2(a).ok()?;
            Some(m.min(1.0 - m))
        }),
        Check::new(
            "bound.mu2_increasing",
            STRICT_MARGIN,
            "mu2(a + h) - mu2(a), h = grid step; replaces a sign analysis of mu2'",
            move |a| {
                let next = a + h;
                (next <= 1.0).then(|| mu2(next).ok().zip(mu2(a).ok()).map(|(x, y)| x - y)).flatten()
            },
        ),
        Check::new("bound.gamma_dominates_mu2", STRICT_MARGIN, "gamma(a) - mu2(a)", |a| {
            Some(aux_params(a).ok()?.gamma - mu2(a).ok()?)
        }),
        Check::new(
            "bound.mu2_root_residual",
            0.0,
            "1e-9 - |x^2 + beta x + rho| at x = mu2(a), residual evaluated in double-double",
            |a| Some(MU2_RESIDUAL_LIMIT - mu2_quadratic_residual(a, mu2(a).ok()?)),
        ),
        Check::new("bound.mu1_in_unit_interval", STRICT_MARGIN, "min(mu1, 1 - mu1), a <= 0.999", |a| {
            if a > MU1_CUTOFF {
                return None;
            }
            let m = mu1(a).ok()?;
            Some(m.min(1.0 - m))
        }),
        Check::new("bound.gamma_dominates_mu1", STRICT_MARGIN, "gamma(a) - mu1(a), a <= 0.999", |a| {
            if a > MU1_CUTOFF {
                return None;
            }
            Some(aux_params(a).ok()?.gamma - mu1(a).ok()?)
        }),
        Check::new(
            "bound.mu1_convex",
            STRICT_MARGIN,
            "mu1(a - h) - 2 mu1(a) + mu1(a + h), h = grid step, a + h <= 0.999; replaces a sign analysis of mu1''",
            move |a| {
                if a - h <= 0.0 || a + h > MU1_CUTOFF {
                    return None;
                }
                Some(mu1(a - h).ok()? - 2.0 * mu1(a).ok()? + mu1(a + h).ok()?)
            },
        ),
        Check::new("bound.sqrt_gap_gt_a2_over_10", STRICT_MARGIN, "4 - sqrt(16 - 3a^2) - a^2/10", |a| {
            Some(sqrt_gap(a) - a * a / 10.0)
        }),
        Check::new("bound.k_prime_gt_one", STRICT_MARGIN, "K'(a) - 1", |a| Some(log_k_prime(a).ok()?.exp_m1())),
        Check::new("bound.log_k2_gt_aq_gamma_over_4", STRICT_MARGIN, "log K2(a, a gamma, q') - a q' gamma / 4", |a| {
            let p = aux_params(a).ok()?;
            let (_, lk2) = log_k_factors(a, p.c, p.p_prime, p.q_prime).ok()?;
            Some(lk2 - a * p.q_prime * p.gamma / 4.0)
        }),
        Check::new(
            "bound.log_k1_gt_a_1ma_p_gamma_over_4",
            STRICT_MARGIN,
            "log K1(a, a gamma, p') - a (1 - a) p' gamma / 4",
            |a| {
                let p = aux_params(a).ok()?;
                let (lk1, _) = log_k_factors(a, p.c, p.p_prime, p.q_prime).ok()?;
                Some(lk1 - a * (1.0 - a) * p.p_prime * p.gamma / 4.0)
            },
        ),
        Check::new("bound.d_function_lt_one", STRICT_MARGIN, "1 - D(q') at c = a gamma", |a| {
            let p = aux_params(a).ok()?;
            Some(1.0 - d_function(a, p.c, p.q_prime).ok()?)
        }),
        Check::new("bound.r_ordering", STRICT_MARGIN, "min((r - r')/r, 1 - r) at c = a gamma, r' > 0", |a| {
            let (r, rp) = r_param(a, aux_params(a).ok()?.c).ok()?;
            Some(if rp > 0.0 { ((r - rp) / r).min(1.0 - r) } else { rp })
        }),
        Check::new("bound.alpha_positive", STRICT_MARGIN, "min(alpha(r), alpha(r'))", |a| {
            let c = aux_params(a).ok()?.c;
            let (r, rp) = r_param(a, c).ok()?;
            Some(alpha_param(a, c, r).ok()?.min(alpha_param(a, c, rp).ok()?))
        }),
        Check::new("bound.small_circle_below_final", STRICT_MARGIN, "(N(a) - small(a)) / N(a)", |a| {
            let f = final_bound(a).ok()?;
            Some((f - small_circle_bound(a).ok()?.value) / f)
        }),
        Check::new("bound.final_dominates_thresholds", 0.0, "(N(a) - max(N1, N2(a, a gamma), N3)) / N(a)", |a| {
            let f = final_bound(a).ok()?;
            let c = aux_params(a).ok()?.c;
            let worst = n1(a).ok()?.max(n2(a, c).ok()?).max(n3(a).ok()?.0);
            Some((f - worst) / f)
        }),
    ]
}

fn log_checks() -> Vec<Check> {
    vec![
        Check::new("bound.log_ge_half_x", 0.0, "log(1 + x) - x/2 on (0, 1]", |x| {
            (x > 0.0 && x <= 1.0).then(|| x.ln_1p() - x / 2.0)
        }),
        Check::new(
            "bound.log_two_sided",
            0.0,
            "min(log(1 + x) - x/(1 + x), x - log(1 + x)) on (-0.99, 10], x != 0 (equality at 0)",
            |x| (x != 0.0).then(|| (x.ln_1p() - x / (1.0 + x)).min(x - x.ln_1p())),
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::Location;

    #[test]
    fn default_suite_passes() {
        let out = run_inequality_suite(1e-3, DEFAULT_EXTRA_RANDOM, 7, Execution::Parallel).unwrap();
        for o in &out {
            assert!(o.passed, "{o:?}");
            assert!(o.worst_margin > 0.0, "{o:?}");
        }
    }

    #[test]
    fn gamma_mu2_gap_is_smallest_near_zero() {
        // gamma - mu2 is 0.025 as a -> 0 and about 0.092 at a = 1
        let out = run_inequality_suite(1e-3, 0, 7, Execution::Sequential).unwrap();
        let o = out.iter().find(|o| o.check_id == "bound.gamma_dominates_mu2").unwrap();
        assert_eq!(o.worst_location, Location::Scalar(0.001));
        assert!((o.worst_margin - 0.025).abs() < 1e-4);
        let at_end = 0.1 * 0.999 + 0.9 - mu2(0.999).unwrap();
        assert!(at_end > 0.09 && at_end < 0.093);
    }

    #[test]
    fn residual_check_is_within_limit() {
        let out = run_inequality_suite(1e-3, 0, 7, Execution::Sequential).unwrap();
        let o = out.iter().find(|o| o.check_id == "bound.mu2_root_residual").unwrap();
        assert!(o.passed && o.worst_margin > 0.0);
    }

    #[test]
    fn worst_margin_is_reproducible() {
        let out = run_inequality_suite(1e-2, 10, 3, Execution::Parallel).unwrap();
        let o = out.iter().find(|o| o.check_id == "bound.sqrt_gap_gt_a2_over_10").unwrap();
        let Location::Scalar(a) = o.worst_location else { panic!() };
        assert_eq!(o.worst_margin, sqrt_gap(a) - a * a / 10.0);
    }

    #[test]
    fn bad_step_is_rejected() {
        assert!(run_inequality_suite(0.5, 0, 1, Execution::Sequential).is_err());
    }
}
