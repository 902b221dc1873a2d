use std::f64::consts::E;

use crate::bounds::{alpha_param, aux_params, log_k_prime, n0, n1, n2, n3_chain, r_param};
use crate::error::Result;
use crate::exec::Execution;

use super::{check_grid_step, open_grid, Check, VerificationOutcome, STRICT_MARGIN};

/// `(upper - lower) / upper`, for quantities spanning many decades.
fn rel(upper: f64, lower: f64) -> f64 {
    (upper - lower) / upper
}

/// Each majorisation taking the exact third threshold to the headline bound,
/// checked on the open grid of spacing `grid_step`. Margins of links between
/// large quantities are relative.
pub fn verify_estimate_chain(grid_step: f64, exec: Execution) -> Result<Vec<VerificationOutcome>> {
    let h = check_grid_step(grid_step)?;
    let points = open_grid(0.0, 1.0, h);
    Ok(links().iter().map(|c| c.run(&points, exec)).collect())
}

fn links() -> Vec<Check> {
    vec![
        Check::new("chain.n0_le_1280_over_a4", STRICT_MARGIN, "relative: 1280/a^4 vs n0", |a| {
            Some(rel(1280.0 / a.powi(4), n0(a).ok()?))
        }),
        Check::new("chain.n1_branch_le_324_over_a2", STRICT_MARGIN, "relative: 324/a^2 vs 9((4 + 2a)/a)^2", |a| {
            Some(rel(324.0 / (a * a), 9.0 * ((4.0 + 2.0 * a) / a).powi(2)))
        }),
        Check::new("chain.log_ratio_ge_2a2_over_5", STRICT_MARGIN, "log((1 + a)/(0.1a^2 + 0.9a)) - 2a^2/5", |a| {
            Some(((1.0 + a) / (0.1 * a * a + 0.9 * a)).ln() - 0.4 * a * a)
        }),
        Check::new(
            "chain.n2_branch_le_5760_over_a2",
            STRICT_MARGIN,
            "relative: 5760/a^2 vs 9(log(a/16)/log(a gamma/(1 + a)))^2",
            |a| {
                let c = aux_params(a).ok()?.c;
                Some(rel(5760.0 / (a * a), 9.0 * ((a / 16.0).ln() / (c / (1.0 + a)).ln()).powi(2)))
            },
        ),
        Check::new("chain.n012_le_5760_over_a4", STRICT_MARGIN, "relative: 5760/a^4 vs max(n0, n1, n2)", |a| {
            let c = aux_params(a).ok()?.c;
            Some(rel(5760.0 / a.powi(4), n0(a).ok()?.max(n1(a).ok()?).max(n2(a, c).ok()?)))
        }),
        Check::new(
            "chain.n3_le_primed",
            0.0,
            "relative: n3 with (alpha', r') vs n3 with (alpha, r); alpha' < alpha, the product alpha log(1/r) still grows",
            |a| {
                let ch = n3_chain(a).ok()?;
                Some(rel(ch.primed, ch.exact))
            },
        ),
        Check::new(
            "chain.log_terms_majorized",
            STRICT_MARGIN,
            "relative, worst of: 2/(a - a gamma) vs log((1 + a)/(a - a gamma)); 1/(a - a gamma) vs log((1 - a^2 gamma)/(1 - a gamma)); 2/(a^3(1 - gamma)) vs log(1/r')",
            |a| {
                let p = aux_params(a).ok()?;
                let (_, rp) = r_param(a, p.c).ok()?;
                let d = a - p.c;
                let first = rel(2.0 / d, ((1.0 + a) / d).ln());
                let second = rel(1.0 / d, ((1.0 - a * p.c) / (1.0 - p.c)).ln());
                let third = rel(2.0 / (a.powi(3) * (1.0 - p.gamma)), -rp.ln());
                Some(first.min(second).min(third))
            },
        ),
        Check::new(
            "chain.ratio_gt_inv_sqrt_a",
            STRICT_MARGIN,
            "(1 + a r' gamma)/(a gamma + r') - 1/sqrt(a); numerical only",
            |a| {
                let p = aux_params(a).ok()?;
                let (_, rp) = r_param(a, p.c).ok()?;
                Some((1.0 + p.c * rp) / (p.c + rp) - 1.0 / a.sqrt())
            },
        ),
        Check::new(
            "chain.alpha_prime_le_32_over_a_log",
            STRICT_MARGIN,
            "relative: 32/(a log(1/a)) vs alpha'",
            |a| {
                let c = aux_params(a).ok()?.c;
                let (_, rp) = r_param(a, c).ok()?;
                Some(rel(32.0 / (a * -a.ln()), alpha_param(a, c, rp).ok()?))
            },
        ),
        Check::new("chain.log_k_prime_ge_cubic", STRICT_MARGIN, "(log K' - a^3(1 - a)/16) / log K'", |a| {
            let lk = log_k_prime(a).ok()?;
            Some((lk - a.powi(3) * (1.0 - a) / 16.0) / lk)
        }),
        Check::new("chain.n3_le_majorized", STRICT_MARGIN, "relative: majorised n3 vs primed n3", |a| {
            let ch = n3_chain(a).ok()?;
            Some(rel(ch.majorized, ch.primed))
        }),
        Check::new(
            "chain.a3_log_inv_a_le_inv_3e",
            0.0,
            "1/(3e) - a^3 log(1/a); equality at a = e^(-1/3)",
            |a| Some(1.0 / (3.0 * E) - a.powi(3) * -a.ln()),
        ),
        Check::new("chain.majorized_le_log_form", STRICT_MARGIN, "relative: 20800/(a^7(1 - a)^2 log(1/a)) vs majorised n3", |a| {
            let ch = n3_chain(a).ok()?;
            Some(rel(ch.log_form, ch.majorized))
        }),
        Check::new("chain.log_inv_a_ge_sq", STRICT_MARGIN, "log(1/a) - (1 - a)^2", |a| {
            Some(-a.ln() - (1.0 - a).powi(2))
        }),
        Check::new("chain.log_form_le_final", 0.0, "relative: 20800/(a^7(1 - a)^4) vs 20800/(a^7(1 - a)^2 log(1/a))", |a| {
            let ch = n3_chain(a).ok()?;
            Some(rel(ch.final_form, ch.log_form))
        }),
        Check::new("chain.end_to_end", STRICT_MARGIN, "relative: 20800/(a^7(1 - a)^4) vs exact n3", |a| {
            let ch = n3_chain(a).ok()?;
            Some(rel(ch.final_form, ch.exact))
        }),
    ]
}
