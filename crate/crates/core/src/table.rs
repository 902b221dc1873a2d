//! Comparison of the headline bound with Dégot's earlier thresholds.

use serde::{Deserialize, Serialize};

use crate::bounds::final_bound;

/// `(a, Dégot's N, published headline bound)` for `a = 0.1, ..., 0.9`.
/// Both columns are transcribed, not recomputed: Dégot's thresholds depend
/// on parameters of the individual polynomial.
pub const PUBLISHED_ROWS: [(f64, u32, f64); 9] = [
    (0.1, 15064, 3.4e11),
    (0.2, 3587, 4e9),
    (0.3, 1654, 4e8),
    (0.4, 1004, 9.8e7),
    (0.5, 718, 4.3e7),
    (0.6, 563, 3e7),
    (0.7, 560, 3.2e7),
    (0.8, 616, 6.2e7),
    (0.9, 1006, 4.4e8),
];

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub a: f64,
    pub degot_n: u32,
    pub computed_n: f64,
    pub printed_n: f64,
    /// `computed_n` rounded up to two significant figures.
    pub rounded_n: f64,
    /// `(computed_n - printed_n) / printed_n`.
    pub relative_diff: f64,
    /// Set when `rounded_n` differs from `printed_n`.
    pub flagged: bool,
}

/// Rounds `x > 0` up to `digits` significant figures.
pub fn ceil_sig(x: f64, digits: i32) -> f64 {
    let scale = 10f64.powi(x.log10().floor() as i32 - digits + 1);
    let m = x / scale;
    // a mantissa within rounding noise of an integer is not bumped
    let m = if (m - m.round()).abs() < 1e-9 { m.round() } else { m.ceil() };
    m * scale
}

fn same(x: f64, y: f64) -> bool {
    ((x - y) / y).abs() < 1e-12
}

pub fn comparison_table() -> Vec<TableRow> {
    PUBLISHED_ROWS
        .iter()
        .map(|&(a, degot_n, printed_n)| {
            let computed_n = final_bound(a).expect("table a in (0, 1)");
            let rounded_n = ceil_sig(computed_n, 2);
            TableRow {
                a,
                degot_n,
                computed_n,
                printed_n,
                rounded_n,
                relative_diff: (computed_n - printed_n) / printed_n,
                flagged: !same(rounded_n, printed_n),
            }
        })
        .collect()
}
