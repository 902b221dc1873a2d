//! Text and CSV rendering helpers.

use anyhow::Result;
use sendov_core::bounds::BoundBreakdown;
use sendov_core::verify::{Location, VerificationOutcome};
use serde::Serialize;

/// Six significant digits; scientific notation above `1e6` and below `1e-4`.
pub fn num(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0".into();
    }
    let mag = x.abs();
    if !(1e-4..=1e6).contains(&mag) {
        return format!("{x:.5e}");
    }
    let prec = (5 - mag.log10().floor() as i32).max(0) as usize;
    let s = format!("{x:.prec$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

pub fn location(loc: &Location) -> String {
    match loc {
        Location::Scalar(x) => x.to_string(),
        Location::Point([re, im]) => format!("{re}{im:+}i"),
    }
}

pub fn breakdown_fields(b: &BoundBreakdown) -> Vec<(&'static str, f64)> {
    vec![
        ("a", b.aux.a),
        ("q_prime", b.aux.q_prime),
        ("p_prime", b.aux.p_prime),
        ("gamma", b.aux.gamma),
        ("c", b.aux.c),
        ("n0", b.n0),
        ("n1", b.n1),
        ("n2", b.n2),
        ("mu1", b.mu1),
        ("mu2", b.mu2),
        ("k1", b.k1),
        ("k2", b.k2),
        ("k_prime", b.k_prime),
        ("r", b.r),
        ("r_prime", b.r_prime),
        ("alpha", b.alpha),
        ("alpha_prime", b.alpha_prime),
        ("n3_exact", b.n3_exact),
        ("n3_estimate", b.n3_estimate),
        ("final_n", b.final_n),
        ("small_bound", b.small_bound),
    ]
}

/// `name  value` lines with the names padded to a common width.
pub fn aligned<S: AsRef<str>>(rows: &[(&str, S)]) -> String {
    let w = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter().map(|(k, v)| format!("{k:<w$}  {}\n", v.as_ref())).collect()
}

/// CSV with a header row from serialisable records.
pub fn csv_records<T: Serialize>(rows: &[T]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

/// CSV from a header and rows of already-rendered cells.
pub fn csv_table(header: &[&str], rows: &[Vec<String>]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(r)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

pub fn json_lines<T: Serialize>(rows: &[T]) -> Result<String> {
    let mut out = String::new();
    for r in rows {
        out.push_str(&serde_json::to_string(r)?);
        out.push('\n');
    }
    Ok(out)
}

#[derive(Serialize)]
pub struct OutcomeRow<'a> {
    pub check_id: &'a str,
    pub passed: bool,
    pub worst_margin: f64,
    pub worst_location: String,
    pub threshold: f64,
    pub samples: usize,
    pub notes: &'a str,
}

impl<'a> From<&'a VerificationOutcome> for OutcomeRow<'a> {
    fn from(o: &'a VerificationOutcome) -> Self {
        OutcomeRow {
            check_id: &o.check_id,
            passed: o.passed,
            worst_margin: o.worst_margin,
            worst_location: location(&o.worst_location),
            threshold: o.threshold,
            samples: o.samples,
            notes: &o.notes,
        }
    }
}
