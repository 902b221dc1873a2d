use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A scalar argument fell outside the interval a formula is defined on.
    #[error("{name} = {value} is outside the domain {domain}")]
    Domain { name: &'static str, value: f64, domain: &'static str },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("root finding did not converge after {iterations} iterations and {restarts} restarts (worst residual {worst_residual:e})")]
    NotConverged { iterations: usize, restarts: usize, worst_residual: f64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Checks `lo < value < hi`, rejecting NaN.
pub(crate) fn open_interval(name: &'static str, value: f64, lo: f64, hi: f64, domain: &'static str) -> Result<f64> {
    if value > lo && value < hi {
        Ok(value)
    } else {
        Err(Error::Domain { name, value, domain })
    }
}

pub(crate) fn unit_open(name: &'static str, value: f64) -> Result<f64> {
    open_interval(name, value, 0.0, 1.0, "(0, 1)")
}
