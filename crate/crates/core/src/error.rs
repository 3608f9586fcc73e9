use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument fell outside the domain of the operation.
    #[error("{name} = {value} is out of range: {expected}")]
    Domain {
        name: &'static str,
        value: f64,
        expected: &'static str,
    },

    /// No finite sample size meets the consumer-risk constraint.
    #[error(
        "no finite sample size satisfies P* = {p_star} with c = {c} (failure probability {p_fail})"
    )]
    Unsatisfiable { p_star: f64, c: u32, p_fail: f64 },

    /// A lifetime data file could not be ingested.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown table `{0}` (expected 1, 2, 3 or 4)")]
    UnknownTable(String),

    #[error("{0}")]
    InvalidSample(String),
}

impl Error {
    pub(crate) fn domain(name: &'static str, value: f64, expected: &'static str) -> Self {
        Error::Domain {
            name,
            value,
            expected,
        }
    }
}
