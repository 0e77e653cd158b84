use thiserror::Error;

/// Everything that can go wrong between parsing a triple and printing a count.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse `{input}` as a rational (expected `p` or `p/q`)")]
    Parse { input: String },

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("malformed continued fraction {coeffs:?}: evaluation hits a pole")]
    MalformedCf { coeffs: Vec<String> },

    #[error("coefficient {0} is an integer; every r_i must be non-integral")]
    IntegralCoefficient(String),

    #[error("e0 = {e0} is out of scope (only e0 >= 0 is classified)")]
    OutOfScope { e0: String },

    #[error("index {index} out of range: {reason}")]
    Index { index: usize, reason: &'static str },

    #[error("malformed report: {0}")]
    Report(String),

    #[error("enumeration needs {needed} assignments, limit is {limit}")]
    EnumerationCap { needed: String, limit: u64 },
}

impl Error {
    /// Process exit code used by the CLI and the C ABI.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::OutOfScope { .. } => 2,
            Error::EnumerationCap { .. } => 3,
            _ => 1,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
