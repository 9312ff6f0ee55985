use std::fmt;

use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported root system: {0}")]
    UnsupportedRootSystem(String),

    #[error("not a root of {system}: {coeffs:?}")]
    NotARoot { system: String, coeffs: Vec<i64> },

    #[error("not a positive root of {system}: {coeffs:?}")]
    NotAPositiveRoot { system: String, coeffs: Vec<i64> },

    #[error("root systems differ: {0} vs {1}")]
    ContextMismatch(String, String),

    #[error("simple reflection index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("element is not dominant")]
    NotDominant,

    #[error("star undefined for this pair: s{0}, s{1}")]
    StarUndefined(usize, usize),

    #[error("no matrix realization provided for {0}")]
    NoMatrixRealization(String),

    #[error("{0} is not a partition of {1}")]
    NotAPartition(String, usize),

    #[error("invalid affine permutation window {0:?}: {1}")]
    InvalidWindow(Vec<i64>, &'static str),

    #[error("n = {n} exceeds the exhaustive k-family search budget (n <= {max})")]
    SearchBudget { n: usize, max: usize },

    #[error("operation requires type {expected}, got {got}")]
    WrongFamily { expected: &'static str, got: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("{0}")]
    Counterexample(Box<Counterexample>),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A failed mechanical check, carrying everything needed to reproduce it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    /// Which check failed.
    pub check: String,
    /// Human-readable dump: move data, inversion sets, words.
    pub details: Vec<(String, String)>,
}

impl Counterexample {
    pub fn new(check: impl Into<String>) -> Self {
        Self {
            check: check.into(),
            details: Vec::new(),
        }
    }

    pub fn with(mut self, key: impl Into<String>, value: impl fmt::Display) -> Self {
        self.details.push((key.into(), value.to_string()));
        self
    }

    pub(crate) fn into_error(self) -> Error {
        Error::Counterexample(Box::new(self))
    }
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "counterexample: {}", self.check)?;
        for (k, v) in &self.details {
            writeln!(f, "  {k}: {v}")?;
        }
        Ok(())
    }
}
