use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Search-space construction failed (bad dimension or inverted bounds).
    #[error("invalid search space: {0}")]
    InvalidSpace(String),

    /// Run configuration rejected before any evaluation happened.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// The objective produced NaN or an infinity. The run is aborted so the
    /// bad evaluation is not silently folded into the statistics.
    #[error("objective returned non-finite value {value} (iteration {}, agent {agent})",
            iteration.map(|t| t.to_string()).unwrap_or_else(|| "init".into()))]
    NonFiniteObjective {
        /// Iteration index, or `None` for the initialization sweep.
        iteration: Option<usize>,
        agent: usize,
        value: f64,
    },

    /// A statistics routine was handed an empty sample.
    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    /// The Friedman tensor is ragged.
    #[error("ragged input: {0}")]
    RaggedInput(String),

    /// Unknown problem id passed to a registry lookup.
    #[error("unknown problem id '{0}'")]
    UnknownProblem(String),

    /// Unknown algorithm id.
    #[error("unknown algorithm id '{0}'")]
    UnknownAlgorithm(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    /// Malformed campaign file read back by a report command.
    #[error("malformed campaign data: {0}")]
    MalformedData(String),
}

impl Error {
    /// True for errors that are the caller's configuration mistake rather
    /// than a runtime failure. The CLI maps these to exit status 2.
    pub fn is_config_error(&self) -> bool {
        matches!(
            self,
            Error::InvalidSpace(_)
                | Error::InvalidConfig(_)
                | Error::UnknownProblem(_)
                | Error::UnknownAlgorithm(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
