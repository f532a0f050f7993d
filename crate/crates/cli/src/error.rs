use thiserror::Error;

/// Errors that stop a suite before any check runs (exit status 2).
#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("unknown suite `{0}`; run `ymick suites` for the list")]
    UnknownSuite(String),
    #[error("weight {0} is not generic; choose labels whose differences are not integers, e.g. omit --mu for the default")]
    NonGenericWeight(String),
    #[error("suite needs dimension {needed}, above the cap {cap}; lower --m/--n/--l/--N or raise --max-dim")]
    DimensionCapExceeded { needed: u128, cap: u128 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("config file {path}, line {line}: {message}")]
    Config { path: String, line: usize, message: String },
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Core(#[from] ymick_core::Error),
}

pub type HarnessResult<T> = Result<T, HarnessError>;
