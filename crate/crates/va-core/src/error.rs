use va_exact::ExactError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum VaError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("unknown parameter `{0}`")]
    UnknownParameter(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("OPE nesting depth exceeded the bound {0}")]
    DepthExceeded(usize),
    #[error("dimension {dim} exceeds the configured bound {bound}")]
    DimensionBound { dim: usize, bound: usize },
    #[error("field is not homogeneous in conformal weight")]
    NotHomogeneous,
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

pub type Result<T> = std::result::Result<T, VaError>;
