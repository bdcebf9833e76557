use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("level mismatch: {left} vs {right}")]
    LevelMismatch { left: u32, right: u32 },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("singular element (norm {norm:e})")]
    Singular { norm: f64 },

    #[error("singular derivative: |df/dx0| = {norm:e}")]
    SingularDerivative { norm: f64 },

    #[error("pole at {point:?} (|cz + d| = {norm:e})")]
    Pole { point: Vec<f64>, norm: f64 },

    #[error("invalid Vahlen matrix: {0}")]
    InvalidMatrix(String),

    #[error("map contract violated: {0}")]
    MapContract(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Config(e.to_string())
    }
}
