use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("grids differ: {0}")]
    GridMismatch(String),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("invalid measure: {0}")]
    InvalidMeasure(String),

    #[error("negative evolution time {0}")]
    NegativeTime(f64),

    #[error("tails are not comparable: {0}")]
    IncomparableTails(String),

    #[error("tail inner product carries an unresolved contraction factor c(t)^2")]
    UnresolvedTailScalar,

    #[error("not representable: {0}")]
    NotRepresentable(String),

    #[error("scale rule is not summable (sum of L_n^-4 diverges): {0}")]
    DivergentScaleRule(String),

    #[error("operation needs a head-only state (flat tail): {0}")]
    NotHeadOnly(String),

    #[error("derivative norms are not summable: {0}")]
    NonSummable(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
