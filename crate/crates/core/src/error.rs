use thiserror::Error;

/// Errors shared by the whole crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("data: {0}")]
    Data(String),
    #[error("tree: {0}")]
    Tree(String),
    #[error("ndt: {0}")]
    Ndt(String),
    #[error("train: {0}")]
    Train(String),
    #[error("metrics: {0}")]
    Metrics(String),
    #[error("selection: {0}")]
    Selection(String),
    #[error("report: {0}")]
    Report(String),
}

pub type Result<T> = std::result::Result<T, Error>;
