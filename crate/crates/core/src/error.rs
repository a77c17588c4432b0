use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("safety cap exceeded: {0}")]
    SafetyCap(String),
}

pub type Result<T> = std::result::Result<T, Error>;
