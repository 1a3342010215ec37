use std::io;
use std::path::PathBuf;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] bsdh_core::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{path}: malformed JSON: {source}")]
    Json {
        path: PathBuf,
        source: serde_json::Error,
    },
    #[error("unknown suite {0:?}; expected one of operators, euler, simply-laced-theorems, kernel, w0-all-types, schubert-adjoint")]
    UnknownSuite(String),
    #[error("{path} holds a checkpoint for {found}, not {expected}")]
    CheckpointMismatch {
        path: PathBuf,
        found: String,
        expected: String,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>) -> impl FnOnce(io::Error) -> Error {
        let path = path.into();
        move |source| Error::Io { path, source }
    }
}
