use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: file is not valid UTF-8 (first bad byte at offset {offset})")]
    InvalidUtf8 { path: PathBuf, offset: usize },

    #[error("line {line}: {message}")]
    MalformedLine { line: usize, message: String },

    #[error("duplicate id '{id}' (lines {first} and {second})")]
    DuplicateId { id: String, first: usize, second: usize },

    #[error("segment count mismatch: {hyp} hypothesis lines vs {reference} reference lines")]
    LengthMismatch { hyp: usize, reference: usize },

    #[error("candidate '{name}': {hyp} lines but the reference has {reference}")]
    CandidateMismatch { name: String, hyp: usize, reference: usize },

    #[error("reference corpus is empty")]
    EmptyReference,

    #[error("no candidates to select from")]
    NoCandidates,

    #[error("{value} is outside the spellable range 0..={max}")]
    NumberOutOfRange { value: u64, max: u64 },

    #[error("{day}.{month}.{year} is not a calendar date")]
    InvalidDate { day: u32, month: u32, year: u32 },

    #[error("invalid configuration: {0}")]
    Config(String),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
