use std::path::PathBuf;

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced by the scoremeta framework.
#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot access {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("malformed JSON in {path}: {source}")]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },

    #[error("invalid configuration {path}: {message}")]
    Config { path: PathBuf, message: String },

    #[error("invalid definition for dataset `{dataset}` at {field}: {message}")]
    Definition {
        dataset: String,
        field: String,
        message: String,
    },

    #[error("duplicate dataset name `{name}`")]
    DuplicateDataset { name: String },

    #[error("unknown dataset `{name}`")]
    UnknownDataset { name: String },

    #[error("dataset `{name}` is not installed")]
    NotInstalled { name: String },

    #[error("invalid ground truth: {0}")]
    InvalidGroundTruth(String),

    #[error("cannot decode ground truth: {0}")]
    Codec(String),

    #[error("conversion of {path} failed: {message}")]
    Convert { path: PathBuf, message: String },

    #[error("no converter registered under name `{name}`")]
    UnknownConverter { name: String },

    #[error("a converter named `{name}` is already registered")]
    DuplicateConverter { name: String },

    #[error("invalid MIDI file {path}: {message}")]
    Midi { path: PathBuf, message: String },

    #[error("cannot decode audio {path}: {message}")]
    Audio { path: PathBuf, message: String },

    #[error("referenced file does not exist: {path}")]
    MissingFile { path: PathBuf },

    #[error("song index {index} out of range (view has {len} songs)")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("song {dataset}:{index}: {source}")]
    Song {
        dataset: String,
        index: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("task for song index {index} failed: {source}")]
    TaskFailed {
        index: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("download of {url} failed: {message}")]
    Download { url: String, message: String },

    #[error("checksum mismatch for {url}: expected {expected}, got {actual}")]
    ChecksumMismatch {
        url: String,
        expected: String,
        actual: String,
    },

    #[error("installation of `{dataset}` failed: {message}")]
    Install { dataset: String, message: String },

    #[error("recipe for `{dataset}` has shell steps; pass the explicit shell opt-in to run them")]
    ShellDisabled { dataset: String },

    #[error("score request lists no annotation kinds")]
    EmptyScoreTypes,

    #[error("none of the requested annotation kinds {kinds:?} are available for this song")]
    NoScoreAvailable { kinds: Vec<String> },

    #[error("beat positions must be non-negative, got {0}")]
    NegativeBeat(f64),

    #[error("misalignment model error: {0}")]
    Misalign(String),

    #[error("{0}")]
    Message(String),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn song(dataset: impl Into<String>, index: usize, source: Error) -> Self {
        Error::Song {
            dataset: dataset.into(),
            index,
            source: Box::new(source),
        }
    }
}
