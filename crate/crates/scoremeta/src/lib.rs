//! scoremeta: a meta-dataset framework for audio/score research.

pub mod error;

pub use error::{Error, Result};
