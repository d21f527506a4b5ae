//! Error type shared across the pipeline, with stable exit codes for the CLI.

use std::path::PathBuf;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("object proposal has no points")]
    InvalidProposal,

    #[error("point {index} of object {id} is invalid: {reason}")]
    InvalidPoint {
        id: u32,
        index: usize,
        reason: String,
    },

    #[error("duplicate object id {0}")]
    DuplicateObjectId(u32),

    #[error("object id {id} outside dense range 0..{n}")]
    InvalidObjectId { id: u32, n: usize },

    #[error("scene has {0} objects, maximum is 200")]
    TooManyObjects(usize),

    #[error("scene contains no objects")]
    EmptyScene,

    #[error("parse error in {path} at {location}: {message}")]
    Parse {
        path: PathBuf,
        location: String,
        message: String,
    },

    #[error("io error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("missing edge feature for pair ({0}, {1})")]
    MissingEdgeFeature(u32, u32),

    #[error("missing feature for {0}")]
    MissingFeature(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("answer index {index} out of range for {len} logits")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("scene generation failed: {0}")]
    Generation(String),

    #[error("training diverged at step {step}")]
    TrainingDiverged { step: usize },

    #[error("{0}")]
    InvalidConfig(String),
}

impl Error {
    /// Stable process exit code per error class: 2 parse/io, 3 validation,
    /// 4 missing feature, 5 training divergence.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::Io { .. } => 2,
            Error::MissingEdgeFeature(..) | Error::MissingFeature(..) => 4,
            Error::TrainingDiverged { .. } => 5,
            _ => 3,
        }
    }
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn parse(
        path: impl Into<PathBuf>,
        location: impl Into<String>,
        message: impl Into<String>,
    ) -> Self {
        Error::Parse {
            path: path.into(),
            location: location.into(),
            message: message.into(),
        }
    }
}
