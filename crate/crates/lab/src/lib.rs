//! Verification suites and experiments over `steinberg-core`, shared by the
//! `steinberg-lab` binary and the acceptance tests.
//!
//! Every task produces [`Record`]s. A record passes when all the invariants it
//! asserts held; failed checks are listed in `failures`.

pub mod commands;
pub mod config;
pub mod record;
pub mod rows;
pub mod suites;

pub use config::Caps;
pub use record::{write_records, Format, Record, VERSION};

use steinberg_core::Error as CoreError;

#[derive(Debug, thiserror::Error)]
pub enum LabError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("output: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl LabError {
    pub fn usage(msg: impl Into<String>) -> LabError {
        LabError::Usage(msg.into())
    }

    /// 2 for bad parameters, 3 for exceeded caps, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            LabError::Usage(_) => 2,
            LabError::Core(CoreError::CapExceeded { .. }) => 3,
            LabError::Core(
                CoreError::NotPrime(_)
                | CoreError::NotPrimePower(_)
                | CoreError::FieldTooLarge { .. }
                | CoreError::Invalid(_)
                | CoreError::DimensionMismatch { .. },
            ) => 2,
            _ => 1,
        }
    }
}

pub type LabResult<T> = Result<T, LabError>;
