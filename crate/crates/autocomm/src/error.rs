use std::path::PathBuf;

use autocomm_core::Error as CoreError;
use thiserror::Error;

use crate::format::FormatError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{}: {source}", path.display())]
    Format {
        path: PathBuf,
        #[source]
        source: FormatError,
    },
    #[error(transparent)]
    Core(#[from] CoreError),
}

impl CliError {
    /// 3 for exceeded size caps, 2 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(CoreError::SizeCap { .. }) => 3,
            _ => 2,
        }
    }
}
