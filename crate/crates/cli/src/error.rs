use std::io;
use std::process::ExitCode;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Model(#[from] runoff_core::Error),

    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: io::Error,
    },

    #[error("no vanishing point: {0}")]
    NoVanishing(String),
}

impl CliError {
    pub fn io(context: impl Into<String>, source: io::Error) -> Self {
        Self::Io {
            context: context.into(),
            source,
        }
    }

    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            Self::InvalidArgument(_) | Self::Model(_) => 2,
            Self::Io { .. } => 1,
            Self::NoVanishing(_) => 3,
        })
    }
}
