use std::process::ExitCode;

use thiserror::Error;

/// Failure of a command, with its exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("input-error: {0}")]
    Input(String),
    #[error("budget-error: {0}")]
    Budget(String),
    #[error("internal-error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }

    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Input(_) => 2,
            CliError::Budget(_) => 3,
            CliError::Internal(_) => 4,
        })
    }
}

impl From<cobip_core::Error> for CliError {
    fn from(e: cobip_core::Error) -> Self {
        use cobip_core::Error as E;
        // keep the reason on one line
        let msg = e.to_string().replace('\n', " ");
        match e {
            E::InvalidInput(_) => CliError::Input(msg),
            E::CapExceeded { .. } | E::BudgetExhausted { .. } => CliError::Budget(msg),
            E::Internal(_) => CliError::Internal(msg),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(e.to_string().replace('\n', " "))
    }
}
