//! CLI error taxonomy mapped onto the documented exit codes.

use std::fmt;

pub type CliResult<T> = Result<T, CliError>;

#[derive(Debug)]
pub enum CliError {
    /// Exit 2: bad configuration, arguments, or IO environment.
    Config(String),
    /// Exit 3: a simulation or checker failed numerically.
    Numerical(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) => 2,
            CliError::Numerical(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(msg) => write!(f, "config error: {msg}"),
            CliError::Numerical(msg) => write!(f, "numerical error: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<cmv::Error> for CliError {
    fn from(e: cmv::Error) -> Self {
        match e {
            cmv::Error::NumericalBlowup { .. }
            | cmv::Error::WeightDegeneracy { .. }
            | cmv::Error::Coefficient { .. }
            | cmv::Error::Oracle { .. } => CliError::Numerical(e.to_string()),
            cmv::Error::Dimension { .. }
            | cmv::Error::Parameter { .. }
            | cmv::Error::Grid { .. } => CliError::Config(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Config(format!("io: {e}"))
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Config(format!("json: {e}"))
    }
}
