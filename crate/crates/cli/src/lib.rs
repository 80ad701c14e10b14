//! Library half of the `monocurve` command-line tool: argument types,
//! command implementations and report serialization.

pub mod args;
pub mod commands;
pub mod config;
pub mod report;

use monocurve::closedform::ClosedFormError;
use monocurve::curve::CurveError;
use monocurve::exactalg::AlgebraError;
use monocurve::homology::HomologyError;
use monocurve::oracle::OracleError;

/// Failures that abort a command. Verification failures are not errors:
/// they are reported through the checks of a [`report::RunReport`].
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    Resource(String),
    #[error("{0}")]
    Internal(String),
}

pub const EXIT_OK: u8 = 0;
pub const EXIT_INTERNAL: u8 = 1;
pub const EXIT_INVALID: u8 = 2;
pub const EXIT_VERIFY_FAILED: u8 = 3;
pub const EXIT_RESOURCE: u8 = 4;

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid(_) => EXIT_INVALID,
            CliError::Resource(_) => EXIT_RESOURCE,
            CliError::Internal(_) => EXIT_INTERNAL,
        }
    }
}

impl From<CurveError> for CliError {
    fn from(e: CurveError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::ResourceLimit(m) => CliError::Resource(m),
            OracleError::Curve(c) => c.into(),
            other => CliError::Internal(other.to_string()),
        }
    }
}

impl From<HomologyError> for CliError {
    fn from(e: HomologyError) -> Self {
        match e {
            HomologyError::WrongCase { .. } => CliError::Invalid(e.to_string()),
            other => CliError::Internal(other.to_string()),
        }
    }
}

impl From<ClosedFormError> for CliError {
    fn from(e: ClosedFormError) -> Self {
        match e {
            ClosedFormError::WrongCase { .. } => CliError::Invalid(e.to_string()),
            other => CliError::Internal(other.to_string()),
        }
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        CliError::Internal(e.to_string())
    }
}
