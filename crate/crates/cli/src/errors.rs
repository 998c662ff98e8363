//! Error-to-exit-code mapping for the command line surface.
//!
//! 0: success. 1: I/O or parse problems. 2: the wrapped operation failed
//! or a check came back negative. 3: an enumeration bound was exceeded.

use std::fmt;

pub const EXIT_IO: i32 = 1;
pub const EXIT_OPERATION: i32 = 2;
pub const EXIT_BOUNDS: i32 = 3;

pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn io(message: impl fmt::Display) -> Self {
        CliError { code: EXIT_IO, message: message.to_string() }
    }

    pub fn operation(message: impl fmt::Display) -> Self {
        CliError { code: EXIT_OPERATION, message: message.to_string() }
    }

    pub fn bounds(message: impl fmt::Display) -> Self {
        CliError { code: EXIT_BOUNDS, message: message.to_string() }
    }
}

impl From<symflex_core::EnumerationError> for CliError {
    fn from(e: symflex_core::EnumerationError) -> Self {
        CliError::bounds(e)
    }
}

impl From<symflex_core::closure::ClosureError> for CliError {
    fn from(e: symflex_core::closure::ClosureError) -> Self {
        match e {
            symflex_core::closure::ClosureError::Enumeration(inner) => CliError::bounds(inner),
        }
    }
}

impl From<symflex_core::MotionError> for CliError {
    fn from(e: symflex_core::MotionError) -> Self {
        CliError::operation(e)
    }
}

impl From<symflex_core::colouring::ColouringError> for CliError {
    fn from(e: symflex_core::colouring::ColouringError) -> Self {
        CliError::operation(e)
    }
}
