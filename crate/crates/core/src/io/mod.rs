//! Instance formats (APX, TGF) and the competition answer format.

mod apx;
mod solution;
mod tgf;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use apx::{parse_apx, write_apx};
pub use solution::{parse_solution, write_solution, write_solution_styled, ParseFailure, SolutionStyle, SolutionText};
pub use tgf::{parse_tgf, write_tgf};

use crate::framework::{AfError, ArgumentationFramework};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Framework { line: usize, source: AfError },
    #[error("missing `#` separator between nodes and edges")]
    MissingSeparator,
    #[error("unknown input format `{0}`")]
    UnknownFormat(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InputFormat {
    Apx,
    Tgf,
}

impl InputFormat {
    pub const ALL: [InputFormat; 2] = [InputFormat::Apx, InputFormat::Tgf];

    pub fn name(self) -> &'static str {
        match self {
            InputFormat::Apx => "apx",
            InputFormat::Tgf => "tgf",
        }
    }

    pub fn parse(self, text: &str) -> Result<ArgumentationFramework, FormatError> {
        match self {
            InputFormat::Apx => parse_apx(text),
            InputFormat::Tgf => parse_tgf(text),
        }
    }

    pub fn write(self, af: &ArgumentationFramework) -> String {
        match self {
            InputFormat::Apx => write_apx(af),
            InputFormat::Tgf => write_tgf(af),
        }
    }

    /// Guesses the format from a file extension.
    pub fn from_path(path: &std::path::Path) -> Option<InputFormat> {
        path.extension()?.to_str()?.parse().ok()
    }
}

impl fmt::Display for InputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for InputFormat {
    type Err = FormatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "apx" => Ok(InputFormat::Apx),
            "tgf" => Ok(InputFormat::Tgf),
            _ => Err(FormatError::UnknownFormat(s.to_string())),
        }
    }
}

/// APX identifiers: non-empty, ASCII letters, digits and underscore.
pub(crate) fn is_identifier(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}
