use std::fmt;
use std::path::Path;

use summarax_core::Error;

/// A failed invocation and its process exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

pub const EXIT_USAGE: u8 = 1;
pub const EXIT_IO: u8 = 2;
pub const EXIT_CORPUS: u8 = 3;

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    pub fn io(path: &Path, err: std::io::Error) -> Self {
        Self {
            code: EXIT_IO,
            message: format!("{}: {err}", path.display()),
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err.root() {
            Error::MissingDocsDir(_)
            | Error::EmptyCorpus(_)
            | Error::UnpairedDocuments(_)
            | Error::EmptyDocumentText(_)
            | Error::InvalidDocumentId(_) => EXIT_CORPUS,
            Error::Io { .. } | Error::Encoding(_) | Error::EmptyDocument => EXIT_IO,
            _ => EXIT_USAGE,
        };
        Self {
            code,
            message: err.to_string(),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}
