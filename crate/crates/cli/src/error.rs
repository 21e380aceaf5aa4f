//! Errors of the command line layer.
//!
//! Everything here means the invocation cannot produce a report: unreadable
//! files, malformed JSON, entries that fail their mathematical checks, names
//! that resolve to nothing, or flags that do not fit the instance. All of
//! them exit with status 2. A report whose verdicts contain a `false` is not
//! an error; it exits with status 1.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    /// The file is not JSON of the instance shape. The message is the
    /// parser's own, including line and column.
    #[error("{path}: {message}")]
    Parse { path: String, message: String },

    /// A structurally valid entry fails its checks or refers to a name the
    /// file does not define. The location is a JSON path into the file.
    #[error("{location}: {message}")]
    Schema { location: String, message: String },

    /// The flags do not fit the instance.
    #[error("{0}")]
    Usage(String),

    /// A computation refused its input after resolution succeeded.
    #[error("{0}")]
    Compute(String),
}

impl CliError {
    pub(crate) fn schema(location: impl Into<String>, message: impl ToString) -> CliError {
        CliError::Schema {
            location: location.into(),
            message: message.to_string(),
        }
    }
}
