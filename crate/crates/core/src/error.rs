use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    // corpus
    #[error("corpus root {0} has no docs/ directory")]
    MissingDocsDir(PathBuf),
    #[error("corpus at {0} contains no readable documents")]
    EmptyCorpus(PathBuf),
    #[error("{0} is not valid UTF-8")]
    Encoding(PathBuf),
    #[error("document {0:?} is empty")]
    EmptyDocumentText(String),
    #[error("invalid document id {0:?}")]
    InvalidDocumentId(String),
    #[error("documents without a reference summary: {}", .0.join(", "))]
    UnpairedDocuments(Vec<String>),
    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    // text / metrics arguments
    #[error("n-gram order must be at least 1, got {0}")]
    InvalidN(usize),
    #[error("at least one text unit is required to compute idf")]
    EmptyUnitList,
    #[error("precision and weight lists differ in length ({precisions} vs {weights})")]
    LengthMismatch { precisions: usize, weights: usize },
    #[error("weights must be positive and sum to 1")]
    InvalidWeights,
    #[error("reference length must be at least 1, got {0}")]
    InvalidReferenceLength(usize),
    #[error("{name} = {value} is outside [0, 1]")]
    OutOfRange { name: &'static str, value: f64 },

    // numerics
    #[error("matrix entry at ({row}, {col}) is not a finite non-negative weight")]
    NonFiniteWeight { row: usize, col: usize },
    #[error("matrix has a zero dimension")]
    DimensionZero,
    #[error("expected a {expected} matrix, got {rows}x{cols}")]
    Shape {
        expected: &'static str,
        rows: usize,
        cols: usize,
    },
    #[error("matrix data length {len} does not match {rows}x{cols}")]
    DataLength {
        rows: usize,
        cols: usize,
        len: usize,
    },
    #[error("non-finite matrix entry")]
    NonFinite,
    #[error("invalid iteration parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid probability distribution: {0}")]
    InvalidDistribution(String),

    // summarizers
    #[error("document has no sentences")]
    EmptyDocument,
    #[error("summary length k must be at least 1")]
    InvalidK,

    // report
    #[error("no algorithms selected")]
    NoAlgorithms,
    #[error("unsupported report format {0:?}")]
    UnsupportedFormat(String),
    #[error("unknown algorithm {0:?}")]
    UnknownAlgorithm(String),
    #[error("document {id}: {source}")]
    InDocument {
        id: String,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// Strips any [`Error::InDocument`] wrapping.
    pub fn root(&self) -> &Error {
        match self {
            Error::InDocument { source, .. } => source.root(),
            other => other,
        }
    }
}
