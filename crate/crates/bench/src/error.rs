use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("corpus is empty")]
    EmptyCorpus,
    #[error("Unexpected end of file")]
    UnexpectedEof,
    #[error("pattern size {size} exceeds corpus length {len}")]
    PatternTooLong { size: usize, len: usize },
    #[error("no pattern sizes or tests requested")]
    EmptyPlan,
    #[error("unknown algorithm `{0}`")]
    UnknownAlgorithm(String),
    #[error("algorithm `{algorithm}` cannot search {element} corpora")]
    Unsupported {
        algorithm: String,
        element: &'static str,
    },
    #[error(transparent)]
    Scheme(#[from] seqsearch::MatchError),
    #[error(
        "Incorrect result! {algorithm} found {actual:?} for pattern {pattern} \
         where the first algorithm found {expected:?}"
    )]
    CorrectnessMismatch {
        algorithm: String,
        pattern: String,
        expected: Option<usize>,
        actual: Option<usize>,
    },
}
