use thiserror::Error;

/// Errors raised while preprocessing a pattern or evaluating a hash scheme.
///
/// Searches themselves never fail: an empty pattern matches at offset 0 and a
/// pattern longer than the text is simply not found.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchError {
    #[error("pattern is empty")]
    EmptyPattern,
    /// The hash scheme reads more trailing elements than the pattern has.
    #[error("hash scheme suffix size {suffix_size} exceeds pattern length {pattern_len}")]
    SuffixTooLong {
        pattern_len: usize,
        suffix_size: usize,
    },
    /// A hash window would start before the beginning of the sequence.
    #[error("hash window at position {position} needs {suffix_size} elements")]
    WindowUnderflow { position: usize, suffix_size: usize },
    #[error("invalid hash scheme: {0}")]
    InvalidScheme(String),
}
