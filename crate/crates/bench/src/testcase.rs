//! Regression files of (comment, text, pattern) line triples.

use std::path::Path;

use crate::error::BenchError;

/// The bundled regression cases.
pub const SMALL_TXT: &str = include_str!("../assets/small.txt");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TestCase {
    pub comment: Vec<u8>,
    pub text: Vec<u8>,
    pub pattern: Vec<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TestCaseFile {
    pub cases: Vec<TestCase>,
}

impl TestCaseFile {
    /// Parses LF-separated lines three at a time. A final newline is
    /// optional; a partial triple at the end is an error.
    pub fn parse(data: &[u8]) -> Result<Self, BenchError> {
        let mut lines: Vec<&[u8]> = data.split(|&b| b == b'\n').collect();
        if lines.last().is_some_and(|l| l.is_empty()) {
            lines.pop();
        }
        if !lines.len().is_multiple_of(3) {
            return Err(BenchError::UnexpectedEof);
        }
        let cases = lines
            .chunks(3)
            .map(|c| TestCase {
                comment: c[0].to_vec(),
                text: c[1].to_vec(),
                pattern: c[2].to_vec(),
            })
            .collect();
        Ok(TestCaseFile { cases })
    }

    pub fn load(path: &Path) -> Result<Self, BenchError> {
        let data = std::fs::read(path).map_err(|source| BenchError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::parse(&data)
    }

    pub fn bundled() -> Self {
        Self::parse(SMALL_TXT.as_bytes()).expect("bundled small.txt is well formed")
    }
}
