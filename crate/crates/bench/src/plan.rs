//! Pattern selection: evenly spaced slices of the corpus plus optional
//! dictionary words of each size.

use std::collections::BTreeMap;

use crate::error::BenchError;

/// Words grouped by length, in file order within each length.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Dictionary<T> {
    by_size: BTreeMap<usize, Vec<Vec<T>>>,
}

impl<T> Dictionary<T> {
    pub fn from_words(words: impl IntoIterator<Item = Vec<T>>) -> Self {
        let mut by_size: BTreeMap<usize, Vec<Vec<T>>> = BTreeMap::new();
        for w in words {
            by_size.entry(w.len()).or_default().push(w);
        }
        Dictionary { by_size }
    }

    pub fn words(&self, size: usize) -> &[Vec<T>] {
        self.by_size.get(&size).map_or(&[], Vec::as_slice)
    }
}

/// Keeps at most `tests` words, taking every `len / tests`-th one.
pub fn trim_words<T: Clone>(words: &[Vec<T>], tests: usize) -> Vec<Vec<T>> {
    if words.len() <= tests {
        return words.to_vec();
    }
    let skip = words.len() / tests;
    (0..tests).map(|t| words[t * skip].clone()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SizePlan<T> {
    pub size: usize,
    pub increment: usize,
    /// Corpus offsets the text patterns were cut from.
    pub offsets: Vec<usize>,
    pub text_patterns: Vec<Vec<T>>,
    pub dictionary_patterns: Vec<Vec<T>>,
}

impl<T> SizePlan<T> {
    /// Text patterns followed by dictionary patterns.
    pub fn patterns(&self) -> impl Iterator<Item = &[T]> {
        self.text_patterns
            .iter()
            .chain(&self.dictionary_patterns)
            .map(Vec::as_slice)
    }

    pub fn len(&self) -> usize {
        self.text_patterns.len() + self.dictionary_patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternPlan<T> {
    pub tests: usize,
    pub sizes: Vec<SizePlan<T>>,
}

/// Builds `tests` text patterns per size at offsets `0, inc, 2*inc, ...`
/// where `inc = (n - size) / tests`, plus up to `tests` dictionary words.
pub fn build_pattern_plan<T: Clone>(
    corpus: &[T],
    sizes: &[usize],
    tests: usize,
    dictionary: Option<&Dictionary<T>>,
) -> Result<PatternPlan<T>, BenchError> {
    if sizes.is_empty() || tests == 0 || sizes.contains(&0) {
        return Err(BenchError::EmptyPlan);
    }
    let n = corpus.len();
    let mut plans = Vec::with_capacity(sizes.len());
    for &size in sizes {
        if size > n {
            return Err(BenchError::PatternTooLong { size, len: n });
        }
        let increment = (n - size) / tests;
        let offsets: Vec<usize> = (0..tests).map(|k| k * increment).collect();
        let text_patterns = offsets
            .iter()
            .map(|&f| corpus[f..f + size].to_vec())
            .collect();
        let dictionary_patterns = dictionary
            .map(|d| trim_words(d.words(size), tests))
            .unwrap_or_default();
        plans.push(SizePlan {
            size,
            increment,
            offsets,
            text_patterns,
            dictionary_patterns,
        });
    }
    Ok(PatternPlan {
        tests,
        sizes: plans,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evenly_spaced_offsets() {
        let corpus: Vec<u16> = (0..1000).collect();
        let plan = build_pattern_plan(&corpus, &[10], 10, None).unwrap();
        let p = &plan.sizes[0];
        assert_eq!(p.increment, 99);
        assert_eq!(p.offsets[..3], [0, 99, 198]);
        assert_eq!(p.text_patterns[2][0], 198);
        assert!(p.dictionary_patterns.is_empty());
    }

    #[test]
    fn dictionary_trimmed_by_uniform_skip() {
        let words: Vec<Vec<u16>> = (0..1000u16).map(|i| vec![i, i]).collect();
        let trimmed = trim_words(&words, 400);
        assert_eq!(trimmed.len(), 400);
        assert_eq!(trimmed[1], vec![2, 2]);
        assert_eq!(trimmed[399], vec![798, 798]);
    }

    #[test]
    fn oversized_pattern_rejected() {
        let corpus = b"short";
        assert!(matches!(
            build_pattern_plan(corpus, &[6], 3, None),
            Err(BenchError::PatternTooLong { size: 6, len: 5 })
        ));
        assert!(matches!(
            build_pattern_plan(corpus, &[], 3, None),
            Err(BenchError::EmptyPlan)
        ));
    }
}
