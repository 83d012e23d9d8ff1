//! The next table: the failure function driving recovery after a mismatch.
//!
//! Entry `j` is the largest `i < j` such that `p[0..i) == p[j-i..j)` and
//! `p[i] != p[j]`, or `-1` when no such `i` exists. After a mismatch against
//! pattern position `j`, the search resumes comparing the same text element
//! against `p[next[j]]`; a negative entry means the text element cannot start
//! any match and is skipped.
//!
//! ```
//! use seqsearch::compute_next;
//!
//! let next = compute_next(b"abcabcacab").unwrap();
//! assert_eq!(next.as_slice(), &[-1, 0, 0, -1, 0, 0, -1, 4, -1, 0]);
//! ```

use crate::cursor::Cursor;
use crate::error::MatchError;

/// Failure function of a pattern, one signed entry per pattern position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NextTable(Vec<isize>);

impl NextTable {
    pub fn as_slice(&self) -> &[isize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline(always)]
    pub fn get(&self, j: usize) -> isize {
        self.0[j]
    }
}

/// Computes the next table of a random-access pattern in O(m).
pub fn compute_next<T: PartialEq>(pattern: &[T]) -> Result<NextTable, MatchError> {
    let m = pattern.len();
    if m == 0 {
        return Err(MatchError::EmptyPattern);
    }
    let mut next = Vec::with_capacity(m);
    next.push(-1isize);
    let mut j = 0usize;
    let mut t = -1isize;
    while j < m - 1 {
        while t >= 0 && pattern[j] != pattern[t as usize] {
            t = next[t as usize];
        }
        j += 1;
        t += 1;
        if pattern[j] == pattern[t as usize] {
            next.push(next[t as usize]);
        } else {
            next.push(t);
        }
    }
    Ok(NextTable(next))
}

/// Next table of a forward-only pattern together with a cursor to every
/// pattern position, so recovery can jump to `p[next[j]]` without stepping.
#[derive(Debug, Clone)]
pub struct ForwardPatternIndex<P> {
    next: NextTable,
    positions: Vec<P>,
}

impl<P> ForwardPatternIndex<P> {
    pub fn next(&self) -> &NextTable {
        &self.next
    }

    /// `positions()[j]` designates pattern element `j`.
    pub fn positions(&self) -> &[P] {
        &self.positions
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }
}

/// Computes the next table in a single forward pass over `pattern..end`.
pub fn compute_forward_index<P>(pattern: P, end: P) -> Result<ForwardPatternIndex<P>, MatchError>
where
    P: Cursor,
    P::Item: PartialEq,
{
    if pattern == end {
        return Err(MatchError::EmptyPattern);
    }
    let mut next = vec![-1isize];
    let mut positions = vec![pattern.clone()];
    let mut p = pattern;
    let mut t = -1isize;
    loop {
        let mut ahead = p.clone();
        ahead.step();
        if ahead == end {
            break;
        }
        while t >= 0 && *p.get() != *positions[t as usize].get() {
            t = next[t as usize];
        }
        p = ahead;
        t += 1;
        let entry = if *p.get() == *positions[t as usize].get() {
            next[t as usize]
        } else {
            t
        };
        next.push(entry);
        positions.push(p.clone());
    }
    Ok(ForwardPatternIndex {
        next: NextTable(next),
        positions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cursor::{IterCursor, SliceCursor};
    use std::collections::LinkedList;

    #[test]
    fn single_element() {
        assert_eq!(compute_next(b"a").unwrap().as_slice(), &[-1]);
    }

    #[test]
    fn repeated_element() {
        assert_eq!(compute_next(b"aaaa").unwrap().as_slice(), &[-1, -1, -1, -1]);
    }

    #[test]
    fn empty_pattern_rejected() {
        assert_eq!(compute_next::<u8>(&[]), Err(MatchError::EmptyPattern));
        let e: &[u8] = &[];
        assert!(matches!(
            compute_forward_index(SliceCursor::begin(e), SliceCursor::end(e)),
            Err(MatchError::EmptyPattern)
        ));
    }

    #[test]
    fn forward_index_small_patterns() {
        let ab = b"ab";
        let idx = compute_forward_index(SliceCursor::begin(ab), SliceCursor::end(ab)).unwrap();
        assert_eq!(idx.next().as_slice(), &[-1, 0]);
        let chars: Vec<u8> = idx.positions().iter().map(|c| *c.get()).collect();
        assert_eq!(chars, b"ab");

        let aa = b"aa";
        let idx = compute_forward_index(SliceCursor::begin(aa), SliceCursor::end(aa)).unwrap();
        assert_eq!(idx.next().as_slice(), &[-1, -1]);
    }

    #[test]
    fn forward_index_over_list() {
        let list: LinkedList<u8> = b"abcabcacab".iter().copied().collect();
        let begin = IterCursor::new(list.iter());
        let end = begin.end();
        let idx = compute_forward_index(begin, end).unwrap();
        assert_eq!(idx.next(), &compute_next(b"abcabcacab").unwrap());
        for (j, c) in idx.positions().iter().enumerate() {
            assert_eq!(c.index(), j);
        }
    }
}
