//! Knuth-Morris-Pratt search in its original form, one comparison per step.

use crate::cursor::{Offset, RandomCursor, SliceCursor};
use crate::next::{compute_next, NextTable};

/// Searches the `n` elements starting at `text` for the pattern whose next
/// table is `next`. Returns the cursor at the match or `text + n`.
pub fn kmp_search<C>(text: C, n: C::Offset, pattern: C, next: &NextTable) -> C
where
    C: RandomCursor,
    C::Item: PartialEq,
{
    let zero = C::Offset::from_isize(0);
    let one = C::Offset::from_isize(1);
    let m = C::Offset::from_usize(next.len());
    let mut j = zero;
    let mut k = zero;
    while j < m && k < n {
        while j >= zero && *text.at(k) != *pattern.at(j) {
            j = C::Offset::from_isize(next.get(j.index()));
        }
        k += one;
        j += one;
    }
    if j == m {
        text.jump(k - m)
    } else {
        text.jump(n)
    }
}

/// Basic KMP over slices.
///
/// ```
/// use seqsearch::search_kmp_basic;
///
/// assert_eq!(search_kmp_basic(b"babcbabcabcaabcabcabcacabc", b"abcabcacab"), Some(15));
/// ```
pub fn search_kmp_basic<T: PartialEq>(text: &[T], pattern: &[T]) -> Option<usize> {
    if pattern.is_empty() {
        return Some(0);
    }
    if text.len() < pattern.len() {
        return None;
    }
    let next = compute_next(pattern).ok()?;
    let found = kmp_search(
        SliceCursor::begin(text),
        text.len() as isize,
        SliceCursor::begin(pattern),
        &next,
    );
    (found.position() < text.len()).then(|| found.position())
}
