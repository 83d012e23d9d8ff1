//! The accelerated linear algorithms: a single-test skip loop in front of
//! Algorithm L's verify and recover steps.
//!
//! The text index `k` is kept relative to the end of the text, so it runs
//! from `-n` up towards zero and the loop exit test is `k >= 0`.

use crate::cursor::{Offset, RandomCursor, SliceCursor};
use crate::hash::{ByteScheme, HashScheme};
use crate::next::{compute_next, NextTable};
use crate::search::linear::find_element;
use crate::search::search_l;
use crate::skip::{compute_skip, SkipTable};

/// Tables shared by the accelerated searches, as plain offsets.
#[derive(Debug, Clone, Copy)]
pub struct LoopConstants {
    pub mismatch_shift: isize,
    pub adjustment: isize,
}

impl From<&SkipTable> for LoopConstants {
    fn from(t: &SkipTable) -> Self {
        LoopConstants {
            mismatch_shift: t.mismatch_shift(),
            adjustment: t.adjustment(),
        }
    }
}

/// Skip loop plus verify/recover over a text ending at `text_end` with `n`
/// elements. `shift_at(text_end, k)` returns the skip for the probe at `k`.
/// Requires `2 <= m <= n`.
#[inline(always)]
pub fn accelerated_search<C, F>(
    text_end: C,
    n: C::Offset,
    pattern: C,
    next: &NextTable,
    constants: LoopConstants,
    mut shift_at: F,
) -> C
where
    C: RandomCursor,
    C::Item: PartialEq,
    F: FnMut(&C, C::Offset) -> C::Offset,
{
    let zero = C::Offset::from_isize(0);
    let one = C::Offset::from_isize(1);
    let m = C::Offset::from_usize(next.len());
    let m1 = m - one;
    let adjustment = C::Offset::from_isize(constants.adjustment);
    let mismatch_shift = C::Offset::from_isize(constants.mismatch_shift);
    let mut k = zero - n;
    loop {
        k += m1;
        if k >= zero {
            break;
        }
        loop {
            k += shift_at(&text_end, k);
            if k >= zero {
                break;
            }
        }
        if k < m {
            return text_end;
        }
        k -= adjustment;
        if *text_end.at(k) != *pattern.get() {
            k += mismatch_shift;
            continue;
        }
        let mut j = one;
        loop {
            k += one;
            if *text_end.at(k) != *pattern.at(j) {
                break;
            }
            j += one;
            if j == m {
                return text_end.jump(k - m + one);
            }
        }
        if mismatch_shift > j {
            k += mismatch_shift - j;
            continue;
        }
        loop {
            j = C::Offset::from_isize(next.get(j.index()));
            if j < zero {
                k += one;
                break;
            }
            if j == zero {
                break;
            }
            while *text_end.at(k) == *pattern.at(j) {
                k += one;
                j += one;
                if j == m {
                    return text_end.jump(k - m);
                }
                if k == zero {
                    return text_end;
                }
            }
        }
    }
    text_end
}

/// HAL over cursors with prebuilt tables. Requires `2 <= m <= n` and
/// `m >= scheme.suffix_size()`.
#[inline]
pub fn hal_search<C, S>(
    text: C,
    text_end: C,
    pattern: C,
    next: &NextTable,
    skip: &SkipTable,
    scheme: &S,
) -> C
where
    C: RandomCursor,
    C::Item: PartialEq,
    S: HashScheme<C::Item>,
{
    let n = text.distance_to(&text_end);
    let shifts = skip.shifts();
    accelerated_search(text_end, n, pattern, next, skip.into(), |base, k| {
        C::Offset::from_isize(shifts[scheme.hash(base, k)])
    })
}

/// HAL over slices with the given scheme. Falls back to Algorithm L when
/// the scheme reads no elements or more elements than the pattern has.
///
/// ```
/// use seqsearch::{search_hal, DnaScheme4};
///
/// let dna = b"acgtttgacgatcgatcgggatcgatcagctacgatcgatcagctagctac";
/// assert_eq!(search_hal(dna, b"gatcgatcagct", &DnaScheme4), Some(19));
/// ```
pub fn search_hal<T, S>(text: &[T], pattern: &[T], scheme: &S) -> Option<usize>
where
    T: PartialEq,
    S: HashScheme<T>,
{
    let m = pattern.len();
    if m == 0 {
        return Some(0);
    }
    if text.len() < m {
        return None;
    }
    let begin = SliceCursor::begin(text);
    let end = SliceCursor::end(text);
    if m == 1 {
        let found = find_element(begin, end, &pattern[0]);
        return (found != end).then(|| found.position());
    }
    let s = scheme.suffix_size();
    if s == 0 || m < s || scheme.hash_range() == 0 {
        return search_l(text, pattern);
    }
    let next = compute_next(pattern).ok()?;
    let skip = compute_skip(pattern, scheme, text.len()).ok()?;
    let found = hal_search(
        begin,
        end,
        SliceCursor::begin(pattern),
        &next,
        &skip,
        scheme,
    );
    (found != end).then(|| found.position())
}

/// The accelerated linear algorithm: HAL with the identity byte hash.
///
/// ```
/// use seqsearch::search_al;
///
/// assert_eq!(search_al(b"uuuuuuuuuua", b"bcdabcdabcd"), None);
/// assert_eq!(search_al(b"ab", b"ab"), Some(0));
/// ```
pub fn search_al<T>(text: &[T], pattern: &[T]) -> Option<usize>
where
    T: PartialEq,
    ByteScheme: HashScheme<T>,
{
    search_hal(text, pattern, &ByteScheme)
}
