//! Skip tables for the hashed skip loop.
//!
//! `shifts[h]` is how far the alignment may slide when the window under the
//! last pattern position hashes to `h`. The bucket of the pattern's own tail
//! is replaced by `large`, a shift so big that the loop index jumps past zero
//! and the single loop test `k < 0` also detects a candidate match. The loop
//! then subtracts `adjustment` to land on the candidate's first position.
//!
//! ```
//! use seqsearch::{compute_skip, ByteScheme};
//!
//! let table = compute_skip(b"abc", &ByteScheme, 10).unwrap();
//! assert_eq!(table.shift(b'a' as usize), 2);
//! assert_eq!(table.shift(b'z' as usize), 3);
//! assert_eq!(table.shift(b'c' as usize), 11);
//! assert_eq!(table.mismatch_shift(), 3);
//! assert_eq!(table.adjustment(), 13);
//! ```

use crate::cursor::SliceCursor;
use crate::error::MatchError;
use crate::hash::HashScheme;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkipTable {
    shifts: Vec<isize>,
    tail: usize,
    mismatch_shift: isize,
    large: isize,
    adjustment: isize,
}

impl SkipTable {
    #[inline(always)]
    pub fn shift(&self, h: usize) -> isize {
        self.shifts[h]
    }

    /// All shifts, with `large` in the tail bucket.
    pub fn shifts(&self) -> &[isize] {
        &self.shifts
    }

    /// Shifts as they were before the tail bucket was replaced by `large`.
    pub fn unsubstituted(&self) -> Vec<isize> {
        let mut v = self.shifts.clone();
        v[self.tail] = 0;
        v
    }

    /// Bucket of the window ending at the last pattern position.
    pub fn tail_bucket(&self) -> usize {
        self.tail
    }

    pub fn mismatch_shift(&self) -> isize {
        self.mismatch_shift
    }

    pub fn large(&self) -> isize {
        self.large
    }

    pub fn adjustment(&self) -> isize {
        self.adjustment
    }
}

/// Builds the skip table of `pattern` for searching a text of `text_size`
/// elements.
pub fn compute_skip<T, S: HashScheme<T>>(
    pattern: &[T],
    scheme: &S,
    text_size: usize,
) -> Result<SkipTable, MatchError> {
    let m = pattern.len();
    let s = scheme.suffix_size();
    let range = scheme.hash_range();
    if m == 0 {
        return Err(MatchError::EmptyPattern);
    }
    if s == 0 || range == 0 {
        return Err(MatchError::InvalidScheme(
            "scheme has no buckets or reads no elements".into(),
        ));
    }
    if m < s {
        return Err(MatchError::SuffixTooLong {
            pattern_len: m,
            suffix_size: s,
        });
    }
    let p = SliceCursor::begin(pattern);
    let mut shifts = vec![(m - s + 1) as isize; range];
    for j in (s - 1)..(m - 1) {
        shifts[scheme.hash(&p, j as isize)] = (m - 1 - j) as isize;
    }
    let tail = scheme.hash(&p, (m - 1) as isize);
    let mismatch_shift = shifts[tail];
    let large = text_size as isize + 1;
    shifts[tail] = large;
    Ok(SkipTable {
        shifts,
        tail,
        mismatch_shift,
        large,
        adjustment: large + m as isize - 1,
    })
}
