//! Accelerated search over 16-bit symbols with an unhashed skip table.
//!
//! The table has one entry per symbol and is far too large to initialize per
//! search. Entries are stored skewed by the default shift so that a zero
//! entry means "symbol not in pattern"; only entries for pattern symbols are
//! written, and they are cleared again when the search returns.

use crate::cursor::{Offset, RandomCursor, SliceCursor};
use crate::hash::WideSymbol;
use crate::next::compute_next;
use crate::search::hal::{accelerated_search, LoopConstants};
use crate::search::linear::find_element;

const SYMBOLS: usize = 1 << 16;

/// Reusable zero-filled skip storage, one entry per 16-bit symbol.
///
/// One search at a time may use a table; concurrent searches need separate
/// tables.
#[derive(Debug, Clone)]
pub struct SkewedSkipTable {
    entries: Vec<isize>,
}

impl Default for SkewedSkipTable {
    fn default() -> Self {
        Self::new()
    }
}

impl SkewedSkipTable {
    pub fn new() -> Self {
        SkewedSkipTable {
            entries: vec![0; SYMBOLS],
        }
    }

    /// True when every entry is zero, as it must be between searches.
    pub fn is_clear(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub fn entries(&self) -> &[isize] {
        &self.entries
    }
}

/// Writes a pattern's shifts into a table and clears them on drop.
pub struct LoadedPattern<'t, 'p, T: WideSymbol> {
    table: &'t mut SkewedSkipTable,
    pattern: &'p [T],
    skew: isize,
    constants: LoopConstants,
}

impl<'t, 'p, T: WideSymbol> LoadedPattern<'t, 'p, T> {
    /// Loads `pattern` (at least two symbols) for a text of `text_size`.
    pub fn load(table: &'t mut SkewedSkipTable, pattern: &'p [T], text_size: usize) -> Self {
        let m = pattern.len();
        let skew = m as isize;
        for (j, p) in pattern[..m - 1].iter().enumerate() {
            table.entries[p.symbol() as usize] = (m - 1 - j) as isize - skew;
        }
        let tail = pattern[m - 1].symbol() as usize;
        let mismatch_shift = table.entries[tail] + skew;
        let large = text_size as isize + 1;
        table.entries[tail] = large - skew;
        LoadedPattern {
            table,
            pattern,
            skew,
            constants: LoopConstants {
                mismatch_shift,
                adjustment: large + m as isize - 1,
            },
        }
    }

    /// The stored entry plus the skew, which is the real shift.
    #[inline(always)]
    pub fn shift(&self, symbol: u16) -> isize {
        self.table.entries[symbol as usize] + self.skew
    }

    pub fn constants(&self) -> LoopConstants {
        self.constants
    }
}

impl<T: WideSymbol> Drop for LoadedPattern<'_, '_, T> {
    fn drop(&mut self) {
        for p in self.pattern {
            self.table.entries[p.symbol() as usize] = 0;
        }
    }
}

/// NHAL over cursors with a loaded table. Requires `2 <= m <= n`.
#[inline]
pub fn nhal_search<C>(
    text: C,
    text_end: C,
    pattern: C,
    next: &crate::next::NextTable,
    loaded: &LoadedPattern<'_, '_, impl WideSymbol>,
) -> C
where
    C: RandomCursor,
    C::Item: PartialEq + WideSymbol,
{
    let n = text.distance_to(&text_end);
    accelerated_search(text_end, n, pattern, next, loaded.constants(), |base, k| {
        C::Offset::from_isize(loaded.shift(base.at(k).symbol()))
    })
}

/// NHAL over slices. `table` must be clear on entry and is clear on return.
///
/// ```
/// use seqsearch::{search_nhal, SkewedSkipTable};
///
/// let mut table = SkewedSkipTable::new();
/// let text: Vec<u16> = vec![7, 900, 65535, 3, 900, 65535, 3, 1];
/// assert_eq!(search_nhal(&text, &[900, 65535, 3, 1], &mut table), Some(4));
/// assert!(table.is_clear());
/// ```
pub fn search_nhal<T>(text: &[T], pattern: &[T], table: &mut SkewedSkipTable) -> Option<usize>
where
    T: PartialEq + WideSymbol,
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
    let next = compute_next(pattern).ok()?;
    let loaded = LoadedPattern::load(table, pattern, text.len());
    let found = nhal_search(begin, end, SliceCursor::begin(pattern), &next, &loaded);
    (found != end).then(|| found.position())
}
