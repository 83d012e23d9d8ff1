//! Operation counting without touching the algorithms.
//!
//! The algorithms are generic over the element, cursor and offset types, so
//! counting is a matter of instantiating them with wrappers that record each
//! operation: [`Counted`] elements record equality tests and hash reads,
//! [`CountingCursor`] records cursor movement and dereferences, and
//! [`CountedDistance`] records arithmetic and comparisons on offsets.
//!
//! Counts go to a per-thread sink opened by a [`CountScope`]. Scopes nest;
//! closing one restores the totals of the enclosing scope.
//!
//! ```
//! use seqsearch::{run_counted, ByteScheme, CountedAlgorithm};
//!
//! let text = b"the quick brown fox jumps over the lazy dog";
//! let (outcome, counts) = run_counted(CountedAlgorithm::Sf, text, b"lazy", &ByteScheme);
//! assert_eq!(outcome.position, Some(35));
//! assert!(counts.element_comparisons >= 35);
//! ```

use std::cell::Cell;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Sub, SubAssign};
use std::str::FromStr;

use crate::cursor::{Cursor, Offset, RandomCursor, SliceCursor};
use crate::hash::{ByteValue, HashScheme, WideSymbol, WordHead};
use crate::next::{compute_forward_index, compute_next, ForwardPatternIndex, NextTable};
use crate::search::{
    find_element, hal_search, kmp_search, linear_search, sf_search, SearchOutcome,
};
use crate::skip::{compute_skip, SkipTable};

/// Raw operation totals for one run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OperationCounts {
    pub element_comparisons: u64,
    pub element_accesses: u64,
    pub cursor_big_jumps: u64,
    pub cursor_other_ops: u64,
    pub distance_ops: u64,
}

/// Operation totals divided by the number of elements searched.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct OperationRates {
    pub comparisons: f64,
    pub accesses: f64,
    pub big_jumps: f64,
    pub other_cursor_ops: f64,
    pub distance_ops: f64,
}

impl OperationCounts {
    pub fn per_element(&self, elements: u64) -> OperationRates {
        let d = elements.max(1) as f64;
        OperationRates {
            comparisons: self.element_comparisons as f64 / d,
            accesses: self.element_accesses as f64 / d,
            big_jumps: self.cursor_big_jumps as f64 / d,
            other_cursor_ops: self.cursor_other_ops as f64 / d,
            distance_ops: self.distance_ops as f64 / d,
        }
    }
}

impl Add for OperationCounts {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        OperationCounts {
            element_comparisons: self.element_comparisons + o.element_comparisons,
            element_accesses: self.element_accesses + o.element_accesses,
            cursor_big_jumps: self.cursor_big_jumps + o.cursor_big_jumps,
            cursor_other_ops: self.cursor_other_ops + o.cursor_other_ops,
            distance_ops: self.distance_ops + o.distance_ops,
        }
    }
}

impl AddAssign for OperationCounts {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

thread_local! {
    static SINK: Cell<OperationCounts> = const { Cell::new(OperationCounts {
        element_comparisons: 0,
        element_accesses: 0,
        cursor_big_jumps: 0,
        cursor_other_ops: 0,
        distance_ops: 0,
    }) };
}

#[inline(always)]
fn record(f: impl FnOnce(&mut OperationCounts)) {
    SINK.with(|s| {
        let mut c = s.get();
        f(&mut c);
        s.set(c);
    });
}

/// Opens a fresh counting sink on this thread. Dropping the scope restores
/// the enclosing totals.
pub struct CountScope {
    saved: OperationCounts,
}

impl CountScope {
    pub fn new() -> Self {
        let saved = SINK.with(|s| s.replace(OperationCounts::default()));
        CountScope { saved }
    }

    /// Totals recorded so far in this scope.
    pub fn counts(&self) -> OperationCounts {
        SINK.with(|s| s.get())
    }

    pub fn finish(self) -> OperationCounts {
        self.counts()
    }
}

impl Default for CountScope {
    fn default() -> Self {
        Self::new()
    }
}

impl Drop for CountScope {
    fn drop(&mut self) {
        SINK.with(|s| s.set(self.saved));
    }
}

/// An element whose equality tests and hash reads are counted.
#[derive(Debug, Clone, Copy, Default)]
#[repr(transparent)]
pub struct Counted<T>(pub T);

impl<T> Counted<T> {
    /// Views a slice of elements as counted elements without copying.
    pub fn wrap_slice(s: &[T]) -> &[Counted<T>] {
        // SAFETY: Counted<T> is repr(transparent) over T, so the layouts of
        // [T] and [Counted<T>] are identical.
        unsafe { &*(s as *const [T] as *const [Counted<T>]) }
    }
}

impl<T: PartialEq> PartialEq for Counted<T> {
    #[inline]
    fn eq(&self, other: &Self) -> bool {
        record(|c| c.element_comparisons += 1);
        self.0 == other.0
    }
}

impl<T: ByteValue> ByteValue for Counted<T> {
    #[inline]
    fn byte(&self) -> u8 {
        record(|c| c.element_accesses += 1);
        self.0.byte()
    }
}

impl<T: WideSymbol> WideSymbol for Counted<T> {
    #[inline]
    fn symbol(&self) -> u16 {
        record(|c| c.element_accesses += 1);
        self.0.symbol()
    }
}

impl<T: WordHead> WordHead for Counted<T> {
    #[inline]
    fn head(&self) -> u8 {
        record(|c| c.element_accesses += 1);
        self.0.head()
    }
}

/// A signed offset whose arithmetic and comparisons are counted.
#[derive(Debug, Clone, Copy)]
pub struct CountedDistance(pub isize);

#[inline(always)]
fn distance_op() {
    record(|c| c.distance_ops += 1);
}

impl PartialEq for CountedDistance {
    fn eq(&self, other: &Self) -> bool {
        distance_op();
        self.0 == other.0
    }
}

impl Eq for CountedDistance {}

impl PartialOrd for CountedDistance {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CountedDistance {
    fn cmp(&self, other: &Self) -> Ordering {
        distance_op();
        self.0.cmp(&other.0)
    }
}

impl Add for CountedDistance {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        distance_op();
        CountedDistance(self.0 + o.0)
    }
}

impl Sub for CountedDistance {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        distance_op();
        CountedDistance(self.0 - o.0)
    }
}

impl AddAssign for CountedDistance {
    fn add_assign(&mut self, o: Self) {
        distance_op();
        self.0 += o.0;
    }
}

impl SubAssign for CountedDistance {
    fn sub_assign(&mut self, o: Self) {
        distance_op();
        self.0 -= o.0;
    }
}

impl Offset for CountedDistance {
    fn from_isize(v: isize) -> Self {
        CountedDistance(v)
    }
    fn to_isize(self) -> isize {
        self.0
    }
}

/// A cursor whose operations are counted. Displacements by more than one
/// element count as big jumps; everything else counts as an other op.
#[derive(Debug)]
pub struct CountingCursor<C>(C);

impl<C> CountingCursor<C> {
    pub fn new(inner: C) -> Self {
        CountingCursor(inner)
    }

    pub fn inner(&self) -> &C {
        &self.0
    }
}

#[inline(always)]
fn other_op() {
    record(|c| c.cursor_other_ops += 1);
}

#[inline(always)]
fn displacement(by: isize) {
    if by.unsigned_abs() > 1 {
        record(|c| c.cursor_big_jumps += 1);
    } else {
        other_op();
    }
}

impl<C: Clone> Clone for CountingCursor<C> {
    fn clone(&self) -> Self {
        other_op();
        CountingCursor(self.0.clone())
    }
}

impl<C: PartialEq> PartialEq for CountingCursor<C> {
    fn eq(&self, other: &Self) -> bool {
        other_op();
        self.0 == other.0
    }
}

impl<C: Cursor<Offset = isize>> Cursor for CountingCursor<C> {
    type Item = C::Item;
    type Offset = CountedDistance;

    fn get(&self) -> &C::Item {
        other_op();
        self.0.get()
    }

    fn step(&mut self) {
        other_op();
        self.0.step();
    }

    fn distance_to(&self, end: &Self) -> CountedDistance {
        distance_op();
        CountedDistance(self.0.distance_to(&end.0))
    }
}

impl<C: RandomCursor<Offset = isize>> RandomCursor for CountingCursor<C> {
    fn jump(&self, by: CountedDistance) -> Self {
        displacement(by.0);
        CountingCursor(self.0.jump(by.0))
    }

    fn at(&self, by: CountedDistance) -> &C::Item {
        displacement(by.0);
        self.0.at(by.0)
    }
}

/// Algorithms that can run instrumented.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CountedAlgorithm {
    Sf,
    Kmp,
    L,
    Hal,
}

impl CountedAlgorithm {
    pub fn name(self) -> &'static str {
        match self {
            CountedAlgorithm::Sf => "sf",
            CountedAlgorithm::Kmp => "kmp",
            CountedAlgorithm::L => "l",
            CountedAlgorithm::Hal => "hal",
        }
    }
}

impl fmt::Display for CountedAlgorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CountedAlgorithm {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "sf" => Ok(CountedAlgorithm::Sf),
            "kmp" => Ok(CountedAlgorithm::Kmp),
            "l" => Ok(CountedAlgorithm::L),
            "hal" => Ok(CountedAlgorithm::Hal),
            _ => Err(format!("unknown counted algorithm `{s}`")),
        }
    }
}

type Probe<'a, T> = CountingCursor<SliceCursor<'a, Counted<T>>>;

fn probe<T>(s: &[Counted<T>], at_end: bool) -> Probe<'_, T> {
    CountingCursor(if at_end {
        SliceCursor::end(s)
    } else {
        SliceCursor::begin(s)
    })
}

/// Runs `algorithm` with every operation counted, preprocessing included.
/// `scheme` is used only by HAL.
pub fn run_counted<T, S>(
    algorithm: CountedAlgorithm,
    text: &[T],
    pattern: &[T],
    scheme: &S,
) -> (SearchOutcome, OperationCounts)
where
    T: PartialEq,
    S: HashScheme<Counted<T>>,
{
    let t = Counted::wrap_slice(text);
    let p = Counted::wrap_slice(pattern);
    let scope = CountScope::new();
    let prepared = Prepared::new(algorithm, t, p, scheme);
    let position = prepared.run(t, p, scheme);
    let counts = scope.finish();
    (
        SearchOutcome {
            position,
            counts: Some(counts),
        },
        counts,
    )
}

/// Like [`run_counted`], but pattern preprocessing happens before counting
/// starts, so the counts cover the search phase alone.
pub fn run_counted_search_phase<T, S>(
    algorithm: CountedAlgorithm,
    text: &[T],
    pattern: &[T],
    scheme: &S,
) -> (SearchOutcome, OperationCounts)
where
    T: PartialEq,
    S: HashScheme<Counted<T>>,
{
    let t = Counted::wrap_slice(text);
    let p = Counted::wrap_slice(pattern);
    let prepared = {
        let _discard = CountScope::new();
        Prepared::new(algorithm, t, p, scheme)
    };
    let scope = CountScope::new();
    let position = prepared.run(t, p, scheme);
    let counts = scope.finish();
    (
        SearchOutcome {
            position,
            counts: Some(counts),
        },
        counts,
    )
}

enum Prepared<'a, T> {
    Done(Option<usize>),
    Sf,
    Kmp(NextTable),
    L(ForwardPatternIndex<Probe<'a, T>>),
    Find,
    Hal(NextTable, SkipTable),
}

impl<'a, T: PartialEq> Prepared<'a, T> {
    fn new<S: HashScheme<Counted<T>>>(
        algorithm: CountedAlgorithm,
        t: &'a [Counted<T>],
        p: &'a [Counted<T>],
        scheme: &S,
    ) -> Self {
        let (n, m) = (t.len(), p.len());
        if m == 0 {
            return Prepared::Done(Some(0));
        }
        if algorithm == CountedAlgorithm::Sf {
            return Prepared::Sf;
        }
        if n < m {
            return Prepared::Done(None);
        }
        let forward = || match compute_forward_index(probe(p, false), probe(p, true)) {
            Ok(index) => Prepared::L(index),
            Err(_) => Prepared::Done(Some(0)),
        };
        match algorithm {
            CountedAlgorithm::Kmp => match compute_next(p) {
                Ok(next) => Prepared::Kmp(next),
                Err(_) => Prepared::Done(Some(0)),
            },
            CountedAlgorithm::Hal => {
                let s = scheme.suffix_size();
                if m == 1 {
                    Prepared::Find
                } else if s == 0 || m < s || scheme.hash_range() == 0 {
                    forward()
                } else {
                    match (compute_next(p), compute_skip(p, scheme, n)) {
                        (Ok(next), Ok(skip)) => Prepared::Hal(next, skip),
                        _ => forward(),
                    }
                }
            }
            _ => forward(),
        }
    }

    fn run<S: HashScheme<Counted<T>>>(
        &self,
        t: &'a [Counted<T>],
        p: &'a [Counted<T>],
        scheme: &S,
    ) -> Option<usize> {
        let n = t.len();
        let end = probe(t, true);
        let found = match self {
            Prepared::Done(r) => return *r,
            Prepared::Sf => sf_search(probe(t, false), end, probe(p, false), probe(p, true)),
            Prepared::Kmp(next) => kmp_search(
                probe(t, false),
                CountedDistance(n as isize),
                probe(p, false),
                next,
            ),
            Prepared::L(index) => linear_search(probe(t, false), end, probe(p, true), index),
            Prepared::Find => find_element(probe(t, false), end, &p[0]),
            Prepared::Hal(next, skip) => {
                hal_search(probe(t, false), end, probe(p, false), next, skip, scheme)
            }
        };
        let pos = found.inner().position();
        (pos < n).then_some(pos)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hash::{ByteScheme, DnaScheme4};
    use crate::search::search_hal;

    #[test]
    fn scopes_nest_and_restore() {
        let outer = CountScope::new();
        let _ = Counted(1) == Counted(1);
        {
            let inner = CountScope::new();
            let _ = Counted(1) == Counted(2);
            let _ = Counted(1) == Counted(2);
            assert_eq!(inner.counts().element_comparisons, 2);
        }
        assert_eq!(outer.finish().element_comparisons, 1);
    }

    #[test]
    fn cursor_jumps_classified() {
        let data = [1u8, 2, 3, 4];
        let scope = CountScope::new();
        let c = CountingCursor::new(SliceCursor::begin(&data));
        let _ = c.at(CountedDistance(1));
        let _ = c.at(CountedDistance(3));
        let counts = scope.finish();
        assert_eq!(counts.cursor_big_jumps, 1);
        assert_eq!(counts.cursor_other_ops, 1);
    }

    #[test]
    fn counted_outcomes_match_uncounted() {
        let text = b"gattacagattacaccgatgattaca";
        for m in 1..8 {
            for start in 0..text.len() - m {
                let pat = &text[start..start + m];
                let plain = search_hal(text, pat, &DnaScheme4);
                for alg in [
                    CountedAlgorithm::Sf,
                    CountedAlgorithm::Kmp,
                    CountedAlgorithm::L,
                    CountedAlgorithm::Hal,
                ] {
                    let (o, _) = run_counted(alg, text, pat, &DnaScheme4);
                    assert_eq!(o.position, plain, "{alg} {:?}", pat);
                }
            }
        }
        let (o, _) = run_counted(CountedAlgorithm::Hal, text, b"zzz", &ByteScheme);
        assert_eq!(o.position, None);
    }

    #[test]
    fn sf_compares_at_least_once_per_alignment() {
        let text = vec![b'a'; 500];
        let (o, c) = run_counted(CountedAlgorithm::Sf, &text, b"xyz", &ByteScheme);
        assert_eq!(o.position, None);
        assert!(c.element_comparisons >= 498);
    }
}
