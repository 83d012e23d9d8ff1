//! Cursor abstractions the search algorithms are written against.
//!
//! A [`Cursor`] is a forward, single-step position in a sequence: it can be
//! dereferenced, advanced by one, copied, and compared with another cursor
//! over the same sequence. A [`RandomCursor`] additionally supports
//! constant-time displacement by an arbitrary signed [`Offset`].
//!
//! Algorithm L only needs [`Cursor`]; the skip-loop algorithms need
//! [`RandomCursor`]. Every algorithm does its loop arithmetic in the cursor's
//! own `Offset` type, which is what lets the counting wrappers in
//! [`crate::count`] observe distance arithmetic without touching the
//! algorithm code.

use std::fmt::Debug;
use std::ops::{Add, AddAssign, Sub, SubAssign};

/// Signed distance type used for loop indices and shifts.
///
/// Skip-loop indices run negative (the text index is translated by `-n`), so
/// this is always signed.
pub trait Offset:
    Copy + Ord + Debug + Add<Output = Self> + Sub<Output = Self> + AddAssign + SubAssign
{
    fn from_isize(v: isize) -> Self;
    fn to_isize(self) -> isize;

    #[inline]
    fn from_usize(v: usize) -> Self {
        Self::from_isize(v as isize)
    }

    /// The value as an index. Callers guarantee it is non-negative.
    #[inline]
    fn index(self) -> usize {
        self.to_isize() as usize
    }
}

impl Offset for isize {
    #[inline(always)]
    fn from_isize(v: isize) -> Self {
        v
    }
    #[inline(always)]
    fn to_isize(self) -> isize {
        self
    }
}

/// A forward, single-pass-copyable position in a sequence.
///
/// Two cursors compare equal when they designate the same position of the
/// same sequence; the end cursor compares equal only to other end cursors.
pub trait Cursor: Clone + PartialEq {
    type Item;
    type Offset: Offset;

    /// The element at this position. Must not be called on an end cursor.
    fn get(&self) -> &Self::Item;

    /// Advance by one element.
    fn step(&mut self);

    /// Number of steps from `self` to `end`.
    fn distance_to(&self, end: &Self) -> Self::Offset {
        let mut c = self.clone();
        let mut n = 0isize;
        while c != *end {
            c.step();
            n += 1;
        }
        Self::Offset::from_isize(n)
    }
}

/// A cursor with constant-time displacement.
pub trait RandomCursor: Cursor {
    /// The cursor `by` elements away (`by` may be negative).
    fn jump(&self, by: Self::Offset) -> Self;

    /// The element `by` positions away, without building a new cursor.
    fn at(&self, by: Self::Offset) -> &Self::Item;
}

/// Random-access cursor over a slice.
#[derive(Debug)]
pub struct SliceCursor<'a, T> {
    data: &'a [T],
    pos: usize,
}

impl<'a, T> SliceCursor<'a, T> {
    pub fn begin(data: &'a [T]) -> Self {
        SliceCursor { data, pos: 0 }
    }

    pub fn end(data: &'a [T]) -> Self {
        SliceCursor {
            data,
            pos: data.len(),
        }
    }

    /// Offset of this cursor from the start of the slice.
    pub fn position(&self) -> usize {
        self.pos
    }
}

impl<T> Clone for SliceCursor<'_, T> {
    #[inline(always)]
    fn clone(&self) -> Self {
        *self
    }
}

impl<T> Copy for SliceCursor<'_, T> {}

impl<T> PartialEq for SliceCursor<'_, T> {
    #[inline(always)]
    fn eq(&self, other: &Self) -> bool {
        debug_assert!(std::ptr::eq(self.data, other.data));
        self.pos == other.pos
    }
}

impl<T> Cursor for SliceCursor<'_, T> {
    type Item = T;
    type Offset = isize;

    #[inline(always)]
    fn get(&self) -> &T {
        &self.data[self.pos]
    }

    #[inline(always)]
    fn step(&mut self) {
        self.pos += 1;
    }

    #[inline(always)]
    fn distance_to(&self, end: &Self) -> isize {
        end.pos as isize - self.pos as isize
    }
}

impl<T> RandomCursor for SliceCursor<'_, T> {
    #[inline(always)]
    fn jump(&self, by: isize) -> Self {
        SliceCursor {
            data: self.data,
            pos: (self.pos as isize + by) as usize,
        }
    }

    #[inline(always)]
    fn at(&self, by: isize) -> &T {
        &self.data[(self.pos as isize + by) as usize]
    }
}

/// Forward-only cursor over any cloneable iterator of references.
///
/// This is the cursor to use for sequences without random access, such as a
/// `LinkedList` or a filtered view. Cloning the cursor clones the iterator,
/// so it should be cheap to clone.
pub struct IterCursor<'a, I, T> {
    iter: I,
    current: Option<&'a T>,
    index: usize,
}

impl<'a, I, T> IterCursor<'a, I, T>
where
    I: Iterator<Item = &'a T> + Clone,
{
    pub fn new(mut iter: I) -> Self {
        let current = iter.next();
        IterCursor {
            iter,
            current,
            index: 0,
        }
    }

    /// The past-the-end cursor for the sequence this cursor walks.
    pub fn end(&self) -> Self {
        IterCursor {
            iter: self.iter.clone(),
            current: None,
            index: usize::MAX,
        }
    }

    /// Number of elements consumed before this position.
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn is_end(&self) -> bool {
        self.current.is_none()
    }
}

impl<I: Clone, T> Clone for IterCursor<'_, I, T> {
    fn clone(&self) -> Self {
        IterCursor {
            iter: self.iter.clone(),
            current: self.current,
            index: self.index,
        }
    }
}

impl<I, T> PartialEq for IterCursor<'_, I, T> {
    fn eq(&self, other: &Self) -> bool {
        match (self.current, other.current) {
            (None, None) => true,
            (Some(_), Some(_)) => self.index == other.index,
            _ => false,
        }
    }
}

impl<'a, I, T> Cursor for IterCursor<'a, I, T>
where
    I: Iterator<Item = &'a T> + Clone,
{
    type Item = T;
    type Offset = isize;

    fn get(&self) -> &T {
        self.current.expect("dereferenced an end cursor")
    }

    fn step(&mut self) {
        self.current = self.iter.next();
        self.index += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::LinkedList;

    #[test]
    fn slice_cursor_arithmetic() {
        let data = [10, 20, 30, 40];
        let end = SliceCursor::end(&data);
        let begin = SliceCursor::begin(&data);
        assert_eq!(begin.distance_to(&end), 4);
        assert_eq!(*end.at(-1), 40);
        assert_eq!(*begin.jump(2).get(), 30);
        assert_eq!(end.jump(-4), begin);
    }

    #[test]
    fn iter_cursor_walks_a_list() {
        let list: LinkedList<char> = "abc".chars().collect();
        let mut c = IterCursor::new(list.iter());
        let end = c.end();
        assert_eq!(c.distance_to(&end), 3);
        assert_eq!(*c.get(), 'a');
        c.step();
        c.step();
        assert_eq!(*c.get(), 'c');
        c.step();
        assert!(c == end);
    }

    #[test]
    fn iter_cursor_empty_sequence_is_end() {
        let list: LinkedList<u8> = LinkedList::new();
        let c = IterCursor::new(list.iter());
        assert!(c == c.end());
    }
}
