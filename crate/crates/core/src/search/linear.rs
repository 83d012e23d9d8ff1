//! Algorithm L: KMP restructured so the common case is a tight scan for the
//! first pattern element, needing only forward single steps over the text.

use crate::cursor::{Cursor, Offset, SliceCursor};
use crate::next::{compute_forward_index, ForwardPatternIndex};

/// First position in `text..end` whose element equals `value`, or `end`.
pub fn find_element<T>(mut text: T, end: T, value: &T::Item) -> T
where
    T: Cursor,
    T::Item: PartialEq,
{
    while text != end && *text.get() != *value {
        text.step();
    }
    text
}

/// Searches `text..end` for the pattern described by `index`, whose last
/// position is followed by `pattern_end`. Returns the match or `end`.
pub fn linear_search<T, P>(mut text: T, end: T, pattern_end: P, index: &ForwardPatternIndex<P>) -> T
where
    T: Cursor,
    P: Cursor<Item = T::Item, Offset = T::Offset>,
    T::Item: PartialEq,
{
    let zero = T::Offset::from_isize(0);
    let one = T::Offset::from_isize(1);
    let positions = index.positions();
    let next = index.next();
    let m = positions.len();
    let first = &positions[0];
    if m == 1 {
        return find_element(text, end, first.get());
    }
    let p1 = &positions[1];
    while text != end {
        while *text.get() != *first.get() {
            text.step();
            if text == end {
                return end;
            }
        }
        let mut p = p1.clone();
        let mut j = one;
        let mut hold = text.clone();
        text.step();
        if text == end {
            return end;
        }
        while *text.get() == *p.get() {
            p.step();
            if p == pattern_end {
                return hold;
            }
            text.step();
            if text == end {
                return end;
            }
            j += one;
        }
        loop {
            j = T::Offset::from_isize(next.get(j.index()));
            if j < zero {
                text.step();
                break;
            }
            if j == zero {
                break;
            }
            p = positions[j.index()].clone();
            while *text.get() == *p.get() {
                text.step();
                p.step();
                j += one;
                if p == pattern_end {
                    let mut advance = hold.clone();
                    for _ in 0..m {
                        advance.step();
                    }
                    while advance != text {
                        advance.step();
                        hold.step();
                    }
                    return hold;
                }
                if text == end {
                    return end;
                }
            }
        }
    }
    end
}

/// Algorithm L over slices.
///
/// ```
/// use seqsearch::search_l;
///
/// let text = b"Now's the time for all good men and women to come to the aid of their country.";
/// assert_eq!(search_l(text, b"time"), Some(10));
/// assert_eq!(search_l(text, b"timid"), None);
/// ```
pub fn search_l<T: PartialEq>(text: &[T], pattern: &[T]) -> Option<usize> {
    if pattern.is_empty() {
        return Some(0);
    }
    if text.len() < pattern.len() {
        return None;
    }
    let index =
        compute_forward_index(SliceCursor::begin(pattern), SliceCursor::end(pattern)).ok()?;
    let end = SliceCursor::end(text);
    let found = linear_search(
        SliceCursor::begin(text),
        end,
        SliceCursor::end(pattern),
        &index,
    );
    (found != end).then(|| found.position())
}

/// Algorithm L over any forward cursors. Returns the cursor at the first
/// match, or `text_end`. An empty pattern matches at `text`.
///
/// ```
/// use std::collections::LinkedList;
/// use seqsearch::{search_forward, IterCursor};
///
/// let text: LinkedList<u8> = b"look at this list".iter().copied().collect();
/// let pattern: LinkedList<u8> = b"this".iter().copied().collect();
/// let t = IterCursor::new(text.iter());
/// let p = IterCursor::new(pattern.iter());
/// let (t_end, p_end) = (t.end(), p.end());
/// assert_eq!(search_forward(t, t_end, p, p_end).index(), 8);
/// ```
pub fn search_forward<T, P>(text: T, text_end: T, pattern: P, pattern_end: P) -> T
where
    T: Cursor,
    P: Cursor<Item = T::Item, Offset = T::Offset>,
    T::Item: PartialEq,
{
    match compute_forward_index(pattern, pattern_end.clone()) {
        Ok(index) => linear_search(text, text_end, pattern_end, &index),
        Err(_) => text,
    }
}
