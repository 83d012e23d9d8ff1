//! The straightforward algorithm: try every alignment, comparing forward.

use crate::cursor::{Cursor, Offset, SliceCursor};

/// Returns the first position in `first1..last1` where `first2..last2`
/// occurs, or `last1`.
pub fn sf_search<T, P>(mut first1: T, last1: T, first2: P, last2: P) -> T
where
    T: Cursor,
    P: Cursor<Item = T::Item, Offset = T::Offset>,
    T::Item: PartialEq,
{
    let mut d1 = first1.distance_to(&last1);
    let d2 = first2.distance_to(&last2);
    if d1 < d2 {
        return last1;
    }
    let mut current1 = first1.clone();
    let mut current2 = first2.clone();
    while current2 != last2 {
        if *current1.get() == *current2.get() {
            current1.step();
            current2.step();
        } else {
            if d1 == d2 {
                return last1;
            }
            first1.step();
            current1 = first1.clone();
            current2 = first2.clone();
            d1 -= T::Offset::from_isize(1);
        }
    }
    first1
}

/// Straightforward search over slices.
///
/// ```
/// use seqsearch::search_sf;
///
/// assert_eq!(search_sf(b"aaaaaaabcabcadefg", b"abcad"), Some(9));
/// assert_eq!(search_sf(b"abc", b"abd"), None);
/// ```
pub fn search_sf<T: PartialEq>(text: &[T], pattern: &[T]) -> Option<usize> {
    let end = SliceCursor::end(text);
    let found = sf_search(
        SliceCursor::begin(text),
        end,
        SliceCursor::begin(pattern),
        SliceCursor::end(pattern),
    );
    (found != end || pattern.is_empty()).then(|| found.position())
}
