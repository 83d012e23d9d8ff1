//! Search algorithms and the capability-based dispatcher.
//!
//! Every slice-level function returns the offset of the first match or
//! `None`. An empty pattern matches at offset 0.

mod hal;
mod kmp;
mod linear;
mod nhal;
mod sf;

pub use hal::{accelerated_search, hal_search, search_al, search_hal, LoopConstants};
pub use kmp::{kmp_search, search_kmp_basic};
pub use linear::{find_element, linear_search, search_forward, search_l};
pub use nhal::{nhal_search, search_nhal, LoadedPattern, SkewedSkipTable};
pub use sf::{search_sf, sf_search};

use crate::count::OperationCounts;
use crate::cursor::SliceCursor;
use crate::hash::{HashScheme, SearchElement};

/// Result of a search: the first match offset, plus operation counts when
/// the search ran instrumented.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchOutcome {
    pub position: Option<usize>,
    pub counts: Option<OperationCounts>,
}

impl SearchOutcome {
    pub fn found(position: Option<usize>) -> Self {
        SearchOutcome {
            position,
            counts: None,
        }
    }
}

/// How a sequence may be traversed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Capability {
    Forward,
    Bidirectional,
    RandomAccess,
}

/// Picks Algorithm L for forward and bidirectional sequences and HAL with
/// `scheme` for random-access ones.
pub fn dispatch_search_with<T, S>(
    text: &[T],
    pattern: &[T],
    capability: Capability,
    scheme: &S,
) -> SearchOutcome
where
    T: PartialEq,
    S: HashScheme<T>,
{
    let position = match capability {
        Capability::Forward | Capability::Bidirectional => {
            if pattern.is_empty() {
                Some(0)
            } else {
                let end = SliceCursor::end(text);
                let found = search_forward(
                    SliceCursor::begin(text),
                    end,
                    SliceCursor::begin(pattern),
                    SliceCursor::end(pattern),
                );
                (found != end).then(|| found.position())
            }
        }
        Capability::RandomAccess => search_hal(text, pattern, scheme),
    };
    SearchOutcome::found(position)
}

/// [`dispatch_search_with`] using the element type's default scheme.
///
/// ```
/// use seqsearch::{dispatch_search, Capability};
///
/// let hit = dispatch_search(&b"hello world"[..], b"world", Capability::RandomAccess);
/// assert_eq!(hit.position, Some(6));
/// ```
pub fn dispatch_search<T: SearchElement>(
    text: &[T],
    pattern: &[T],
    capability: Capability,
) -> SearchOutcome {
    dispatch_search_with(text, pattern, capability, &T::Scheme::default())
}

/// First occurrence of `pattern` in `text` using the fastest applicable
/// algorithm for the element type.
///
/// ```
/// assert_eq!(seqsearch::search(b"needle in a haystack", b"hay"), Some(12));
/// ```
pub fn search<T: SearchElement>(text: &[T], pattern: &[T]) -> Option<usize> {
    search_hal(text, pattern, &T::Scheme::default())
}
