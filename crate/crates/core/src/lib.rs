//! Exact sequence search with KMP-style worst-case guarantees and
//! Boyer-Moore-style skip loops.
//!
//! The algorithms work over any element type with equality. Sequences that
//! only support forward traversal are searched with Algorithm L, which makes
//! at most `2n` element comparisons. Random-access sequences are searched
//! with HAL, which adds a hashed skip loop that usually inspects only a
//! fraction of the text while keeping the same comparison bound.
//!
//! ```
//! use seqsearch::{search, search_hal, DnaScheme4};
//!
//! assert_eq!(search(b"Now's the time", b"time"), Some(10));
//!
//! let dna = b"ttgacgtacgtagctagctagcatcgatcgactagcatcgacgatcga";
//! assert_eq!(search_hal(dna, b"agcatcgatcga", &DnaScheme4), Some(19));
//! ```

pub mod count;
pub mod cursor;
mod error;
pub mod hash;
pub mod next;
pub mod search;
pub mod skip;

pub use count::{
    run_counted, run_counted_search_phase, CountScope, Counted, CountedAlgorithm, CountedDistance,
    CountingCursor, OperationCounts, OperationRates,
};
pub use cursor::{Cursor, IterCursor, Offset, RandomCursor, SliceCursor};
pub use error::MatchError;
pub use hash::{
    hash_window, BuiltinScheme, ByteScheme, ByteValue, DnaScheme2, DnaScheme3, DnaScheme4,
    DnaScheme5, HashScheme, Mod256Scheme, SearchElement, WideSymbol, WordHead, WordHeadScheme,
    ZeroScheme,
};
pub use next::{compute_forward_index, compute_next, ForwardPatternIndex, NextTable};
pub use search::{
    dispatch_search, dispatch_search_with, search, search_al, search_forward, search_hal,
    search_kmp_basic, search_l, search_nhal, search_sf, Capability, SearchOutcome, SkewedSkipTable,
};
pub use skip::{compute_skip, SkipTable};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/cursors.md")]
    mod cursors {}
    #[doc = include_str!("../../../book/src/next-table.md")]
    mod next_table {}
    #[doc = include_str!("../../../book/src/skip-loop.md")]
    mod skip_loop {}
    #[doc = include_str!("../../../book/src/hashing.md")]
    mod hashing {}
    #[doc = include_str!("../../../book/src/large-alphabets.md")]
    mod large_alphabets {}
    #[doc = include_str!("../../../book/src/counting.md")]
    mod counting {}
}
