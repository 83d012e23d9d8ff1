//! Hash schemes for the skip loop.
//!
//! A [`HashScheme`] maps the window of `suffix_size` elements ending at a
//! probed position to a bucket in `0..hash_range`. The skip table is indexed
//! by bucket, so a scheme with a small range keeps the table in cache while a
//! scheme reading several elements sharpens the shifts on small alphabets.
//!
//! Schemes must be compatible with element equality: equal windows always
//! hash to the same bucket. Collisions are harmless, they only shorten shifts.
//!
//! ```
//! use seqsearch::{hash_window, DnaScheme4, ByteScheme};
//!
//! assert_eq!(hash_window(&DnaScheme4, b"aaaa", 3).unwrap(), 53);
//! assert_eq!(hash_window(&ByteScheme, b"x", 0).unwrap(), 120);
//! assert!(hash_window(&DnaScheme4, b"aaaa", 2).is_err());
//! ```

use std::fmt;
use std::str::FromStr;

use crate::cursor::{Offset, RandomCursor, SliceCursor};
use crate::error::MatchError;

/// Elements whose hash input is a single byte.
pub trait ByteValue {
    fn byte(&self) -> u8;
}

/// Elements drawn from a 16-bit symbol alphabet.
pub trait WideSymbol {
    fn symbol(&self) -> u16;
}

/// Word-like elements, hashed by their leading byte.
pub trait WordHead {
    fn head(&self) -> u8;
}

impl ByteValue for u8 {
    #[inline(always)]
    fn byte(&self) -> u8 {
        *self
    }
}

impl ByteValue for i8 {
    #[inline(always)]
    fn byte(&self) -> u8 {
        *self as u8
    }
}

impl WideSymbol for u8 {
    #[inline(always)]
    fn symbol(&self) -> u16 {
        *self as u16
    }
}

impl WideSymbol for u16 {
    #[inline(always)]
    fn symbol(&self) -> u16 {
        *self
    }
}

impl WordHead for String {
    fn head(&self) -> u8 {
        self.as_bytes().first().copied().unwrap_or(0)
    }
}

impl WordHead for &str {
    fn head(&self) -> u8 {
        self.as_bytes().first().copied().unwrap_or(0)
    }
}

/// A bucket function over trailing windows of a sequence.
pub trait HashScheme<T> {
    /// Number of buckets; hashes lie in `0..hash_range()`.
    fn hash_range(&self) -> usize;

    /// Number of trailing elements read per probe.
    fn suffix_size(&self) -> usize;

    /// Hash of the window ending at `base + k`, reading `base + k - s + 1`
    /// through `base + k`.
    fn hash<C: RandomCursor<Item = T>>(&self, base: &C, k: C::Offset) -> usize;
}

/// Identity hash on bytes.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ByteScheme;

impl<T: ByteValue> HashScheme<T> for ByteScheme {
    fn hash_range(&self) -> usize {
        256
    }
    fn suffix_size(&self) -> usize {
        1
    }
    #[inline(always)]
    fn hash<C: RandomCursor<Item = T>>(&self, base: &C, k: C::Offset) -> usize {
        base.at(k).byte() as usize
    }
}

#[inline(always)]
fn back<C: RandomCursor>(base: &C, k: C::Offset, d: isize) -> u32
where
    C::Item: ByteValue,
{
    base.at(k - C::Offset::from_isize(d)).byte() as u32
}

/// Two-element DNA hash into 64 buckets.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DnaScheme2;

impl<T: ByteValue> HashScheme<T> for DnaScheme2 {
    fn hash_range(&self) -> usize {
        64
    }
    fn suffix_size(&self) -> usize {
        2
    }
    #[inline(always)]
    fn hash<C: RandomCursor<Item = T>>(&self, base: &C, k: C::Offset) -> usize {
        let h = back(base, k, 1).wrapping_add(back(base, k, 0) << 3);
        (h & 63) as usize
    }
}

/// Three-element DNA hash into 512 buckets.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DnaScheme3;

impl<T: ByteValue> HashScheme<T> for DnaScheme3 {
    fn hash_range(&self) -> usize {
        512
    }
    fn suffix_size(&self) -> usize {
        3
    }
    #[inline(always)]
    fn hash<C: RandomCursor<Item = T>>(&self, base: &C, k: C::Offset) -> usize {
        let h = back(base, k, 2)
            .wrapping_add(back(base, k, 1) << 3)
            .wrapping_add(back(base, k, 0) << 6);
        (h & 511) as usize
    }
}

/// Four-element DNA hash into 256 buckets.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DnaScheme4;

impl<T: ByteValue> HashScheme<T> for DnaScheme4 {
    fn hash_range(&self) -> usize {
        256
    }
    fn suffix_size(&self) -> usize {
        4
    }
    #[inline(always)]
    fn hash<C: RandomCursor<Item = T>>(&self, base: &C, k: C::Offset) -> usize {
        let h = back(base, k, 3)
            .wrapping_add(back(base, k, 2) << 2)
            .wrapping_add(back(base, k, 1) << 4)
            .wrapping_add(back(base, k, 0) << 6);
        (h & 255) as usize
    }
}

/// Five-element DNA hash into 256 buckets.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DnaScheme5;

impl<T: ByteValue> HashScheme<T> for DnaScheme5 {
    fn hash_range(&self) -> usize {
        256
    }
    fn suffix_size(&self) -> usize {
        5
    }
    #[inline(always)]
    fn hash<C: RandomCursor<Item = T>>(&self, base: &C, k: C::Offset) -> usize {
        let h = back(base, k, 4)
            .wrapping_add(back(base, k, 3) << 2)
            .wrapping_add(back(base, k, 2) << 4)
            .wrapping_add(back(base, k, 1) << 6)
            .wrapping_add(back(base, k, 0) << 8);
        (h & 255) as usize
    }
}

/// Low byte of a 16-bit symbol.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Mod256Scheme;

impl<T: WideSymbol> HashScheme<T> for Mod256Scheme {
    fn hash_range(&self) -> usize {
        256
    }
    fn suffix_size(&self) -> usize {
        1
    }
    #[inline(always)]
    fn hash<C: RandomCursor<Item = T>>(&self, base: &C, k: C::Offset) -> usize {
        (base.at(k).symbol() & 255) as usize
    }
}

/// First byte of a word.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct WordHeadScheme;

impl<T: WordHead> HashScheme<T> for WordHeadScheme {
    fn hash_range(&self) -> usize {
        256
    }
    fn suffix_size(&self) -> usize {
        1
    }
    #[inline(always)]
    fn hash<C: RandomCursor<Item = T>>(&self, base: &C, k: C::Offset) -> usize {
        base.at(k).head() as usize
    }
}

/// Scheme for element types with no useful hash. Searches using it fall back
/// to the linear algorithm.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ZeroScheme;

impl<T> HashScheme<T> for ZeroScheme {
    fn hash_range(&self) -> usize {
        0
    }
    fn suffix_size(&self) -> usize {
        0
    }
    fn hash<C: RandomCursor<Item = T>>(&self, _base: &C, _k: C::Offset) -> usize {
        0
    }
}

/// Hash of the window of `seq` ending at `position`.
pub fn hash_window<T, S: HashScheme<T>>(
    scheme: &S,
    seq: &[T],
    position: usize,
) -> Result<usize, MatchError> {
    let s = scheme.suffix_size();
    if position + 1 < s || position >= seq.len() {
        return Err(MatchError::WindowUnderflow {
            position,
            suffix_size: s,
        });
    }
    Ok(scheme.hash(&SliceCursor::begin(seq), position as isize))
}

/// Element types with a default scheme, used when no scheme is supplied.
pub trait SearchElement: PartialEq + Sized {
    type Scheme: HashScheme<Self> + Default;
}

impl SearchElement for u8 {
    type Scheme = ByteScheme;
}

impl SearchElement for u16 {
    type Scheme = Mod256Scheme;
}

impl SearchElement for String {
    type Scheme = WordHeadScheme;
}

impl SearchElement for &str {
    type Scheme = WordHeadScheme;
}

impl SearchElement for char {
    type Scheme = ZeroScheme;
}

impl SearchElement for u32 {
    type Scheme = ZeroScheme;
}

impl SearchElement for i32 {
    type Scheme = ZeroScheme;
}

impl SearchElement for u64 {
    type Scheme = ZeroScheme;
}

/// The built-in schemes by name, for configuration and command lines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BuiltinScheme {
    Byte,
    Dna2,
    Dna3,
    Dna4,
    Dna5,
    Mod256,
    WordHead,
    Zero,
}

impl BuiltinScheme {
    pub const ALL: [BuiltinScheme; 8] = [
        BuiltinScheme::Byte,
        BuiltinScheme::Dna2,
        BuiltinScheme::Dna3,
        BuiltinScheme::Dna4,
        BuiltinScheme::Dna5,
        BuiltinScheme::Mod256,
        BuiltinScheme::WordHead,
        BuiltinScheme::Zero,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BuiltinScheme::Byte => "byte",
            BuiltinScheme::Dna2 => "dna2",
            BuiltinScheme::Dna3 => "dna3",
            BuiltinScheme::Dna4 => "dna4",
            BuiltinScheme::Dna5 => "dna5",
            BuiltinScheme::Mod256 => "mod256",
            BuiltinScheme::WordHead => "wordhead",
            BuiltinScheme::Zero => "zero",
        }
    }
}

impl fmt::Display for BuiltinScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BuiltinScheme {
    type Err = MatchError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BuiltinScheme::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| MatchError::InvalidScheme(format!("unknown scheme `{s}`")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dna4_on_repeated_a() {
        let expect = (97 + 97 * 4 + 97 * 16 + 97 * 64) % 256;
        assert_eq!(hash_window(&DnaScheme4, b"aaaa", 3).unwrap(), expect);
        assert_eq!(expect, 53);
    }

    #[test]
    fn dna_schemes_match_shift_sums() {
        let t = b"acgtacgt";
        let v = |i: usize| t[i] as u32;
        for i in 4..t.len() {
            assert_eq!(
                hash_window(&DnaScheme2, t, i).unwrap() as u32,
                (v(i - 1) + (v(i) << 3)) & 63
            );
            assert_eq!(
                hash_window(&DnaScheme3, t, i).unwrap() as u32,
                (v(i - 2) + (v(i - 1) << 3) + (v(i) << 6)) & 511
            );
            assert_eq!(
                hash_window(&DnaScheme5, t, i).unwrap() as u32,
                (v(i - 4) + (v(i - 3) << 2) + (v(i - 2) << 4) + (v(i - 1) << 6) + (v(i) << 8))
                    & 255
            );
        }
    }

    #[test]
    fn mod256_takes_low_byte() {
        assert_eq!(hash_window(&Mod256Scheme, &[0x1234u16], 0).unwrap(), 0x34);
    }

    #[test]
    fn word_head() {
        let words = ["the".to_string(), "quick".to_string()];
        assert_eq!(
            hash_window(&WordHeadScheme, &words, 1).unwrap(),
            b'q' as usize
        );
    }

    #[test]
    fn window_underflow() {
        assert_eq!(
            hash_window(&DnaScheme5, b"acgtacgt", 3),
            Err(MatchError::WindowUnderflow {
                position: 3,
                suffix_size: 5
            })
        );
    }

    #[test]
    fn scheme_names_round_trip() {
        for b in BuiltinScheme::ALL {
            assert_eq!(b.name().parse::<BuiltinScheme>().unwrap(), b);
        }
        assert!("dna9".parse::<BuiltinScheme>().is_err());
    }
}
