mod common;

use common::{naive, random_case, small_cases};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use seqsearch::*;

fn all_byte_algorithms(
    text: &[u8],
    pattern: &[u8],
    table: &mut SkewedSkipTable,
) -> Vec<(&'static str, Option<usize>)> {
    vec![
        ("sf", search_sf(text, pattern)),
        ("kmp", search_kmp_basic(text, pattern)),
        ("l", search_l(text, pattern)),
        ("al", search_al(text, pattern)),
        ("hal-dna2", search_hal(text, pattern, &DnaScheme2)),
        ("hal-dna3", search_hal(text, pattern, &DnaScheme3)),
        ("hal-dna4", search_hal(text, pattern, &DnaScheme4)),
        ("hal-dna5", search_hal(text, pattern, &DnaScheme5)),
        ("hal-mod256", search_hal(text, pattern, &Mod256Scheme)),
        ("hal-zero", search_hal(text, pattern, &ZeroScheme)),
        ("nhal", search_nhal(text, pattern, table)),
        ("dispatch", search(text, pattern)),
    ]
}

#[test]
fn small_file_triples() {
    let mut table = SkewedSkipTable::new();
    for (text, pattern, expected) in small_cases() {
        assert_eq!(naive(text.as_bytes(), pattern.as_bytes()), expected);
        for (name, got) in all_byte_algorithms(text.as_bytes(), pattern.as_bytes(), &mut table) {
            assert_eq!(got, expected, "{name} on {pattern:?}");
        }
    }
}

#[test]
fn shift_illustration_strings() {
    for text in ["uuuuuuuuuua", "uuuuuuuuuue"] {
        assert_eq!(search_al(text.as_bytes(), b"bcdabcdabcd"), None);
        assert_eq!(
            search_hal(text.as_bytes(), b"bcdabcdabcd", &ByteScheme),
            None
        );
    }
}

#[test]
fn random_pairs_match_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut table = SkewedSkipTable::new();
    for sigma in [2u16, 4, 26, 256] {
        for _ in 0..1500 {
            let (text, pattern) = random_case(&mut rng, sigma, 300, 24);
            let expected = naive(&text, &pattern);
            for (name, got) in all_byte_algorithms(&text, &pattern, &mut table) {
                assert_eq!(
                    got, expected,
                    "{name} sigma={sigma} text={text:?} pattern={pattern:?}"
                );
            }
        }
    }
    assert!(table.is_clear());
}

#[test]
fn empty_and_oversized_patterns() {
    let mut table = SkewedSkipTable::new();
    for (name, got) in all_byte_algorithms(b"abc", b"", &mut table) {
        assert_eq!(got, Some(0), "{name}");
    }
    for (name, got) in all_byte_algorithms(b"", b"", &mut table) {
        assert_eq!(got, Some(0), "{name}");
    }
    for (name, got) in all_byte_algorithms(b"ab", b"abc", &mut table) {
        assert_eq!(got, None, "{name}");
    }
    for (name, got) in all_byte_algorithms(b"abc", b"abc", &mut table) {
        assert_eq!(got, Some(0), "{name}");
    }
}

#[test]
fn wide_symbols_and_nhal_table_reuse() {
    use rand::Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let text: Vec<u16> = (0..5000).map(|_| rng.random()).collect();
    let mut table = SkewedSkipTable::new();
    for m in [2usize, 3, 6, 10, 18] {
        for _ in 0..40 {
            let at = rng.random_range(0..=text.len() - m);
            let pattern = &text[at..at + m];
            let expected = naive(&text, pattern);
            assert_eq!(search_nhal(&text, pattern, &mut table), expected);
            assert_eq!(search_hal(&text, pattern, &Mod256Scheme), expected);
            assert!(table.is_clear());
        }
    }
    let a = [1u16, 2, 4];
    let b = [3u16, 2, 1];
    let text = [9u16, 3, 2, 1, 2, 3];
    assert_eq!(search_nhal(&text, &a, &mut table), None);
    assert_eq!(search_nhal(&text, &b, &mut table), Some(1));
}

#[test]
fn word_sequences() {
    let words: Vec<String> = "the cat sat on the mat and the cat ran"
        .split_whitespace()
        .map(String::from)
        .collect();
    let pattern: Vec<String> = ["the", "cat", "ran"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    assert_eq!(search(&words, &pattern), Some(7));
    assert_eq!(search_hal(&words, &pattern, &WordHeadScheme), Some(7));
    assert_eq!(search_l(&words, &pattern), Some(7));
}

#[test]
fn dispatch_by_capability() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..300 {
        let (text, pattern) = random_case(&mut rng, 4, 200, 12);
        let expected = naive(&text, &pattern);
        for cap in [
            Capability::Forward,
            Capability::Bidirectional,
            Capability::RandomAccess,
        ] {
            assert_eq!(dispatch_search(&text, &pattern, cap).position, expected);
            assert_eq!(
                dispatch_search_with(&text, &pattern, cap, &ZeroScheme).position,
                expected
            );
            assert_eq!(
                dispatch_search_with(&text, &pattern, cap, &DnaScheme3).position,
                expected
            );
        }
    }
    let chars: Vec<char> = "generic fallback".chars().collect();
    let pat: Vec<char> = "fall".chars().collect();
    assert_eq!(
        dispatch_search(&chars, &pat, Capability::RandomAccess).position,
        Some(8)
    );
}

#[test]
fn forward_cursor_over_linked_list() {
    use std::collections::LinkedList;
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let (text, pattern) = random_case(&mut rng, 3, 120, 8);
        let t: LinkedList<u8> = text.iter().copied().collect();
        let p: LinkedList<u8> = pattern.iter().copied().collect();
        let tc = IterCursor::new(t.iter());
        let pc = IterCursor::new(p.iter());
        let (te, pe) = (tc.end(), pc.end());
        let found = search_forward(tc, te, pc, pe);
        let got = (!found.is_end()).then(|| found.index());
        assert_eq!(got, naive(&text, &pattern));
    }
}
