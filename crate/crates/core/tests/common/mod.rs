#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn naive<T: PartialEq>(text: &[T], pattern: &[T]) -> Option<usize> {
    if pattern.is_empty() {
        return Some(0);
    }
    if text.len() < pattern.len() {
        return None;
    }
    (0..=text.len() - pattern.len()).find(|&k| &text[k..k + pattern.len()] == pattern)
}

/// Next table straight from its definition: the largest `i < j` with
/// `p[..i] == p[j-i..j]` and `p[i] != p[j]`, else -1.
pub fn brute_next<T: PartialEq>(p: &[T]) -> Vec<isize> {
    (0..p.len())
        .map(|j| {
            (0..j)
                .rev()
                .find(|&i| p[..i] == p[j - i..j] && p[i] != p[j])
                .map_or(-1, |i| i as isize)
        })
        .collect()
}

/// Skip shifts (before the tail bucket is replaced) and mismatch shift for a
/// single-element identity hash: distance from the last occurrence of each
/// symbol in `p[..m-1]` to the end, or `m`.
pub fn brute_skip(p: &[u8]) -> (Vec<isize>, isize) {
    let m = p.len();
    let mut shifts = vec![0isize; 256];
    for (c, slot) in shifts.iter_mut().enumerate() {
        *slot = (0..m - 1)
            .rev()
            .find(|&j| p[j] as usize == c)
            .map_or(m as isize, |j| (m - 1 - j) as isize);
    }
    let mismatch = shifts[p[m - 1] as usize];
    shifts[p[m - 1] as usize] = 0;
    (shifts, mismatch)
}

pub fn random_seq(rng: &mut ChaCha8Rng, sigma: u16, len: usize) -> Vec<u8> {
    (0..len).map(|_| rng.random_range(0..sigma) as u8).collect()
}

/// A pattern either cut from the text (so it usually occurs) or fresh.
pub fn random_case(
    rng: &mut ChaCha8Rng,
    sigma: u16,
    max_n: usize,
    max_m: usize,
) -> (Vec<u8>, Vec<u8>) {
    let n = rng.random_range(0..=max_n);
    let text = random_seq(rng, sigma, n);
    let m = rng.random_range(1..=max_m);
    let pattern = if n >= m && rng.random_bool(0.6) {
        let at = rng.random_range(0..=n - m);
        let mut p = text[at..at + m].to_vec();
        if rng.random_bool(0.2) {
            let i = rng.random_range(0..m);
            p[i] = rng.random_range(0..sigma) as u8;
        }
        p
    } else {
        random_seq(rng, sigma, m)
    };
    (text, pattern)
}

pub const SMALL_TEXT: &str =
    "Now's the time for all good men and women to come to the aid of their country.";

pub fn small_cases() -> Vec<(&'static str, &'static str, Option<usize>)> {
    vec![
        (SMALL_TEXT, "time", Some(10)),
        (SMALL_TEXT, "timid", None),
        (SMALL_TEXT, "try.", Some(74)),
        ("babcbabcabcaabcabcabcacabc", "abcabcacab", Some(15)),
        ("aaaaaaabcabcadefg", "abcad", Some(9)),
        ("aaaaaaabcabcadefg", "ab", Some(6)),
    ]
}
