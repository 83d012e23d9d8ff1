mod common;

use common::{naive, random_case};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use seqsearch::*;

fn bounded(text: &[u8], pattern: &[u8]) {
    let n = text.len() as u64;
    let expected = naive(text, pattern);
    for alg in [
        CountedAlgorithm::Kmp,
        CountedAlgorithm::L,
        CountedAlgorithm::Hal,
    ] {
        for (scheme_name, (outcome, counts)) in [
            (
                "byte",
                run_counted_search_phase(alg, text, pattern, &ByteScheme),
            ),
            (
                "dna4",
                run_counted_search_phase(alg, text, pattern, &DnaScheme4),
            ),
        ] {
            assert_eq!(outcome.position, expected);
            assert!(
                counts.element_comparisons <= 2 * n,
                "{alg}/{scheme_name}: {} comparisons, n={n}, pattern={pattern:?}",
                counts.element_comparisons
            );
        }
    }
}

#[test]
fn adversarial_runs() {
    for n in [1usize, 2, 10, 100, 1000] {
        let text = vec![b'a'; n];
        for m in 1..=20 {
            let mut pattern = vec![b'a'; m - 1];
            pattern.push(b'b');
            bounded(&text, &pattern);
            bounded(&text, &vec![b'a'; m]);
            let mut ba = vec![b'b'];
            ba.extend(vec![b'a'; m - 1]);
            bounded(&text, &ba);
        }
    }
    let text: Vec<u8> = b"ab".iter().copied().cycle().take(999).collect();
    bounded(&text, b"ababababb");
    bounded(&text, b"abababababababac");
}

#[test]
fn random_instances() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for sigma in [2u16, 4, 26, 256] {
        for _ in 0..500 {
            let (text, pattern) = random_case(&mut rng, sigma, 400, 30);
            bounded(&text, &pattern);
        }
    }
}

#[test]
fn loop_work_is_linear() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..300 {
        let (text, pattern) = random_case(&mut rng, 2, 500, 20);
        let bound = 4 * (text.len() + pattern.len()) as u64;
        for alg in [CountedAlgorithm::L, CountedAlgorithm::Hal] {
            let (_, c) = run_counted(alg, &text, &pattern, &ByteScheme);
            assert!(c.element_comparisons + c.element_accesses <= bound);
        }
    }
}
