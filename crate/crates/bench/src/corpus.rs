//! Corpus loading and the deterministic synthetic corpora.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::BenchError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CorpusKind {
    Text,
    Dna,
    Words,
    Random16,
}

impl CorpusKind {
    pub fn name(self) -> &'static str {
        match self {
            CorpusKind::Text => "text",
            CorpusKind::Dna => "dna",
            CorpusKind::Words => "words",
            CorpusKind::Random16 => "random16",
        }
    }
}

impl fmt::Display for CorpusKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CorpusKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(CorpusKind::Text),
            "dna" => Ok(CorpusKind::Dna),
            "words" => Ok(CorpusKind::Words),
            "random16" => Ok(CorpusKind::Random16),
            _ => Err(format!(
                "unknown corpus kind `{s}` (text, dna, words, random16)"
            )),
        }
    }
}

/// A loaded corpus in its element representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Corpus {
    Bytes(Vec<u8>),
    Words(Vec<String>),
    Symbols(Vec<u16>),
}

impl Corpus {
    pub fn len(&self) -> usize {
        match self {
            Corpus::Bytes(v) => v.len(),
            Corpus::Words(v) => v.len(),
            Corpus::Symbols(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn read(path: &Path) -> Result<Vec<u8>, BenchError> {
    std::fs::read(path).map_err(|source| BenchError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Splits on ASCII whitespace, dropping empty pieces.
pub fn split_words(data: &[u8]) -> Vec<String> {
    data.split(|b| b.is_ascii_whitespace())
        .filter(|w| !w.is_empty())
        .map(|w| String::from_utf8_lossy(w).into_owned())
        .collect()
}

/// Reads a corpus file. `text` and `dna` files are raw bytes, `words` files
/// are whitespace-separated words and `random16` files are little-endian
/// 16-bit symbols.
pub fn load_corpus(path: &Path, kind: CorpusKind) -> Result<Corpus, BenchError> {
    let data = read(path)?;
    let corpus = match kind {
        CorpusKind::Text | CorpusKind::Dna => Corpus::Bytes(data),
        CorpusKind::Words => Corpus::Words(split_words(&data)),
        CorpusKind::Random16 => Corpus::Symbols(
            data.chunks_exact(2)
                .map(|c| u16::from_le_bytes([c[0], c[1]]))
                .collect(),
        ),
    };
    if corpus.is_empty() {
        return Err(BenchError::EmptyCorpus);
    }
    Ok(corpus)
}

/// The synthetic corpus of `kind`, reproducible from `seed`. `size` is in
/// bytes for text and DNA, in symbols for random16 and in words for words.
pub fn generate_corpus(kind: CorpusKind, seed: u64, size: usize) -> Corpus {
    match kind {
        CorpusKind::Text => Corpus::Bytes(english_like(seed, size)),
        CorpusKind::Dna => Corpus::Bytes(dna(seed, size)),
        CorpusKind::Words => {
            let mut words = Vec::new();
            let mut bytes = size.max(1) * 6;
            while words.len() < size {
                words = split_words(&english_like(seed, bytes));
                bytes *= 2;
            }
            words.truncate(size);
            Corpus::Words(words)
        }
        CorpusKind::Random16 => Corpus::Symbols(random16(seed, size)),
    }
}

/// Default synthetic size for each kind.
pub fn default_size(kind: CorpusKind) -> usize {
    match kind {
        CorpusKind::Text => 160_000,
        CorpusKind::Dna => 600_000,
        CorpusKind::Words => 30_000,
        CorpusKind::Random16 => 1_000_000,
    }
}

/// Uniform a/c/g/t bytes.
pub fn dna(seed: u64, len: usize) -> Vec<u8> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..len).map(|_| b"acgt"[rng.random_range(0..4)]).collect()
}

/// Uniform 16-bit symbols.
pub fn random16(seed: u64, count: usize) -> Vec<u16> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| rng.random()).collect()
}

const COMMON_WORDS: &str = "the of and to a in is that it was he for on are as with his they \
at be this from I have or by one had not but what all were when we there can an your which \
their said if do will each about how up out them then she many some so these would other into \
has more her two like him see time could no make than first been its who now people my made \
over did down only way find use may water long little very after words called just where most \
know get through back much before go good new write our used me man too any day same right look \
think also around another came come work three word must because does part even place well such \
here take why things help put years different away again off went old number great tell men say \
small every found still between name should home big give air line set own under read last \
never us left end along while might next sound below saw something thought both few those always \
looked show large often together asked house world going want school important until form food \
keep children feet land side without boy once animals life enough took sometimes four head above \
kind began almost live page got earth need far hand high year mother light parts country father \
let night following picture being study second eyes soon times story boys since white days ever \
paper hard near sentence better best across during today others however sure means knew try \
told young miles sun ways thing whole hear example heard several change answer room sea against \
top turned learn point city play toward five using himself usually money seen car morning given \
queen king garden rabbit door table looking glass knight chess dream wonder curious remarked \
replied sister bank nothing tired twice book pictures conversation herself mind \
hot stupid pleasure daisy chain trouble getting picking suddenly pink ran close remarkable";

/// English-like prose: Zipf-weighted common words in sentences of varying
/// length with capitals, commas, periods and line breaks.
pub fn english_like(seed: u64, len: usize) -> Vec<u8> {
    let words: Vec<&str> = COMMON_WORDS.split_whitespace().collect();
    let weights: Vec<f64> = (1..=words.len()).map(|r| 1.0 / r as f64).collect();
    let pick = WeightedIndex::new(&weights).expect("weights are positive");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(len + 64);
    let mut line = 0usize;
    while out.len() < len {
        let sentence = rng.random_range(4..20);
        for i in 0..sentence {
            let w = words[pick.sample(&mut rng)].as_bytes();
            if i == 0 {
                out.push(w[0].to_ascii_uppercase());
                out.extend_from_slice(&w[1..]);
            } else {
                out.extend_from_slice(w);
            }
            line += w.len() + 1;
            if i + 1 == sentence {
                out.push(if rng.random_bool(0.1) { b'?' } else { b'.' });
            } else if rng.random_bool(0.08) {
                out.push(b',');
            }
            if line > 68 {
                out.push(b'\n');
                line = 0;
            } else {
                out.push(b' ');
            }
        }
        if rng.random_bool(0.12) {
            out.push(b'\n');
            line = 0;
        }
    }
    out.truncate(len);
    out
}
