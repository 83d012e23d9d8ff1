//! Algorithm names for benchmarks and their binding to element types.

use std::fmt;

use seqsearch::{
    run_counted, search_al, search_hal, search_kmp_basic, search_l, search_nhal, search_sf,
    BuiltinScheme, ByteScheme, CountedAlgorithm, DnaScheme2, DnaScheme3, DnaScheme4, DnaScheme5,
    Mod256Scheme, OperationCounts, SkewedSkipTable, WordHeadScheme, ZeroScheme,
};

use crate::error::BenchError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Sf,
    Kmp,
    L,
    Al,
    Hal(BuiltinScheme),
    Nhal,
}

/// An algorithm together with the name it is reported under.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgorithmSpec {
    pub name: String,
    pub algorithm: Algorithm,
}

impl fmt::Display for AlgorithmSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

impl AlgorithmSpec {
    /// Parses `sf`, `kmp`, `l`, `al`, `hal`, `hal2`..`hal5`, `hal:<scheme>`
    /// or `nhal`. Plain `hal` uses `default_scheme`.
    pub fn parse(name: &str, default_scheme: BuiltinScheme) -> Result<Self, BenchError> {
        let algorithm = match name {
            "sf" => Algorithm::Sf,
            "kmp" => Algorithm::Kmp,
            "l" => Algorithm::L,
            "al" => Algorithm::Al,
            "hal" => Algorithm::Hal(default_scheme),
            "hal2" => Algorithm::Hal(BuiltinScheme::Dna2),
            "hal3" => Algorithm::Hal(BuiltinScheme::Dna3),
            "hal4" => Algorithm::Hal(BuiltinScheme::Dna4),
            "hal5" => Algorithm::Hal(BuiltinScheme::Dna5),
            "nhal" => Algorithm::Nhal,
            other => match other.strip_prefix("hal:") {
                Some(s) => Algorithm::Hal(s.parse()?),
                None => return Err(BenchError::UnknownAlgorithm(other.to_string())),
            },
        };
        Ok(AlgorithmSpec {
            name: name.to_string(),
            algorithm,
        })
    }

    /// Parses a comma-separated list.
    pub fn parse_list(list: &str, default_scheme: BuiltinScheme) -> Result<Vec<Self>, BenchError> {
        list.split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| Self::parse(s, default_scheme))
            .collect()
    }

    pub fn counted(&self) -> Option<(CountedAlgorithm, Option<BuiltinScheme>)> {
        match self.algorithm {
            Algorithm::Sf => Some((CountedAlgorithm::Sf, None)),
            Algorithm::Kmp => Some((CountedAlgorithm::Kmp, None)),
            Algorithm::L => Some((CountedAlgorithm::L, None)),
            Algorithm::Al => Some((CountedAlgorithm::Hal, Some(BuiltinScheme::Byte))),
            Algorithm::Hal(s) => Some((CountedAlgorithm::Hal, Some(s))),
            Algorithm::Nhal => None,
        }
    }
}

/// Element types the benchmarks run over.
pub trait BenchElement: PartialEq + Clone + fmt::Debug {
    const NAME: &'static str;

    fn default_scheme() -> BuiltinScheme;

    fn supports(algorithm: Algorithm) -> bool;

    /// Runs a supported algorithm. Unsupported combinations return `None`
    /// and must be filtered out with [`BenchElement::supports`] first.
    fn search(
        algorithm: Algorithm,
        text: &[Self],
        pattern: &[Self],
        table: &mut SkewedSkipTable,
    ) -> Option<usize>;

    fn search_counted(
        algorithm: CountedAlgorithm,
        scheme: BuiltinScheme,
        text: &[Self],
        pattern: &[Self],
    ) -> (Option<usize>, OperationCounts);

    /// Renders a pattern for diagnostics.
    fn describe(pattern: &[Self]) -> String {
        format!("{pattern:?}")
    }
}

/// Rejects algorithms the element type cannot run.
pub fn check_supported<T: BenchElement>(specs: &[AlgorithmSpec]) -> Result<(), BenchError> {
    for s in specs {
        if !T::supports(s.algorithm) {
            return Err(BenchError::Unsupported {
                algorithm: s.name.clone(),
                element: T::NAME,
            });
        }
    }
    Ok(())
}

macro_rules! counted_with {
    ($alg:expr, $text:expr, $pattern:expr, $scheme:expr, { $($variant:ident => $ty:expr),* }) => {
        match $scheme {
            $(BuiltinScheme::$variant => {
                let (o, c) = run_counted($alg, $text, $pattern, &$ty);
                (o.position, c)
            })*
            _ => {
                let (o, c) = run_counted($alg, $text, $pattern, &ZeroScheme);
                (o.position, c)
            }
        }
    };
}

impl BenchElement for u8 {
    const NAME: &'static str = "byte";

    fn default_scheme() -> BuiltinScheme {
        BuiltinScheme::Byte
    }

    fn supports(algorithm: Algorithm) -> bool {
        !matches!(algorithm, Algorithm::Hal(BuiltinScheme::WordHead))
    }

    fn search(
        algorithm: Algorithm,
        text: &[u8],
        pattern: &[u8],
        table: &mut SkewedSkipTable,
    ) -> Option<usize> {
        match algorithm {
            Algorithm::Sf => search_sf(text, pattern),
            Algorithm::Kmp => search_kmp_basic(text, pattern),
            Algorithm::L => search_l(text, pattern),
            Algorithm::Al => search_al(text, pattern),
            Algorithm::Hal(s) => match s {
                BuiltinScheme::Byte => search_hal(text, pattern, &ByteScheme),
                BuiltinScheme::Dna2 => search_hal(text, pattern, &DnaScheme2),
                BuiltinScheme::Dna3 => search_hal(text, pattern, &DnaScheme3),
                BuiltinScheme::Dna4 => search_hal(text, pattern, &DnaScheme4),
                BuiltinScheme::Dna5 => search_hal(text, pattern, &DnaScheme5),
                BuiltinScheme::Mod256 => search_hal(text, pattern, &Mod256Scheme),
                BuiltinScheme::Zero => search_hal(text, pattern, &ZeroScheme),
                BuiltinScheme::WordHead => None,
            },
            Algorithm::Nhal => search_nhal(text, pattern, table),
        }
    }

    fn search_counted(
        algorithm: CountedAlgorithm,
        scheme: BuiltinScheme,
        text: &[u8],
        pattern: &[u8],
    ) -> (Option<usize>, OperationCounts) {
        counted_with!(algorithm, text, pattern, scheme, {
            Byte => ByteScheme,
            Dna2 => DnaScheme2,
            Dna3 => DnaScheme3,
            Dna4 => DnaScheme4,
            Dna5 => DnaScheme5,
            Mod256 => Mod256Scheme
        })
    }

    fn describe(pattern: &[u8]) -> String {
        format!("{:?}", String::from_utf8_lossy(pattern))
    }
}

impl BenchElement for u16 {
    const NAME: &'static str = "16-bit symbol";

    fn default_scheme() -> BuiltinScheme {
        BuiltinScheme::Mod256
    }

    fn supports(algorithm: Algorithm) -> bool {
        match algorithm {
            Algorithm::Al => false,
            Algorithm::Hal(s) => matches!(s, BuiltinScheme::Mod256 | BuiltinScheme::Zero),
            _ => true,
        }
    }

    fn search(
        algorithm: Algorithm,
        text: &[u16],
        pattern: &[u16],
        table: &mut SkewedSkipTable,
    ) -> Option<usize> {
        match algorithm {
            Algorithm::Sf => search_sf(text, pattern),
            Algorithm::Kmp => search_kmp_basic(text, pattern),
            Algorithm::L => search_l(text, pattern),
            Algorithm::Hal(BuiltinScheme::Mod256) => search_hal(text, pattern, &Mod256Scheme),
            Algorithm::Hal(BuiltinScheme::Zero) => search_hal(text, pattern, &ZeroScheme),
            Algorithm::Nhal => search_nhal(text, pattern, table),
            _ => None,
        }
    }

    fn search_counted(
        algorithm: CountedAlgorithm,
        scheme: BuiltinScheme,
        text: &[u16],
        pattern: &[u16],
    ) -> (Option<usize>, OperationCounts) {
        counted_with!(algorithm, text, pattern, scheme, { Mod256 => Mod256Scheme })
    }
}

impl BenchElement for String {
    const NAME: &'static str = "word";

    fn default_scheme() -> BuiltinScheme {
        BuiltinScheme::WordHead
    }

    fn supports(algorithm: Algorithm) -> bool {
        match algorithm {
            Algorithm::Al | Algorithm::Nhal => false,
            Algorithm::Hal(s) => matches!(s, BuiltinScheme::WordHead | BuiltinScheme::Zero),
            _ => true,
        }
    }

    fn search(
        algorithm: Algorithm,
        text: &[String],
        pattern: &[String],
        _table: &mut SkewedSkipTable,
    ) -> Option<usize> {
        match algorithm {
            Algorithm::Sf => search_sf(text, pattern),
            Algorithm::Kmp => search_kmp_basic(text, pattern),
            Algorithm::L => search_l(text, pattern),
            Algorithm::Hal(BuiltinScheme::WordHead) => search_hal(text, pattern, &WordHeadScheme),
            Algorithm::Hal(BuiltinScheme::Zero) => search_hal(text, pattern, &ZeroScheme),
            _ => None,
        }
    }

    fn search_counted(
        algorithm: CountedAlgorithm,
        scheme: BuiltinScheme,
        text: &[String],
        pattern: &[String],
    ) -> (Option<usize>, OperationCounts) {
        counted_with!(algorithm, text, pattern, scheme, { WordHead => WordHeadScheme })
    }

    fn describe(pattern: &[String]) -> String {
        format!("{:?}", pattern.join(" "))
    }
}
