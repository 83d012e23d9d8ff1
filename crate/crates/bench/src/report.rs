//! Benchmark rows and their TSV rendering.

use std::fmt::Write as _;
use std::path::Path;

use seqsearch::OperationRates;

use crate::error::BenchError;

pub const TIMING_COLUMNS: [&str; 6] = [
    "corpus",
    "algorithm",
    "pattern_size",
    "total_elements",
    "seconds",
    "elements_per_us",
];

pub const COUNT_COLUMNS: [&str; 5] = [
    "comparisons_per_char",
    "accesses_per_char",
    "big_jumps_per_char",
    "other_cursor_ops_per_char",
    "distance_ops_per_char",
];

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub corpus: String,
    pub algorithm: String,
    pub pattern_size: usize,
    /// Sum over all patterns of the match offset (or corpus length when
    /// absent) plus the pattern size.
    pub total_elements: u64,
    pub seconds: f64,
    pub elements_per_us: f64,
    pub rates: Option<OperationRates>,
}

/// Elements per microsecond, or 0 when no time was measured.
pub fn speed(total_elements: u64, seconds: f64) -> f64 {
    if seconds > 0.0 {
        total_elements as f64 / 1e6 / seconds
    } else {
        0.0
    }
}

/// Time of the empty selection loop for one pattern size.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Baseline {
    pub pattern_size: usize,
    pub seconds: f64,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
    pub baselines: Vec<Baseline>,
}

impl BenchReport {
    pub fn has_counts(&self) -> bool {
        self.rows.iter().any(|r| r.rates.is_some())
    }

    pub fn to_tsv(&self) -> String {
        let counts = self.has_counts();
        let mut out = TIMING_COLUMNS.join("\t");
        if counts {
            out.push('\t');
            out.push_str(&COUNT_COLUMNS.join("\t"));
        }
        out.push('\n');
        for r in &self.rows {
            let _ = write!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}",
                r.corpus,
                r.algorithm,
                r.pattern_size,
                r.total_elements,
                r.seconds,
                r.elements_per_us
            );
            if counts {
                let c = r.rates.unwrap_or_default();
                let _ = write!(
                    out,
                    "\t{}\t{}\t{}\t{}\t{}",
                    c.comparisons, c.accesses, c.big_jumps, c.other_cursor_ops, c.distance_ops
                );
            }
            out.push('\n');
        }
        out
    }

    pub fn write_tsv(&self, path: &Path) -> Result<(), BenchError> {
        std::fs::write(path, self.to_tsv()).map_err(|source| BenchError::Io {
            path: path.to_path_buf(),
            source,
        })
    }

    /// A fixed-width table for terminals.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        let counts = self.has_counts();
        let _ = write!(
            out,
            "{:<10} {:<10} {:>6} {:>12}",
            "corpus", "algorithm", "size", "elements"
        );
        if counts {
            let _ = writeln!(
                out,
                " {:>9} {:>9} {:>9} {:>9} {:>9}",
                "cmp/ch", "acc/ch", "jump/ch", "other/ch", "dist/ch"
            );
        } else {
            let _ = writeln!(out, " {:>10} {:>12}", "seconds", "elements/us");
        }
        for r in &self.rows {
            let _ = write!(
                out,
                "{:<10} {:<10} {:>6} {:>12}",
                r.corpus, r.algorithm, r.pattern_size, r.total_elements
            );
            match (counts, r.rates) {
                (true, Some(c)) => {
                    let _ = writeln!(
                        out,
                        " {:>9.3} {:>9.3} {:>9.3} {:>9.3} {:>9.3}",
                        c.comparisons, c.accesses, c.big_jumps, c.other_cursor_ops, c.distance_ops
                    );
                }
                _ => {
                    let _ = writeln!(out, " {:>10.4} {:>12.2}", r.seconds, r.elements_per_us);
                }
            }
        }
        for b in &self.baselines {
            let _ = writeln!(
                out,
                "baseline for size {}: {:.6} s subtracted",
                b.pattern_size, b.seconds
            );
        }
        out
    }
}
