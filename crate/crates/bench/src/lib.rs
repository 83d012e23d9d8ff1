//! Benchmark harness for `seqsearch`: regression files, corpora, pattern
//! plans, timed runs and operation-count runs.
//!
//! ```
//! use seqsearch::BuiltinScheme;
//! use seqsearch_bench::{build_pattern_plan, dna, run_bench, AlgorithmSpec, BenchOptions};
//!
//! let text = dna(1, 20_000);
//! let plan = build_pattern_plan(&text, &[20, 50], 10, None).unwrap();
//! let algos = AlgorithmSpec::parse_list("sf,hal,hal4", BuiltinScheme::Byte).unwrap();
//! let options = BenchOptions { timing: false, ..Default::default() };
//! let report = run_bench("dna", &text, &plan, &algos, &options).unwrap();
//! assert_eq!(report.rows.len(), 6);
//! ```

mod algo;
mod corpus;
mod error;
mod plan;
mod report;
mod run;
mod testcase;

pub use algo::{check_supported, Algorithm, AlgorithmSpec, BenchElement};
pub use corpus::{
    default_size, dna, english_like, generate_corpus, load_corpus, random16, split_words, Corpus,
    CorpusKind,
};
pub use error::BenchError;
pub use plan::{build_pattern_plan, trim_words, Dictionary, PatternPlan, SizePlan};
pub use report::{speed, Baseline, BenchReport, BenchRow, COUNT_COLUMNS, TIMING_COLUMNS};
pub use run::{run_bench, run_count, run_searchers, searchers_for, BenchOptions, SearchFn, Searcher};
pub use testcase::{TestCase, TestCaseFile, SMALL_TXT};

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/benchmarks.md")]
mod book_benchmarks {}
