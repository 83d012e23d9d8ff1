use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use seqsearch::BuiltinScheme;
use seqsearch_bench::{
    build_pattern_plan, check_supported, default_size, generate_corpus, load_corpus, run_bench,
    run_count, split_words, AlgorithmSpec, BenchElement, BenchError, BenchOptions, BenchReport,
    Corpus, CorpusKind, Dictionary, TestCaseFile,
};

#[derive(Parser)]
#[command(name = "seqsearch", version, about = "Exact sequence search, benchmarks and operation counts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the offset of the first occurrence of a pattern.
    Find(FindArgs),
    /// Time algorithms over a pattern plan and write a TSV report.
    Bench(PlanArgs),
    /// Count element and cursor operations per searched element.
    Count(PlanArgs),
    /// Run the bundled regression cases and a seeded randomized check.
    Selftest(SelftestArgs),
}

#[derive(Args, Clone)]
struct CorpusArgs {
    /// Corpus kind: text, dna, words or random16.
    #[arg(long, default_value = "text")]
    kind: String,
    /// Corpus file. Without it a synthetic corpus is generated from --seed.
    #[arg(long)]
    text: Option<PathBuf>,
    /// Size of the synthetic corpus (bytes, words or symbols).
    #[arg(long)]
    count: Option<usize>,
    /// Seed for every random choice.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Hash scheme used by plain `hal`.
    #[arg(long)]
    scheme: Option<String>,
}

#[derive(Args)]
struct FindArgs {
    #[command(flatten)]
    corpus: CorpusArgs,
    /// Pattern; `\xNN` escapes a byte, `\\` a backslash. Words are
    /// space-separated and 16-bit symbols comma-separated.
    #[arg(long)]
    pattern: String,
    /// Algorithm to run.
    #[arg(long, default_value = "hal")]
    algo: String,
}

#[derive(Args)]
struct PlanArgs {
    #[command(flatten)]
    corpus: CorpusArgs,
    /// Comma-separated pattern sizes.
    #[arg(long, alias = "size")]
    sizes: Option<String>,
    /// Text patterns per size, and the dictionary word limit.
    #[arg(long, default_value_t = 400)]
    tests: usize,
    /// Comma-separated algorithms; the first one is the reference.
    #[arg(long, alias = "algo")]
    algos: Option<String>,
    /// Whitespace-separated dictionary words to search for as well.
    #[arg(long)]
    dict: Option<PathBuf>,
    /// TSV output path; without it the TSV goes to stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Minimum time per timed cell, in milliseconds.
    #[arg(long, default_value_t = 200)]
    min_time_ms: u64,
    /// Timing trials per cell; the fastest is reported.
    #[arg(long, default_value_t = 1)]
    trials: u32,
    /// Skip timing and write zero timing columns.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Args)]
struct SelftestArgs {
    /// Regression file of comment/text/pattern line triples.
    #[arg(long)]
    cases: Option<PathBuf>,
    /// Number of random cases.
    #[arg(long, default_value_t = 10_000)]
    fuzz: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

/// A failure and the exit status it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<BenchError> for Failure {
    fn from(e: BenchError) -> Self {
        let code = match e {
            BenchError::CorrectnessMismatch { .. } => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Find(a) => find(&a),
        Command::Bench(a) => plan_command(&a, false),
        Command::Count(a) => plan_command(&a, true),
        Command::Selftest(a) => selftest(&a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn kind_and_scheme(args: &CorpusArgs) -> Result<(CorpusKind, BuiltinScheme), Failure> {
    let kind: CorpusKind = args.kind.parse().map_err(Failure::usage)?;
    let scheme = match &args.scheme {
        Some(s) => s.parse().map_err(|e: seqsearch::MatchError| Failure::usage(e.to_string()))?,
        None => match kind {
            CorpusKind::Text | CorpusKind::Dna => u8::default_scheme(),
            CorpusKind::Words => String::default_scheme(),
            CorpusKind::Random16 => u16::default_scheme(),
        },
    };
    Ok((kind, scheme))
}

fn parse_algos(list: &str, scheme: BuiltinScheme) -> Result<Vec<AlgorithmSpec>, Failure> {
    let specs = AlgorithmSpec::parse_list(list, scheme)?;
    if specs.is_empty() {
        return Err(Failure::usage("no algorithms given"));
    }
    Ok(specs)
}

fn check_for_kind(kind: CorpusKind, specs: &[AlgorithmSpec]) -> Result<(), BenchError> {
    match kind {
        CorpusKind::Text | CorpusKind::Dna => check_supported::<u8>(specs),
        CorpusKind::Words => check_supported::<String>(specs),
        CorpusKind::Random16 => check_supported::<u16>(specs),
    }
}

fn corpus(args: &CorpusArgs, kind: CorpusKind) -> Result<Corpus, BenchError> {
    match &args.text {
        Some(path) => load_corpus(path, kind),
        None => Ok(generate_corpus(
            kind,
            args.seed,
            args.count.unwrap_or_else(|| default_size(kind)),
        )),
    }
}

/// Decodes `\xNN` and `\\` escapes.
fn unescape(s: &str) -> Result<Vec<u8>, Failure> {
    let b = s.as_bytes();
    let mut out = Vec::with_capacity(b.len());
    let mut i = 0;
    while i < b.len() {
        if b[i] != b'\\' {
            out.push(b[i]);
            i += 1;
            continue;
        }
        match b.get(i + 1) {
            Some(b'\\') => {
                out.push(b'\\');
                i += 2;
            }
            Some(b'x') => {
                let hex = s
                    .get(i + 2..i + 4)
                    .and_then(|h| u8::from_str_radix(h, 16).ok())
                    .ok_or_else(|| Failure::usage(format!("bad escape in pattern `{s}`")))?;
                out.push(hex);
                i += 4;
            }
            _ => return Err(Failure::usage(format!("bad escape in pattern `{s}`"))),
        }
    }
    Ok(out)
}

fn find(args: &FindArgs) -> Result<u8, Failure> {
    let (kind, scheme) = kind_and_scheme(&args.corpus)?;
    let spec = AlgorithmSpec::parse(&args.algo, scheme)?;
    check_for_kind(kind, std::slice::from_ref(&spec))?;
    let bytes = unescape(&args.pattern)?;
    let found = match corpus(&args.corpus, kind)? {
        Corpus::Bytes(text) => find_in(&spec, &text, &bytes),
        Corpus::Words(text) => find_in(&spec, &text, &split_words(&bytes)),
        Corpus::Symbols(text) => {
            let pattern = args
                .pattern
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| s.trim().parse::<u16>())
                .collect::<Result<Vec<u16>, _>>()
                .map_err(|e| Failure::usage(format!("bad 16-bit pattern: {e}")))?;
            find_in(&spec, &text, &pattern)
        }
    };
    match found {
        Some(offset) => {
            println!("{offset}");
            Ok(0)
        }
        None => {
            println!("not found");
            Ok(1)
        }
    }
}

fn find_in<T: BenchElement>(spec: &AlgorithmSpec, text: &[T], pattern: &[T]) -> Option<usize> {
    let mut table = seqsearch::SkewedSkipTable::new();
    T::search(spec.algorithm, text, pattern, &mut table)
}

fn default_sizes(kind: CorpusKind) -> &'static str {
    match kind {
        CorpusKind::Text | CorpusKind::Random16 => "2,4,6,8,10,14,18",
        CorpusKind::Dna => "20,50,100,150,200",
        CorpusKind::Words => "1,2,3,4,6",
    }
}

fn default_algos(kind: CorpusKind, counting: bool) -> &'static str {
    match (kind, counting) {
        (CorpusKind::Dna, false) => "sf,l,hal,hal2,hal3,hal4,hal5",
        (CorpusKind::Random16, false) => "sf,l,hal,nhal",
        _ => "sf,l,hal",
    }
}

fn parse_sizes(list: &str) -> Result<Vec<usize>, Failure> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| Failure::usage(format!("bad pattern size `{s}`")))
        })
        .collect()
}

fn read_dictionary(path: &Path) -> Result<Vec<Vec<u8>>, BenchError> {
    let data = std::fs::read(path).map_err(|source| BenchError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(data
        .split(|b| b.is_ascii_whitespace())
        .filter(|w| !w.is_empty())
        .map(<[u8]>::to_vec)
        .collect())
}

fn plan_command(args: &PlanArgs, counting: bool) -> Result<u8, Failure> {
    let (kind, scheme) = kind_and_scheme(&args.corpus)?;
    let specs = parse_algos(
        args.algos.as_deref().unwrap_or(default_algos(kind, counting)),
        scheme,
    )?;
    check_for_kind(kind, &specs)?;
    if counting {
        if let Some(s) = specs.iter().find(|s| s.counted().is_none()) {
            return Err(Failure::usage(format!("algorithm `{}` cannot run counted", s.name)));
        }
    }
    let sizes = parse_sizes(args.sizes.as_deref().unwrap_or(default_sizes(kind)))?;
    if sizes.is_empty() || args.tests == 0 {
        return Err(BenchError::EmptyPlan.into());
    }
    if args.dict.is_some() && !matches!(kind, CorpusKind::Text | CorpusKind::Dna) {
        return Err(Failure::usage("--dict applies to text and dna corpora only"));
    }
    let options = BenchOptions {
        min_time: Duration::from_millis(args.min_time_ms),
        trials: args.trials,
        timing: !args.no_timing,
    };
    let name = kind.name();
    let report = match corpus(&args.corpus, kind)? {
        Corpus::Bytes(text) => {
            let dict = args
                .dict
                .as_deref()
                .map(read_dictionary)
                .transpose()?
                .map(Dictionary::from_words);
            let plan = build_pattern_plan(&text, &sizes, args.tests, dict.as_ref())?;
            report_for(name, &text, &plan, &specs, &options, counting)?
        }
        Corpus::Words(text) => {
            let plan = build_pattern_plan(&text, &sizes, args.tests, None)?;
            report_for(name, &text, &plan, &specs, &options, counting)?
        }
        Corpus::Symbols(text) => {
            let plan = build_pattern_plan(&text, &sizes, args.tests, None)?;
            report_for(name, &text, &plan, &specs, &options, counting)?
        }
    };
    match &args.out {
        Some(path) => {
            report.write_tsv(path)?;
            print!("{}", report.summary());
        }
        None => {
            print!("{}", report.to_tsv());
            eprint!("{}", report.summary());
        }
    }
    Ok(0)
}

fn report_for<T: BenchElement + 'static>(
    name: &str,
    text: &[T],
    plan: &seqsearch_bench::PatternPlan<T>,
    specs: &[AlgorithmSpec],
    options: &BenchOptions,
    counting: bool,
) -> Result<BenchReport, BenchError> {
    if counting {
        run_count(name, text, plan, specs)
    } else {
        run_bench(name, text, plan, specs, options)
    }
}

const SELFTEST_ALGOS: &str = "sf,kmp,l,al,hal,hal2,hal3,hal4,hal5,hal:mod256,hal:zero,nhal";

fn naive(text: &[u8], pattern: &[u8]) -> Option<usize> {
    if pattern.len() > text.len() {
        return None;
    }
    (0..=text.len() - pattern.len()).find(|&k| &text[k..k + pattern.len()] == pattern)
}

fn check_case(
    specs: &[AlgorithmSpec],
    table: &mut seqsearch::SkewedSkipTable,
    text: &[u8],
    pattern: &[u8],
) -> Result<(), String> {
    let expected = naive(text, pattern);
    for spec in specs {
        let got = u8::search(spec.algorithm, text, pattern, table);
        if got != expected {
            return Err(format!(
                "{}: pattern {:?} in text {:?}: expected {expected:?}, got {got:?}",
                spec.name,
                String::from_utf8_lossy(pattern),
                String::from_utf8_lossy(text)
            ));
        }
    }
    Ok(())
}

fn selftest(args: &SelftestArgs) -> Result<u8, Failure> {
    let specs = parse_algos(SELFTEST_ALGOS, BuiltinScheme::Byte)?;
    let file = match &args.cases {
        Some(path) => TestCaseFile::load(path),
        None => Ok(TestCaseFile::bundled()),
    }
    .map_err(|e| Failure {
        code: 1,
        message: e.to_string(),
    })?;
    let mut table = seqsearch::SkewedSkipTable::new();
    for case in &file.cases {
        if let Err(msg) = check_case(&specs, &mut table, &case.text, &case.pattern) {
            println!("FAIL {msg}");
            return Ok(1);
        }
    }
    println!("regression: {} cases passed", file.cases.len());
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let sigmas = [2u16, 4, 26, 256];
    for i in 0..args.fuzz {
        let sigma = sigmas[i % sigmas.len()];
        let n = rng.random_range(0..=400);
        let text: Vec<u8> = (0..n).map(|_| rng.random_range(0..sigma) as u8).collect();
        let m = rng.random_range(1..=32);
        let pattern: Vec<u8> = if n >= m && rng.random_bool(0.5) {
            let at = rng.random_range(0..=n - m);
            text[at..at + m].to_vec()
        } else {
            (0..m).map(|_| rng.random_range(0..sigma) as u8).collect()
        };
        if let Err(msg) = check_case(&specs, &mut table, &text, &pattern) {
            println!("FAIL {msg}");
            return Ok(1);
        }
    }
    println!("random: {} cases passed (seed {})", args.fuzz, args.seed);
    Ok(0)
}
