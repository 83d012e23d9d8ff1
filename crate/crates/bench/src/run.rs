//! Timed and counted benchmark runs.

use std::hint::black_box;
use std::time::{Duration, Instant};

use seqsearch::{OperationCounts, SkewedSkipTable};

use crate::algo::{check_supported, AlgorithmSpec, BenchElement};
use crate::error::BenchError;
use crate::plan::{PatternPlan, SizePlan};
use crate::report::{speed, Baseline, BenchReport, BenchRow};

#[derive(Debug, Clone)]
pub struct BenchOptions {
    /// Each timed cell repeats its pattern set until at least this long.
    pub min_time: Duration,
    /// Each cell is timed this many times and the fastest trial is kept.
    pub trials: u32,
    /// When false, no timing is done and the timing columns are zero.
    pub timing: bool,
}

impl Default for BenchOptions {
    fn default() -> Self {
        BenchOptions {
            min_time: Duration::from_millis(200),
            trials: 1,
            timing: true,
        }
    }
}

/// A named search function, as run by the harness.
/// A boxed search function: `(text, pattern) -> first match`.
pub type SearchFn<'a, T> = Box<dyn FnMut(&[T], &[T]) -> Option<usize> + 'a>;

pub struct Searcher<'a, T> {
    pub name: String,
    pub search: SearchFn<'a, T>,
}

impl<'a, T> Searcher<'a, T> {
    pub fn new(
        name: impl Into<String>,
        search: impl FnMut(&[T], &[T]) -> Option<usize> + 'a,
    ) -> Self {
        Searcher {
            name: name.into(),
            search: Box::new(search),
        }
    }
}

/// Searchers for the given algorithms. NHAL searchers share one table.
pub fn searchers_for<T: BenchElement + 'static>(
    algorithms: &[AlgorithmSpec],
) -> Result<Vec<Searcher<'static, T>>, BenchError> {
    check_supported::<T>(algorithms)?;
    Ok(algorithms
        .iter()
        .map(|spec| {
            let algorithm = spec.algorithm;
            let mut table = SkewedSkipTable::new();
            Searcher::new(spec.name.clone(), move |t: &[T], p: &[T]| {
                T::search(algorithm, t, p, &mut table)
            })
        })
        .collect())
}

fn total_elements(n: usize, size_plan: &SizePlan<impl Sized>, positions: &[Option<usize>]) -> u64 {
    positions
        .iter()
        .map(|p| (p.unwrap_or(n) + size_plan.size) as u64)
        .sum()
}

fn cross_check<T: BenchElement>(
    name: &str,
    size_plan: &SizePlan<T>,
    expected: &[Option<usize>],
    actual: &[Option<usize>],
) -> Result<(), BenchError> {
    for ((pattern, e), a) in size_plan.patterns().zip(expected).zip(actual) {
        if e != a {
            return Err(BenchError::CorrectnessMismatch {
                algorithm: name.to_string(),
                pattern: T::describe(pattern),
                expected: *e,
                actual: *a,
            });
        }
    }
    Ok(())
}

fn time_passes<T, F>(
    text: &[T],
    size_plan: &SizePlan<T>,
    min: Duration,
    search: &mut F,
) -> f64
where
    F: FnMut(&[T], &[T]) -> Option<usize> + ?Sized,
{
    let start = Instant::now();
    let mut passes = 0u32;
    loop {
        for p in size_plan.patterns() {
            black_box(search(black_box(text), black_box(p)));
        }
        passes += 1;
        let elapsed = start.elapsed();
        if elapsed >= min {
            return elapsed.as_secs_f64() / passes as f64;
        }
    }
}

/// Runs every searcher over every pattern of the plan, checks each against
/// the first searcher's positions and, if enabled, times them.
pub fn run_searchers<T: BenchElement>(
    corpus: &str,
    text: &[T],
    plan: &PatternPlan<T>,
    searchers: &mut [Searcher<'_, T>],
    options: &BenchOptions,
) -> Result<BenchReport, BenchError> {
    let mut report = BenchReport::default();
    let n = text.len();
    for size_plan in &plan.sizes {
        let mut reference: Option<Vec<Option<usize>>> = None;
        let mut totals = Vec::with_capacity(searchers.len());
        for s in searchers.iter_mut() {
            let positions: Vec<Option<usize>> =
                size_plan.patterns().map(|p| (s.search)(text, p)).collect();
            match &reference {
                None => reference = Some(positions.clone()),
                Some(expected) => cross_check(&s.name, size_plan, expected, &positions)?,
            }
            totals.push(total_elements(n, size_plan, &positions));
        }
        // Trials run round-robin; each cell keeps its fastest trial.
        let mut baseline = 0.0;
        let mut best = vec![0.0; searchers.len()];
        if options.timing {
            baseline = f64::INFINITY;
            best.fill(f64::INFINITY);
            let mut dummy = |t: &[T], p: &[T]| -> Option<usize> {
                black_box((t.len(), p.len()));
                None
            };
            for _ in 0..options.trials.max(1) {
                baseline = baseline.min(time_passes(text, size_plan, options.min_time, &mut dummy));
                for (s, b) in searchers.iter_mut().zip(best.iter_mut()) {
                    *b = b.min(time_passes(text, size_plan, options.min_time, &mut *s.search));
                }
            }
        }
        report.baselines.push(Baseline {
            pattern_size: size_plan.size,
            seconds: baseline,
        });
        for ((s, total), t) in searchers.iter().zip(totals).zip(best) {
            let seconds = (t - baseline).max(0.0);
            report.rows.push(BenchRow {
                corpus: corpus.to_string(),
                algorithm: s.name.clone(),
                pattern_size: size_plan.size,
                total_elements: total,
                seconds,
                elements_per_us: speed(total, seconds),
                rates: None,
            });
        }
    }
    Ok(report)
}

/// Timed benchmark of named algorithms.
pub fn run_bench<T: BenchElement + 'static>(
    corpus: &str,
    text: &[T],
    plan: &PatternPlan<T>,
    algorithms: &[AlgorithmSpec],
    options: &BenchOptions,
) -> Result<BenchReport, BenchError> {
    let mut searchers = searchers_for::<T>(algorithms)?;
    run_searchers(corpus, text, plan, &mut searchers, options)
}

/// Counted run: per-element operation rates over the whole plan, with the
/// timing columns left at zero.
pub fn run_count<T: BenchElement>(
    corpus: &str,
    text: &[T],
    plan: &PatternPlan<T>,
    algorithms: &[AlgorithmSpec],
) -> Result<BenchReport, BenchError> {
    check_supported::<T>(algorithms)?;
    let mut counted = Vec::with_capacity(algorithms.len());
    for spec in algorithms {
        let (alg, scheme) = spec.counted().ok_or_else(|| BenchError::Unsupported {
            algorithm: spec.name.clone(),
            element: "counted",
        })?;
        counted.push((spec, alg, scheme.unwrap_or_else(T::default_scheme)));
    }
    let mut report = BenchReport::default();
    let n = text.len();
    for size_plan in &plan.sizes {
        let mut reference: Option<Vec<Option<usize>>> = None;
        for &(spec, alg, scheme) in &counted {
            let mut sum = OperationCounts::default();
            let mut positions = Vec::with_capacity(size_plan.len());
            for p in size_plan.patterns() {
                let (pos, c) = T::search_counted(alg, scheme, text, p);
                sum += c;
                positions.push(pos);
            }
            match &reference {
                None => reference = Some(positions.clone()),
                Some(expected) => cross_check(&spec.name, size_plan, expected, &positions)?,
            }
            let total = total_elements(n, size_plan, &positions);
            report.rows.push(BenchRow {
                corpus: corpus.to_string(),
                algorithm: spec.name.clone(),
                pattern_size: size_plan.size,
                total_elements: total,
                seconds: 0.0,
                elements_per_us: 0.0,
                rates: Some(sum.per_element(total)),
            });
        }
    }
    Ok(report)
}
