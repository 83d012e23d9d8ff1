use std::io::Write;
use std::time::Duration;

use seqsearch::BuiltinScheme;
use seqsearch_bench::*;

fn naive<T: PartialEq>(text: &[T], pattern: &[T]) -> Option<usize> {
    if pattern.len() > text.len() {
        return None;
    }
    (0..=text.len() - pattern.len()).find(|&k| text[k..k + pattern.len()] == *pattern)
}

fn file_with(bytes: &[u8]) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(bytes).unwrap();
    f
}

fn no_timing() -> BenchOptions {
    BenchOptions {
        timing: false,
        ..BenchOptions::default()
    }
}

#[test]
fn bundled_cases_load_from_disk_too() {
    let f = file_with(SMALL_TXT.as_bytes());
    let loaded = TestCaseFile::load(f.path()).unwrap();
    assert_eq!(loaded, TestCaseFile::bundled());
    assert_eq!(loaded.cases.len(), 6);
}

#[test]
fn corrupted_case_file() {
    let f = file_with(b"comment\ntext\npattern\ncomment\ntext\n");
    let err = TestCaseFile::load(f.path()).unwrap_err();
    assert!(matches!(err, BenchError::UnexpectedEof));
    assert_eq!(err.to_string(), "Unexpected end of file");
}

#[test]
fn corpus_files() {
    let f = file_with(b"a b  c\n");
    assert_eq!(
        load_corpus(f.path(), CorpusKind::Words).unwrap(),
        Corpus::Words(vec!["a".into(), "b".into(), "c".into()])
    );
    let f = file_with(&[0x01, 0x00, 0xff, 0xee, 0x07]);
    assert_eq!(
        load_corpus(f.path(), CorpusKind::Random16).unwrap(),
        Corpus::Symbols(vec![1, 0xeeff])
    );
    let f = file_with(b"acgt");
    assert_eq!(
        load_corpus(f.path(), CorpusKind::Dna).unwrap(),
        Corpus::Bytes(b"acgt".to_vec())
    );
    let f = file_with(b" \n\t");
    assert!(matches!(
        load_corpus(f.path(), CorpusKind::Words),
        Err(BenchError::EmptyCorpus)
    ));
    assert!(matches!(
        load_corpus(std::path::Path::new("/no/such/corpus"), CorpusKind::Text),
        Err(BenchError::Io { .. })
    ));
}

#[test]
fn plan_with_dictionary() {
    let text = b"the cat sat on the mat with another cat".to_vec();
    let dict = Dictionary::from_words(
        ["cat", "dog", "mat", "cow", "owl", "sheep"]
            .iter()
            .map(|w| w.as_bytes().to_vec()),
    );
    let plan = build_pattern_plan(&text, &[3, 5], 2, Some(&dict)).unwrap();
    assert_eq!(plan.sizes[0].increment, (text.len() - 3) / 2);
    assert_eq!(plan.sizes[0].dictionary_patterns, vec![b"cat".to_vec(), b"mat".to_vec()]);
    assert_eq!(plan.sizes[0].len(), 4);
    assert_eq!(plan.sizes[1].dictionary_patterns, vec![b"sheep".to_vec()]);
    assert!(matches!(
        build_pattern_plan(&text, &[], 2, None),
        Err(BenchError::EmptyPlan)
    ));
}

#[test]
fn totals_follow_positions() {
    let text = b"abracadabra abracadabra".to_vec();
    let dict = Dictionary::from_words([b"zzzz".to_vec(), b"cada".to_vec()]);
    let plan = build_pattern_plan(&text, &[4], 3, Some(&dict)).unwrap();
    let specs = AlgorithmSpec::parse_list("sf,kmp,l,al,hal,nhal", BuiltinScheme::Byte).unwrap();
    let report = run_bench("t", &text, &plan, &specs, &no_timing()).unwrap();
    let expected: u64 = plan.sizes[0]
        .patterns()
        .map(|p| (naive(&text, p).unwrap_or(text.len()) + 4) as u64)
        .sum();
    assert_eq!(report.rows.len(), specs.len());
    for row in &report.rows {
        assert_eq!(row.total_elements, expected);
        assert_eq!(row.seconds, 0.0);
        assert_eq!(row.elements_per_us, 0.0);
    }
}

#[test]
fn faulty_searcher_is_caught() {
    let text: Vec<u8> = b"xyzxyzxyzabcxyz".to_vec();
    let plan = build_pattern_plan(&text, &[3], 4, None).unwrap();
    let mut searchers = vec![
        Searcher::new("naive", |t: &[u8], p: &[u8]| naive(t, p)),
        Searcher::new("broken", |t: &[u8], p: &[u8]| naive(t, p).map(|k| k + 1)),
    ];
    let err = run_searchers("t", &text, &plan, &mut searchers, &no_timing()).unwrap_err();
    match &err {
        BenchError::CorrectnessMismatch {
            algorithm,
            expected,
            actual,
            ..
        } => {
            assert_eq!(algorithm, "broken");
            assert_eq!(actual.unwrap(), expected.unwrap() + 1);
        }
        other => panic!("unexpected error {other:?}"),
    }
    assert!(err.to_string().starts_with("Incorrect result!"));
}

#[test]
fn timed_rows_satisfy_speed_definition() {
    let text = match generate_corpus(CorpusKind::Dna, 3, 20_000) {
        Corpus::Bytes(b) => b,
        _ => unreachable!(),
    };
    let plan = build_pattern_plan(&text, &[20, 40], 10, None).unwrap();
    let specs = AlgorithmSpec::parse_list("sf,hal4", BuiltinScheme::Byte).unwrap();
    let options = BenchOptions {
        min_time: Duration::from_millis(5),
        trials: 2,
        timing: true,
    };
    let report = run_bench("dna", &text, &plan, &specs, &options).unwrap();
    assert_eq!(report.baselines.len(), 2);
    for row in &report.rows {
        assert!(row.seconds > 0.0);
        let want = row.total_elements as f64 / 1e6 / row.seconds;
        assert!((row.elements_per_us - want).abs() <= 1e-9 * want);
    }
    let tsv = report.to_tsv();
    let header: Vec<&str> = tsv.lines().next().unwrap().split('\t').collect();
    assert_eq!(header, TIMING_COLUMNS);
    assert_eq!(tsv.lines().count(), 1 + 4);
}

#[test]
fn count_report_shape_and_determinism() {
    let text = match generate_corpus(CorpusKind::Words, 5, 3000) {
        Corpus::Words(w) => w,
        _ => unreachable!(),
    };
    let plan = build_pattern_plan(&text, &[1, 3], 20, None).unwrap();
    let specs = AlgorithmSpec::parse_list("sf,kmp,l,hal", BuiltinScheme::WordHead).unwrap();
    let a = run_count("words", &text, &plan, &specs).unwrap();
    let b = run_count("words", &text, &plan, &specs).unwrap();
    assert_eq!(a.to_tsv(), b.to_tsv());
    assert!(a.has_counts());
    let header: Vec<String> = a.to_tsv().lines().next().unwrap().split('\t').map(String::from).collect();
    let want: Vec<&str> = TIMING_COLUMNS.iter().chain(COUNT_COLUMNS.iter()).copied().collect();
    assert_eq!(header, want);
    for row in &a.rows {
        let r = row.rates.unwrap();
        assert!(r.comparisons > 0.0);
        assert_eq!(row.seconds, 0.0);
    }
}

#[test]
fn unsupported_combinations_rejected() {
    let words = vec!["a".to_string(), "b".to_string()];
    let plan = build_pattern_plan(&words, &[1], 1, None).unwrap();
    let specs = AlgorithmSpec::parse_list("sf,nhal", BuiltinScheme::WordHead).unwrap();
    assert!(matches!(
        run_bench("words", &words, &plan, &specs, &no_timing()),
        Err(BenchError::Unsupported { .. })
    ));
    assert!(matches!(
        run_count("words", &words, &plan, &specs),
        Err(BenchError::Unsupported { .. })
    ));
    assert!(matches!(
        AlgorithmSpec::parse("quick", BuiltinScheme::Byte),
        Err(BenchError::UnknownAlgorithm(_))
    ));
}

#[test]
fn random16_corpus_is_seeded() {
    assert_eq!(random16(42, 1000), random16(42, 1000));
    assert_ne!(random16(42, 1000), random16(43, 1000));
    let text = random16(42, 5000);
    let plan = build_pattern_plan(&text, &[6], 30, None).unwrap();
    let specs = AlgorithmSpec::parse_list("sf,l,hal,nhal", BuiltinScheme::Mod256).unwrap();
    let report = run_bench("random16", &text, &plan, &specs, &no_timing()).unwrap();
    assert_eq!(report.rows.len(), 4);
}
