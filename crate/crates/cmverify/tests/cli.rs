use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use cmverify::Report;
use tempfile::TempDir;

fn cmverify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cmverify")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn report(path: &Path) -> Report {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn list_names_every_scenario() {
    let out = cmverify(&["list"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    for s in cmverify::registry() {
        assert!(text.contains(s.id), "{} missing", s.id);
    }
}

#[test]
fn passing_run_exits_zero_and_writes_report() {
    let dir = TempDir::new().unwrap();
    let out_path = dir.path().join("r.json");
    let out = cmverify(&["run", "--scenario", "semigroup-laws", "--out", out_path.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stdout));
    let r = report(&out_path);
    assert!(r.pass);
    assert_eq!(r.scenario, "semigroup-laws");
    assert_eq!(r.seed, cmverify::DEFAULT_SEED);
    assert!(!r.checks.is_empty());
}

#[test]
fn failing_check_exits_one() {
    let dir = TempDir::new().unwrap();
    let config = write(&dir, "c.toml", "[hilbert-axioms]\ntriples = 50\ntolerance = 0.0\n");
    let out_path = dir.path().join("r.json");
    let out = cmverify(&["run", "--scenario", "hilbert-axioms", "--config", &config, "--out", out_path.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    let r = report(&out_path);
    assert!(!r.pass);
    assert!(r.failures().count() > 0);
}

#[test]
fn usage_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    assert_eq!(code(&cmverify(&["run", "--scenario", "no-such-scenario"])), 2);
    assert_eq!(code(&cmverify(&["frobnicate"])), 2);
    assert_eq!(code(&cmverify(&["run"])), 2);

    let bad = [
        ("section.toml", "[no-such-scenario]\nx = 1\n"),
        ("key.toml", "[hilbert-axioms]\ntripels = 5\n"),
        ("type.toml", "[hilbert-axioms]\ntriples = \"many\"\n"),
        ("syntax.toml", "[hilbert-axioms\n"),
        ("seed.toml", "seed = -1\n"),
    ];
    for (name, text) in bad {
        let config = write(&dir, name, text);
        let out = cmverify(&["run", "--scenario", "hilbert-axioms", "--config", &config]);
        assert_eq!(code(&out), 2, "{name}");
        assert!(!out.stderr.is_empty(), "{name}");
    }
    let missing = dir.path().join("absent.toml");
    assert_eq!(code(&cmverify(&["run", "--scenario", "hilbert-axioms", "--config", missing.to_str().unwrap()])), 2);
}

#[test]
fn same_seed_gives_identical_reports() {
    let dir = TempDir::new().unwrap();
    let config = write(&dir, "c.toml", "seed = 11\n[hilbert-axioms]\ntriples = 100\n");
    let run_to = |name: &str, extra: &[&str]| {
        let path = dir.path().join(name);
        let mut args = vec!["run", "--scenario", "hilbert-axioms", "--config", &config, "--out", path.to_str().unwrap()];
        args.extend_from_slice(extra);
        assert_eq!(code(&cmverify(&args)), 0);
        report(&path)
    };
    let a = run_to("a.json", &[]);
    let b = run_to("b.json", &[]);
    assert_eq!(a.seed, 11);
    assert_eq!(a.body(), b.body());

    // the command-line seed overrides the config seed
    let c = run_to("c.json", &["--seed", "12"]);
    assert_eq!(c.seed, 12);
    assert_ne!(a.checks, c.checks);
}

#[test]
fn run_all_writes_one_report_per_scenario() {
    let dir = TempDir::new().unwrap();
    // shrink the expensive scenarios; the point is the array shape
    let config = write(
        &dir,
        "c.toml",
        "[generator-symmetry]\npairs = 2\npoints = 64\ntail_pairs = 2\n\
         [schrodinger-factorization]\nmembers = 2\npoints = 256\ntimes = [0.1]\n\
         [heat-factorization]\nmembers = 2\npoints = 256\ntimes = [0.1]\n\
         [eta-zeta-roundtrip]\nsamples = 1000\n",
    );
    let path = dir.path().join("all.json");
    let out = cmverify(&["run", "--scenario", "all", "--config", &config, "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stdout));
    let reports: Vec<Report> = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    let ids: Vec<_> = reports.iter().map(|r| r.scenario.as_str()).collect();
    let expected: Vec<_> = cmverify::registry().iter().map(|s| s.id).collect();
    assert_eq!(ids, expected);
}

#[test]
fn emit_writes_csv_series() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("s.csv");
    let out = cmverify(&["emit", "--scenario", "difference-quotient-rate", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let mut rows = csv::Reader::from_path(&path).unwrap();
    assert_eq!(rows.headers().unwrap(), vec!["x", "y", "series"]);
    let records: Vec<_> = rows.records().map(Result::unwrap).collect();
    assert!(!records.is_empty());
    for r in &records {
        assert!(r[0].parse::<f64>().unwrap().is_finite());
        assert!(r[1].parse::<f64>().unwrap().is_finite());
        assert!(!r[2].is_empty());
    }
}

#[test]
fn emit_without_series_is_a_usage_error_and_writes_nothing() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("s.csv");
    let out = cmverify(&["emit", "--scenario", "hilbert-axioms", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(!path.exists());
}
