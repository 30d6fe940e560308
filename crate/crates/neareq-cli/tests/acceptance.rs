//! Acceptance suite: one test per verification criterion, run at full
//! scale with fixed seeds. Each test prints its pass/fail line and the
//! criterion's key values.

use std::path::Path;
use std::process::Command;
use std::time::Instant;

use neareq_cli::verify::{run_criterion, Scale};

const SEED: u64 = 42;

fn run(id: usize, budget_secs: f64) {
    let dir = tempfile::tempdir().unwrap();
    let started = Instant::now();
    let report = run_criterion(id, Scale::Full, SEED, dir.path()).expect("criterion runs");
    let elapsed = started.elapsed().as_secs_f64();

    println!(
        "criterion {}: {} ({}) in {elapsed:.2}s",
        report.id,
        if report.passed { "PASS" } else { "FAIL" },
        report.label
    );
    for detail in &report.details {
        println!("    {detail}");
    }
    assert!(report.passed, "criterion {id} failed: {:?}", report.details);
    assert!(
        elapsed < budget_secs,
        "criterion {id} took {elapsed:.1}s, budget {budget_secs}s"
    );
}

#[test]
fn criterion_1_security_grid_nash() {
    run(1, 60.0);
}

#[test]
fn criterion_2_security_mixed_bound() {
    run(2, 10.0);
}

#[test]
fn criterion_3_security_monte_carlo() {
    run(3, 30.0);
}

#[test]
fn criterion_4_tcp_bounds() {
    run(4, 10.0);
}

#[test]
fn criterion_5_netform_stability() {
    run(5, 60.0);
}

#[test]
fn criterion_6_netform_epsilon_band() {
    run(6, 10.0);
}

#[test]
fn criterion_7_determinism() {
    // two fresh `verify --scale small` processes with the same seed must
    // print identical summaries and leave byte-identical artifacts
    let started = Instant::now();
    let dir = tempfile::tempdir().unwrap();
    let out_a = dir.path().join("a");
    let out_b = dir.path().join("b");

    let run_verify = |out: &Path| {
        Command::new(env!("CARGO_BIN_EXE_neareq"))
            .args(["verify", "--scale", "small", "--seed", "42", "--out"])
            .arg(out)
            .output()
            .expect("binary runs")
    };
    let first = run_verify(&out_a);
    let second = run_verify(&out_b);
    let elapsed = started.elapsed().as_secs_f64();

    assert_eq!(
        first.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&first.stderr)
    );
    assert_eq!(second.status.code(), Some(0));
    assert_eq!(
        first.stdout,
        second.stdout,
        "summaries differ:\n{}\n---\n{}",
        String::from_utf8_lossy(&first.stdout),
        String::from_utf8_lossy(&second.stdout)
    );

    let list = |root: &Path| -> Vec<(String, Vec<u8>)> {
        let mut files = Vec::new();
        let mut stack = vec![root.to_path_buf()];
        while let Some(current) = stack.pop() {
            for entry in std::fs::read_dir(&current).unwrap() {
                let path = entry.unwrap().path();
                if path.is_dir() {
                    stack.push(path);
                } else {
                    files.push((
                        path.strip_prefix(root)
                            .unwrap()
                            .to_string_lossy()
                            .into_owned(),
                        std::fs::read(&path).unwrap(),
                    ));
                }
            }
        }
        files.sort();
        files
    };
    let files_a = list(&out_a);
    let files_b = list(&out_b);
    assert!(!files_a.is_empty());
    assert_eq!(files_a, files_b, "artifacts differ between runs");

    println!(
        "criterion 7: PASS (determinism) in {elapsed:.2}s, {} artifacts compared",
        files_a.len()
    );
    assert!(elapsed < 120.0, "criterion 7 took {elapsed:.1}s");
}
