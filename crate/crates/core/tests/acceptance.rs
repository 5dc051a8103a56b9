//! Acceptance run: one PASS/FAIL line per criterion, followed by the
//! failing instances and notes of each suite.
//!
//! Criteria listed in `KNOWN_FAILURES` check a printed statement that does
//! not hold as printed; they are reported as FAIL but do not fail the run.
//! Pass suite ids or numbers as arguments to run a subset.

use std::process::ExitCode;
use std::time::Instant;

use qschur::suites::{self, Status};

fn main() -> ExitCode {
    // libtest-style flags passed by `cargo test` are ignored
    let wanted: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut unexpected = Vec::new();
    for suite in suites::all() {
        if !wanted.is_empty() && !wanted.iter().any(|w| suites::find(w).is_some_and(|s| s.id == suite.id)) {
            continue;
        }
        let start = Instant::now();
        let report = suite.run();
        println!("{} [{:.1}s]", report.line(), start.elapsed().as_secs_f64());
        for d in report.details() {
            println!("    {d}");
        }
        if report.status == Status::Fail && !report.known_failure() {
            unexpected.push(report.suite);
        }
    }
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        eprintln!("unexpected failures: {}", unexpected.join(", "));
        ExitCode::FAILURE
    }
}
