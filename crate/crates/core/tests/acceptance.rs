//! Acceptance suite: every check is an exact equality. Prints one line per
//! criterion and exits non-zero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use deligne::verify::{self, CheckResult};

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> CheckResult); 10] = [
        ("diagram calculus", verify::diagrams),
        ("semisimplicity probe", verify::gram),
        ("dimension interpolation", verify::dims),
        ("structural identities", verify::identities),
        ("central characters", verify::center),
        ("Stanley/Kostant series", verify::kostant),
        ("necklace Hilbert series", verify::necklaces),
        ("affine characters", verify::affine),
        ("Sugawara constants", verify::sugawara),
        ("property suites", || verify::properties(0x5eed)),
    ];
    let mut failed = 0;
    for (title, run) in criteria {
        let start = Instant::now();
        let result = run();
        let status = if result.passed() { "PASS" } else { "FAIL" };
        println!(
            "[{status}] criterion {:>2}: {title} ({} checks, {:.2?})",
            result.id,
            result.checks,
            start.elapsed()
        );
        for msg in &result.failures {
            println!("         {msg}");
        }
        if !result.passed() {
            failed += 1;
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
