//! One line per acceptance criterion. Every criterion is exact; the time
//! limits are the per-criterion budgets.

use std::process::ExitCode;

use steinberg_lab::suites::{run_suite, DEFAULT_SEED, SUITES};
use steinberg_lab::Caps;

fn main() -> ExitCode {
    let caps = Caps::default();
    let mut failed = Vec::new();
    println!("acceptance seed={DEFAULT_SEED} tolerance=exact");
    for suite in &SUITES {
        let report = match run_suite(suite, &caps, DEFAULT_SEED) {
            Ok(r) => r,
            Err(e) => {
                println!("criterion {:>2} {:<14} FAIL error: {e}", suite.criterion, suite.name);
                failed.push(suite.name);
                continue;
            }
        };
        let ok = report.pass() && report.within_limit();
        println!(
            "criterion {:>2} {:<14} {} rows={:<3} elapsed={:.3}s limit={}s",
            report.criterion,
            report.name,
            if ok { "PASS" } else { "FAIL" },
            report.rows.len(),
            report.elapsed.as_secs_f64(),
            report.limit.as_secs(),
        );
        for row in report.rows.iter().filter(|r| !r.pass) {
            println!("    {} {} {:?}", row.task, row.params, row.failures.iter().take(3).collect::<Vec<_>>());
        }
        if !ok {
            failed.push(suite.name);
        }
    }
    if failed.is_empty() {
        println!("acceptance: 13/13 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed {failed:?}");
        ExitCode::FAILURE
    }
}
