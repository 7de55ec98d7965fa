//! Runs every acceptance suite and prints one line per criterion.

use std::process::ExitCode;
use std::time::Duration;

use postpfa::suite::{run_suite, suites, SuiteOptions};

fn time_limit(id: u32) -> Option<Duration> {
    match id {
        1 => Some(Duration::from_secs(1)),
        2 => Some(Duration::from_secs(10)),
        4 => Some(Duration::from_secs(300)),
        7 => Some(Duration::from_secs(30)),
        _ => None,
    }
}

fn main() -> ExitCode {
    let opts = SuiteOptions::default();
    let mut failed = 0;
    for (id, name) in suites() {
        let (ok, detail) = match run_suite(id, &opts) {
            Ok(run) => {
                let slow = time_limit(id).filter(|&l| run.elapsed > l);
                let rows = run.report.rows.len();
                let bad = run.report.failures().count();
                let mut detail = format!("{rows} rows, {:.2?}", run.elapsed);
                if let Some(l) = slow {
                    detail.push_str(&format!(", over the {l:?} limit"));
                }
                for r in run.report.failures() {
                    detail.push_str(&format!("\n    failed: {} {} on {}: {} {}", r.construction, r.parameters, r.input, r.exact, r.bound));
                }
                (run.passed() && bad == 0 && slow.is_none(), detail)
            }
            Err(e) => (false, format!("error: {e}")),
        };
        if !ok {
            failed += 1;
        }
        println!("criterion {id:>2} {name:<15} {} ({detail})", if ok { "PASS" } else { "FAIL" });
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
