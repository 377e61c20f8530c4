//! Runs the verification suite and prints the report; `--structured` prints
//! JSON lines instead.

use surface_braid::{run_suite, SuiteConfig};

fn main() {
    let report = run_suite(&SuiteConfig::default());
    if std::env::args().any(|a| a == "--structured") {
        print!("{}", report.to_json_lines());
    } else {
        print!("{}", report.to_text());
    }
    std::process::exit(if report.all_passed() { 0 } else { 1 });
}
