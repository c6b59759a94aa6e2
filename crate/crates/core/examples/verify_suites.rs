//! Runs every verification suite with small budgets and prints the reports.

use maxplus_walk::verify::{run_suite, Suite, VerifyOptions};
use maxplus_walk::Error;

fn main() -> Result<(), Error> {
    let options = VerifyOptions {
        seed: 7,
        trials: Some(10),
        ..VerifyOptions::default()
    };
    let mut failed = 0;
    for suite in Suite::ALL {
        let report = run_suite(suite, &options)?;
        print!("{report}");
        if !report.passed() {
            failed += 1;
        }
    }
    println!("{failed} suite(s) failed");
    Ok(())
}
