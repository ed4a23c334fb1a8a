//! Runs every acceptance criterion and prints one line per criterion,
//! followed by its sub-checks with the tolerances they were held to.

use std::process::ExitCode;

use pnt_lab::verify::{criteria, run_criterion, CheckClass, Lab};

fn main() -> ExitCode {
    let lab = Lab::new();
    let mut failed = Vec::new();
    println!("\nrunning {} acceptance criteria", criteria().len());
    for c in criteria() {
        let outcome = run_criterion(&c, &lab);
        println!("{}", outcome.summary_line());
        for check in &outcome.checks {
            let class = match check.class {
                CheckClass::Hard => "hard",
                CheckClass::Envelope => "envelope",
            };
            let status = if check.passed { "ok" } else { "FAILED" };
            println!("        {status:<6} {class:<8} {} ({})", check.label, check.detail);
        }
        if !outcome.passed() {
            failed.push(outcome.id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all criteria passed\n");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}\n");
        ExitCode::FAILURE
    }
}
