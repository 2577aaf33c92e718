//! Acceptance suite: one PASS/FAIL line per criterion.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use cyclesieve::verify::{run, Caps, Suite};

const CRITERIA: [(usize, Suite, &str, u64); 11] = [
    (1, Suite::Kw, "KW series equals the induced-character oracle, n ≤ 8", 60),
    (2, Suite::Triple, "NFD, flex-fiber and maj_n-fiber content GFs agree, n ≤ 8", 60),
    (3, Suite::Csp, "maj sieving on every W_α (n ≤ 8), flex sieving on 200 random sets per n ≤ 6", 120),
    (4, Suite::Roots, "SYT maj polynomials at roots of unity give characters, n ≤ 8", 60),
    (5, Suite::Stembridge, "Stembridge series equals oracle and orbit routes, ν ⊢ n ≤ 7", 300),
    (6, Suite::Schocker, "Schocker formula equals plethysm and necklace multisets", 300),
    (7, Suite::Frobenius, "graded Frobenius series three ways and its specialization", 300),
    (8, Suite::Lie, "higher Lie modules equal the descent-class expansion, n ≤ 6", 120),
    (9, Suite::Symmetry, "gcd, reordering and ω symmetries", 120),
    (10, Suite::Mash, "mash checker witnesses and positive cases", 60),
    (11, Suite::Kernel, "plethysm identities, basis round trips, μ_f paths", 30),
];

fn main() -> ExitCode {
    let caps = Caps::default();
    let mut all_passed = true;
    for (number, suite, description, budget) in CRITERIA {
        let start = Instant::now();
        let outcome = run(suite, &caps);
        let elapsed = start.elapsed();
        let over_budget = elapsed > Duration::from_secs(budget);
        let (passed, detail) = match &outcome {
            Ok(report) if report.passed() => (true, format!("{} checks", report.checks)),
            Ok(report) => (
                false,
                format!("{} of {} checks failed; first: {}", report.failures.len(), report.checks, report.failures[0]),
            ),
            Err(e) => (false, format!("error: {e}")),
        };
        let passed = passed && !over_budget;
        all_passed &= passed;
        let budget_note = if over_budget { format!(", over the {budget}s budget") } else { String::new() };
        println!(
            "{} criterion {number:>2} [{suite}]: {description} ({detail}, {:.2}s{budget_note})",
            if passed { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
        );
    }
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
