//! Run the randomized verification suites.
//!
//!     cargo run --release --example verify_suites -- 42

use linkpass::suites::{run, Suite};

fn main() -> linkpass::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    for suite in Suite::ALL {
        let report = run(suite, seed)?;
        for c in &report.checks {
            let status = if c.passed() { "ok" } else { "FAILED" };
            println!("{suite:10} {:55} {:4} cases  {status}", c.name, c.cases);
        }
    }
    Ok(())
}
