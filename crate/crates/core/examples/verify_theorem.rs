//! Checks the closed-form paired degree against exact span degrees.
//!
//! Usage: `cargo run --release --example verify_theorem -- [max_n]`

use johnson_slice::degree::verify_paired_theorem;
use johnson_slice::Result;

fn main() -> Result<()> {
    let max_n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    let report = verify_paired_theorem(max_n)?;
    println!("{} cases up to n = {max_n}, {} mismatches", report.cases, report.mismatches.len());
    for c in &report.mismatches {
        println!("  {c:?}");
    }
    Ok(())
}
