//! Exact minimal sizes at tiny scale, next to the divisibility and LP bounds.

use johnson_slice::bounds::{conjecture_value, delta, lp_bound, m1_bruteforce};
use johnson_slice::rational::round_2dp;
use johnson_slice::Result;

fn main() -> Result<()> {
    for (n, k, t, cap) in [(6, 3, 2, 2), (6, 3, 3, 1), (5, 2, 0, 10), (5, 2, 1, 4), (6, 3, 1, 10), (7, 3, 2, 6)] {
        let found = m1_bruteforce(n, k, t, cap)?;
        let lp = lp_bound(n, k.min(n - k), t.min(k.min(n - k)))?;
        let size = found.as_ref().map_or(format!("none <= {cap}"), |r| r.size.to_string());
        println!(
            "m1({n},{k},{t}) = {size}  delta {}  lp {}  {}",
            delta(n, k, t)?,
            round_2dp(&lp),
            conjecture_value(n, k, t.min(k.min(n - k)))?
        );
        if let Some(r) = found {
            println!("  witness {:?}", r.witness);
        }
    }
    Ok(())
}
