//! Lists the paired functions that are at most as large as a t-pencil.

use johnson_slice::bounds::{classify_paired_vs_pencil, paired_size, pencil_size, PairedVsPencil};
use johnson_slice::Result;

fn main() -> Result<()> {
    for n in 4..=11 {
        for k in 2..=n / 2 {
            for t in 1..k {
                for i in 0..=n {
                    for j in 0..=(n - i).min(i) {
                        let c = classify_paired_vs_pencil(n, k, t, i, j)?;
                        if matches!(c, PairedVsPencil::Smaller | PairedVsPencil::Equal) {
                            println!(
                                "n={n} k={k} t={t} i={i} j={j}: {c}  #p = {}  pencil = {}",
                                paired_size(n, k, i, j),
                                pencil_size(n, k, t)?
                            );
                        }
                    }
                }
            }
        }
    }
    Ok(())
}
