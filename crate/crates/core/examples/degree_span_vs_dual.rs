//! Degree of a few block sets, computed by pencil span and by the dual
//! distribution in the Johnson scheme.

use johnson_slice::scheme::{degree_via_dual, dual_distribution};
use johnson_slice::{degree_via_span, Block, Result, SliceFunction};

fn main() -> Result<()> {
    let (n, k) = (6, 3);
    let sets: [&[&[usize]]; 3] = [
        &[&[1, 2, 3], &[4, 5, 6]],
        &[&[1, 2, 3]],
        &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]],
    ];
    for blocks in sets {
        let y = SliceFunction::from_blocks(
            n,
            k,
            blocks.iter().map(|l| Block::from_labels(l, n)).collect::<Result<Vec<_>>>()?,
        )?;
        let b = dual_distribution(&y)?;
        println!(
            "{:?}\n  span degree {}  dual degree {}  b = [{}]",
            y,
            degree_via_span(&y)?,
            degree_via_dual(&y)?,
            b.to_pq().join(", ")
        );
    }
    Ok(())
}
