//! Recovers {I, J} from the values of a paired function alone.

use johnson_slice::slice_fn::recover_paired_legs;
use johnson_slice::{paired, Block, PairedSpec, Result};

fn main() -> Result<()> {
    let n = 9;
    for (k, i, j) in [(3, &[1][..], &[8, 9][..]), (4, &[1, 2], &[3]), (3, &[], &[1, 2, 3, 4])] {
        let spec = PairedSpec::new(Block::from_labels(i, n)?, Block::from_labels(j, n)?)?;
        let g = paired(spec, n, k)?;
        match recover_paired_legs(&g) {
            Ok(Some((a, b))) => println!("k={k} I={i:?} J={j:?} -> {{{:?}, {:?}}}", a, b),
            Ok(None) => println!("k={k} I={i:?} J={j:?} -> not paired"),
            Err(e) => println!("k={k} I={i:?} J={j:?} -> {e}"),
        }
    }
    Ok(())
}
