//! All 2-(6,3,2) designs are anti-complementary, and each meets every
//! {K, K^∁} in exactly one block.

use johnson_slice::combinatorics::{complement, slice_blocks};
use johnson_slice::designs::{design_orthogonality_check, hartman_anticomplementary_check, search_designs, DesignParams};
use johnson_slice::{Result, SliceFunction};

fn main() -> Result<()> {
    let params = DesignParams::new(2, 6, 3, 2)?;
    let designs = search_designs(&params)?;
    println!("{} designs with parameters 2-(6,3,2)", designs.len());
    let ground = johnson_slice::GroundSet::new(6)?;
    let mut all_ok = true;
    for d in &designs {
        let anti = hartman_anticomplementary_check(d)?;
        let mut meets_once = true;
        for k in slice_blocks(6, 3)? {
            let a = SliceFunction::from_blocks(6, 3, [k, complement(k, ground)])?;
            let r = design_orthogonality_check(&a, d, 2)?;
            meets_once &= r.holds() && r.intersection == 1;
        }
        all_ok &= anti && meets_once;
        println!("{:?}  anti-complementary {anti}  meets each pair once {meets_once}", d);
    }
    println!("all hold: {all_ok}");
    Ok(())
}
