//! Prints the bound tables for t = 2, 3, 4 as CSV.

use johnson_slice::bounds::{bound_table, default_rows, table_csv};
use johnson_slice::Result;

fn main() -> Result<()> {
    for t in 2..=4 {
        let rows = bound_table(t, &default_rows(t))?;
        print!("{}", table_csv(&rows));
        println!();
    }
    Ok(())
}
