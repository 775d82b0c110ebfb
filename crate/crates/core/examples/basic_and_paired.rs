//! Builds basic and paired functions on C([7], 3) and prints their blocks.

use johnson_slice::{basic, paired, BasicSpec, Block, PairedSpec, Result, SliceFunction};

fn show(name: &str, f: &SliceFunction) {
    let blocks: Vec<String> = f
        .support()
        .map(|b| b.labels().iter().map(ToString::to_string).collect::<String>())
        .collect();
    println!("{name}: {} blocks  {}", f.support_len(), blocks.join(" "));
}

fn main() -> Result<()> {
    let (n, k) = (7, 3);
    let b = |l: &[usize]| Block::from_labels(l, n);

    let pencil = basic(BasicSpec::new(b(&[1])?, b(&[1, 2, 3, 4, 5, 6, 7])?)?, n, k)?;
    show("pencil f_{1},V", &pencil);

    let f = basic(BasicSpec::new(Block::EMPTY, b(&[1, 2, 3, 4])?)?, n, k)?;
    show("f_{},1234", &f);

    let p = paired(PairedSpec::new(b(&[1])?, b(&[6, 7])?)?, n, k)?;
    show("p_{1},{67}", &p);
    println!("json: {}", p.to_json());
    Ok(())
}
