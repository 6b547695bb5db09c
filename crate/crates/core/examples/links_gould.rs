//! Links-Gould `LG^{n,1}(L; tau, -1)` for n = 1..=3.
//!
//! `cargo run --release --example links_gould -- "3; 1 -2 1 -2"`

use qlk::{links_gould_qm1, parse_braid};

fn main() -> qlk::Result<()> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "3; 1 -2 1 -2".to_string());
    let b = parse_braid(&text)?;
    for n in 1..=3 {
        let lg = links_gould_qm1(&b, n)?;
        println!("LG^({n},1) = {lg}");
    }
    Ok(())
}
