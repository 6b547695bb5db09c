//! Prints the framing-normalized braiding of a model as JSON.
//!
//! `cargo run --example ribbon_dump -- 2` (Links-Gould n = 2; 0 for sl2)

use qlk::{build_lg_qm1_ribbon, build_sl2_ribbon};

fn main() -> qlk::Result<()> {
    let n: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    let rib = if n == 0 { build_sl2_ribbon() } else { build_lg_qm1_ribbon(n)? };
    println!("{}", serde_json::to_string_pretty(&rib.to_json())?);
    eprintln!("{} nonzero braiding entries", rib.braiding().nnz());
    Ok(())
}
