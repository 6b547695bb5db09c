//! Alexander-Conway polynomial of a braid closure, from the quantum model
//! and from the Burau oracle.
//!
//! `cargo run --example alexander -- "3; 1 1 1 2 -1 2"`

use qlk::{alexander, alexander_oracle, parse_braid};

fn main() -> qlk::Result<()> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "2; 1 1 1".to_string());
    let b = parse_braid(&text)?;
    let quantum = alexander(&b)?;
    let oracle = alexander_oracle(&b)?;
    println!("braid      {} ({})", b, b.to_sigma_notation());
    println!("quantum    {quantum}");
    println!("in t       {}", quantum.render_halved("t"));
    println!("Burau      {oracle}");
    Ok(())
}
