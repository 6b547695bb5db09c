//! Checks `LG^{n,1}(L; tau, -1) = Δ_L(tau^2)^n` on the bundled corpus.
//!
//! `cargo run --release --example verify_theorem`

use qlk::corpus::bundled_corpus;
use qlk::verify_theorem;

fn main() -> qlk::Result<()> {
    let (mut exact, mut total) = (0, 0);
    for entry in bundled_corpus() {
        for n in 1..=3u32 {
            if n as usize * entry.braid.strands() > 12 {
                continue;
            }
            let rep = verify_theorem(&entry.braid, n)?;
            total += 1;
            exact += rep.equal_exactly() as usize;
            let status = match (rep.equal_exactly(), rep.equal_up_to_unit) {
                (true, _) => "exact",
                (false, true) => "up to unit",
                _ => "MISMATCH",
            };
            println!("{:<22} n={n}  {status}", entry.name);
        }
    }
    println!("{exact}/{total} equal without normalization");
    Ok(())
}
