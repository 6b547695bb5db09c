//! Numeric R-matrix identity checks on two-dimensional modules.
//!
//! `cargo run --example hopf_checks -- 42`

use qlk::hopfcheck::{run_all, HopfSuite};

fn main() -> qlk::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    let report = run_all(&HopfSuite { seed, ..HopfSuite::default() })?;
    for r in &report {
        println!("{:<26} samples={:<3} max_residual={:.2e} {}", r.name, r.samples, r.max_residual, if r.pass { "ok" } else { "FAIL" });
    }
    Ok(())
}
