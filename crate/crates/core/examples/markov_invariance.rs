//! Invariance of the closure invariants under conjugation and stabilization.
//!
//! `cargo run --example markov_invariance`

use qlk::engine::Evaluator;
use qlk::{build_lg_qm1_ribbon, build_sl2_ribbon, BraidWord, Sign};

fn main() -> qlk::Result<()> {
    let eval = Evaluator::default();
    let ribbons = [build_sl2_ribbon(), build_lg_qm1_ribbon(2)?];
    for seed in 0..5 {
        let b = BraidWord::random(3, 6, seed)?;
        let variants = [b.conjugate(1, Sign::Pos)?, b.conjugate(2, Sign::Neg)?, b.stabilize(Sign::Pos), b.stabilize(Sign::Neg)];
        for rib in &ribbons {
            let base = eval.invariant(&b, rib)?.scalar;
            let same = variants.iter().all(|v| eval.invariant(v, rib).map(|r| r.scalar == base).unwrap_or(false));
            println!("{:<24} {:<6} {base}  moves preserve it: {same}", b.to_string(), rib.model().to_string());
        }
    }
    Ok(())
}
