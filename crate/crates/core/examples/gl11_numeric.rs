//! The bosonized gl(1|1) model evaluated numerically, compared with the
//! Alexander polynomial at `s = a^{-1}`.
//!
//! `cargo run --example gl11_numeric`

use num_complex::Complex64;
use qlk::engine::Evaluator;
use qlk::ribbon::numeric::build_gl11_numeric;
use qlk::{alexander, parse_braid};

fn main() -> qlk::Result<()> {
    let rep = build_gl11_numeric(Complex64::new(0.8, 0.9), Complex64::new(0.3, -0.2), 1, Complex64::new(1.5, 0.0))?;
    println!("q = {}, alpha = {}, j = {:.6}, s-sign = {:.6}", rep.q, rep.alpha, rep.j, rep.s_sign());
    for text in ["2; 1 1 1", "3; 1 -2 1 -2", "2; 1 1", "4; 1 1 2 -1 -3 2 -3"] {
        let b = parse_braid(text)?;
        let numeric = Evaluator::default().gl11_numeric_invariant(&b, &rep, 1e-9)?;
        let exact = alexander(&b)?.eval_complex(rep.a.inv())?;
        println!("{text:<24} gl(1|1): {numeric:.10}  Δ(a^-1): {exact:.10}  |diff| = {:.1e}", (numeric - exact).norm());
    }
    Ok(())
}
