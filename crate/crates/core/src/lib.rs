//! Exact braid-closure evaluation of two quantum link invariants: the
//! Alexander-Conway polynomial from the unrolled `sl(2)` model at `q = i`,
//! and the Links-Gould invariant `LG^{n,1}(L; tau, -1)`, whose local
//! braiding is an interleaved tensor power of the `sl(2)` one.
//!
//! ```
//! use qlk::{alexander, links_gould_qm1, parse_braid, LaurentPoly};
//!
//! let trefoil = parse_braid("2; 1 1 1").unwrap();
//! let delta = alexander(&trefoil).unwrap();
//! assert_eq!(delta.unit_normalize().unwrap(), "s^2 - 1 + s^-2".parse::<LaurentPoly>().unwrap());
//! let lg = links_gould_qm1(&trefoil, 2).unwrap();
//! assert_eq!(lg.unit_normalize().unwrap(), "tau^4 - 2*tau^2 + 3 - 2*tau^-2 + tau^-4".parse().unwrap());
//! ```
//!
//! Modules:
//! - [`laurent`]: integer Laurent polynomials in `s` or `tau`;
//! - [`braid`]: braid words and Markov moves;
//! - [`ribbon`]: framing-normalized braidings, pivots, and numeric 2-dim modules;
//! - [`engine`]: column-at-a-time partial traces of braid closures;
//! - [`oracle`]: independent Alexander polynomial via reduced Burau;
//! - [`hopfcheck`]: numeric checks of the R-matrix identities;
//! - [`cli`]: the `qlk` command line.
//!
//! Runnable examples live in `examples/`: `alexander`, `links_gould`,
//! `verify_theorem`, `markov_invariance`, `hopf_checks`, `ribbon_dump` and
//! `gl11_numeric`.

pub mod braid;
pub mod cli;
pub mod corpus;
pub mod engine;
pub mod error;
pub mod hopfcheck;
pub mod laurent;
pub mod matrix;
pub mod oracle;
pub mod ribbon;
pub mod sparse;

pub use braid::{parse_braid, BraidWord, Letter, Sign};
pub use engine::{alexander, closure_trace, invariant, links_gould_qm1, verify_theorem, Evaluator, InvariantResult};
pub use error::{Error, Result};
pub use laurent::{LaurentPoly, Var};
pub use oracle::alexander_oracle;
pub use ribbon::{build_lg_qm1_ribbon, build_sl2_ribbon, Model, RibbonData};
