use thiserror::Error;

use crate::laurent::{LaurentPoly, Var};

#[derive(Debug, Error)]
pub enum Error {
    #[error("variable clash: cannot combine polynomials in `{0}` and `{1}`")]
    VariableClash(Var, Var),

    #[error("cannot evaluate a Laurent polynomial at z = 0")]
    PoleAtZero,

    #[error("the zero polynomial has no unit-normal form")]
    ZeroPolynomial,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("generator index {index} out of range for a braid on {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },

    #[error("degenerate parameter: {0}")]
    DegenerateParameter(String),

    #[error("representations are defined over different q")]
    QMismatch,

    #[error("closure trace is not a scalar multiple of the identity")]
    NotProportionalToIdentity { residual: Vec<Vec<LaurentPoly>> },

    #[error("numeric closure trace is not proportional to the identity (spread {spread:e})")]
    NotProportionalNumeric { spread: f64 },

    #[error("matrices are not proportional (spread {spread:e})")]
    NotProportional { spread: f64 },

    #[error("state space of 2^{bits} basis vectors exceeds the budget of 2^{budget} (raise --budget)")]
    BudgetExceeded { bits: u32, budget: u32 },

    #[error("polynomial division was not exact")]
    NonExactDivision,

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
