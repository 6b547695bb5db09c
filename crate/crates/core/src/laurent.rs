//! Exact Laurent polynomials over the integers in a single variable.
//!
//! Exponents are integers in a half-power variable: `s = t^{1/2}` for the
//! Alexander side and `tau = t0^{1/2}` for the Links-Gould side. The
//! classical variables `t` and `t0` are obtained by halving exponents at
//! render time (see [`LaurentPoly::render_halved`]).
//!
//! Constant polynomials are variable-agnostic: they combine with a
//! polynomial in any variable and compare equal across tags.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Name of the formal variable of a [`LaurentPoly`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Var {
    S,
    Tau,
    T,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::S => "s",
            Var::Tau => "tau",
            Var::T => "t",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "s" => Ok(Var::S),
            "tau" => Ok(Var::Tau),
            "t" => Ok(Var::T),
            other => Err(Error::Parse(format!("unknown variable `{other}`"))),
        }
    }
}

/// A Laurent polynomial `sum c_k x^k` with arbitrary-precision integer
/// coefficients. No stored coefficient is ever zero.
#[derive(Clone, Debug)]
pub struct LaurentPoly {
    var: Var,
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero(var: Var) -> Self {
        LaurentPoly { var, terms: BTreeMap::new() }
    }

    pub fn one(var: Var) -> Self {
        Self::constant(var, 1)
    }

    pub fn constant(var: Var, c: impl Into<BigInt>) -> Self {
        Self::monomial(var, 0, c)
    }

    /// `c * x^exp`
    pub fn monomial(var: Var, exp: i64, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { var, terms }
    }

    /// The variable itself, `x^1`.
    pub fn x(var: Var) -> Self {
        Self::monomial(var, 1, 1)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(var: Var, terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut out = BTreeMap::new();
        for (e, c) in terms {
            accumulate(&mut out, e, c.into());
        }
        LaurentPoly { var, terms: out }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&e| e == 0)
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `x^exp` (zero when absent).
    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `Some((exp, coeff))` when the polynomial is a single term.
    pub fn as_monomial(&self) -> Option<(i64, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(&e, c)| (e, c))
        } else {
            None
        }
    }

    /// `Some(sign * x^k)` data when the polynomial is a unit of `Z[x, x^-1]`.
    pub fn as_unit(&self) -> Option<(i64, i32)> {
        let (e, c) = self.as_monomial()?;
        if c.is_one() {
            Some((e, 1))
        } else if (-c).is_one() {
            Some((e, -1))
        } else {
            None
        }
    }

    fn common_var(&self, other: &Self) -> Result<Var> {
        if self.var == other.var || other.is_constant() {
            Ok(self.var)
        } else if self.is_constant() {
            Ok(other.var)
        } else {
            Err(Error::VariableClash(self.var, other.var))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let var = self.common_var(other)?;
        let mut terms = self.terms.clone();
        for (&e, c) in &other.terms {
            accumulate(&mut terms, e, c.clone());
        }
        Ok(LaurentPoly { var, terms })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let var = self.common_var(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(var));
        }
        let (small, big) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut terms = BTreeMap::new();
        if let Some((e, c)) = small.as_monomial() {
            // product with a monomial cannot cancel
            for (&f, d) in &big.terms {
                terms.insert(e + f, c * d);
            }
        } else {
            for (&e, c) in &small.terms {
                for (&f, d) in &big.terms {
                    accumulate(&mut terms, e + f, c * d);
                }
            }
        }
        Ok(LaurentPoly { var, terms })
    }

    /// `self^n`, with `pow(p, 0) = 1`.
    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one(self.var);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Same exponent/coefficient data under a different variable tag.
    pub fn substitute_variable(&self, var: Var) -> Self {
        LaurentPoly { var, terms: self.terms.clone() }
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            var: self.var,
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.var);
        }
        LaurentPoly {
            var: self.var,
            terms: self.terms.iter().map(|(&e, d)| (e, d * c)).collect(),
        }
    }

    /// `x -> x^{-1}`
    pub fn mirror(&self) -> Self {
        LaurentPoly {
            var: self.var,
            terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Numeric evaluation `sum c_k z^k`.
    pub fn eval_complex(&self, z: Complex64) -> Result<Complex64> {
        if z == Complex64::new(0.0, 0.0) {
            return Err(Error::PoleAtZero);
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for (&e, c) in &self.terms {
            let c = c.to_f64().unwrap_or(f64::NAN);
            acc += z.powi(e as i32) * c;
        }
        Ok(acc)
    }

    /// Canonical representative of `{ +-x^k * self }`.
    ///
    /// Degrees are centred (`max + min` is 0 or 1) and the highest-degree
    /// coefficient is positive.
    pub fn unit_normalize(&self) -> Result<Self> {
        let (Some(lo), Some(hi)) = (self.min_degree(), self.max_degree()) else {
            return Err(Error::ZeroPolynomial);
        };
        let shifted = self.shift(-(lo + hi).div_euclid(2));
        if shifted.terms.values().next_back().is_some_and(|c| c.is_negative()) {
            Ok(-shifted)
        } else {
            Ok(shifted)
        }
    }

    /// Exact quotient `self / divisor` in `Z[x, x^-1]`.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let var = self.common_var(divisor)?;
        let Some((dlo, dhi)) = divisor.min_degree().zip(divisor.max_degree()) else {
            return Err(Error::NonExactDivision);
        };
        let lead = &divisor.terms[&dhi];
        let mut rem = self.substitute_variable(var);
        let mut quot = BTreeMap::new();
        while let Some(rhi) = rem.max_degree() {
            let rlo = rem.min_degree().unwrap_or(rhi);
            if rhi - rlo < dhi - dlo {
                return Err(Error::NonExactDivision);
            }
            let rc = &rem.terms[&rhi];
            if !(rc % lead).is_zero() {
                return Err(Error::NonExactDivision);
            }
            let q = LaurentPoly::monomial(var, rhi - dhi, rc / lead);
            rem = &rem - &(&q * divisor);
            let (e, c) = q.terms.into_iter().next().expect("nonzero quotient term");
            accumulate(&mut quot, e, c);
        }
        Ok(LaurentPoly { var, terms: quot })
    }

    /// JSON form: list of `[exponent, "coefficient"]` pairs, increasing exponent.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(e, c)| serde_json::json!([e, c.to_string()]))
                .collect(),
        )
    }

    pub fn from_json(var: Var, value: &serde_json::Value) -> Result<Self> {
        let bad = || Error::Parse(format!("bad polynomial JSON: {value}"));
        let pairs = value.as_array().ok_or_else(bad)?;
        let mut terms = Vec::with_capacity(pairs.len());
        for pair in pairs {
            let e = pair.get(0).and_then(|e| e.as_i64()).ok_or_else(bad)?;
            let c: BigInt = pair
                .get(1)
                .and_then(|c| c.as_str())
                .and_then(|c| c.parse().ok())
                .ok_or_else(bad)?;
            terms.push((e, c));
        }
        Ok(Self::from_terms(var, terms))
    }

    /// Renders with exponents halved, e.g. `s - s^-1` as `t^(1/2) - t^(-1/2)`.
    pub fn render_halved(&self, name: &str) -> String {
        render(self, name, |e| match e {
            2 => None,
            _ if e % 2 == 0 => Some((e / 2).to_string()),
            _ => Some(format!("({e}/2)")),
        })
    }
}

fn accumulate(terms: &mut BTreeMap<i64, BigInt>, e: i64, c: BigInt) {
    if c.is_zero() {
        return;
    }
    match terms.entry(e) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

fn render(p: &LaurentPoly, name: &str, exp: impl Fn(i64) -> Option<String>) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (&e, c)) in p.terms.iter().rev().enumerate() {
        let neg = c.is_negative();
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mag = c.abs();
        if e == 0 {
            out.push_str(&mag.to_string());
            continue;
        }
        if !mag.is_one() {
            out.push_str(&mag.to_string());
            out.push('*');
        }
        out.push_str(name);
        if let Some(x) = exp(e) {
            out.push('^');
            out.push_str(&x);
        }
    }
    out
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self, self.var.name(), |e| (e != 1).then(|| e.to_string())))
    }
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && (self.var == other.var || self.is_constant())
    }
}

impl Eq for LaurentPoly {}

impl std::hash::Hash for LaurentPoly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Parses the rendered form, e.g. `s^2 - 1 + s^-2` or `-2*tau + 3`.
    fn from_str(text: &str) -> Result<Self> {
        let err = |msg: &str| Error::Parse(format!("{msg} in polynomial `{text}`"));
        let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        if chars.is_empty() {
            return Err(err("empty input"));
        }
        let mut var: Option<Var> = None;
        let mut terms: Vec<(i64, BigInt)> = Vec::new();
        let mut i = 0;
        let read_int = |i: &mut usize| -> Option<i64> {
            let start = *i;
            if *i < chars.len() && chars[*i] == '-' {
                *i += 1;
            }
            while *i < chars.len() && chars[*i].is_ascii_digit() {
                *i += 1;
            }
            chars[start..*i].iter().collect::<String>().parse().ok()
        };
        while i < chars.len() {
            let mut sign = BigInt::one();
            if i > 0 || chars[i] == '-' || chars[i] == '+' {
                match chars.get(i) {
                    Some('+') => {}
                    Some('-') => sign = -sign,
                    _ => return Err(err("expected `+` or `-`")),
                }
                i += 1;
            }
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let mag: BigInt = if i > start {
                chars[start..i].iter().collect::<String>().parse().map_err(|_| err("bad coefficient"))?
            } else {
                BigInt::one()
            };
            let has_coeff = i > start;
            if has_coeff && chars.get(i) == Some(&'*') {
                i += 1;
            }
            let vstart = i;
            while i < chars.len() && chars[i].is_ascii_alphabetic() {
                i += 1;
            }
            let exp = if i > vstart {
                let name: String = chars[vstart..i].iter().collect();
                let v: Var = name.parse()?;
                if var.is_some_and(|w| w != v) {
                    return Err(err("mixed variables"));
                }
                var = Some(v);
                if chars.get(i) == Some(&'^') {
                    i += 1;
                    let paren = chars.get(i) == Some(&'(');
                    if paren {
                        i += 1;
                    }
                    let e = read_int(&mut i).ok_or_else(|| err("bad exponent"))?;
                    if paren {
                        if chars.get(i) != Some(&')') {
                            return Err(err("unclosed parenthesis"));
                        }
                        i += 1;
                    }
                    e
                } else {
                    1
                }
            } else if has_coeff {
                0
            } else {
                return Err(err("expected a term"));
            };
            terms.push((exp, sign * mag));
        }
        Ok(LaurentPoly::from_terms(var.unwrap_or(Var::S), terms))
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

// Operator forms panic on a variable clash; use the `checked_*` methods
// where the operands may come from different models.
macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$checked(rhs).expect("Laurent polynomial variable clash")
            }
        }
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        if self.is_constant() && !rhs.is_constant() {
            self.var = rhs.var;
        } else if self.var != rhs.var && !rhs.is_constant() {
            panic!("Laurent polynomial variable clash");
        }
        for (&e, c) in &rhs.terms {
            accumulate(&mut self.terms, e, c.clone());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(text: &str) -> LaurentPoly {
        text.parse().unwrap()
    }

    #[test]
    fn add_examples() {
        assert_eq!(p("s + s^-1") + p("-s"), p("s^-1"));
        assert_eq!(p("s^2 - 1") + LaurentPoly::zero(Var::S), p("s^2 - 1"));
        assert_eq!(p("s^2 - 1") + p("1 - s^-2"), p("s^2 - s^-2"));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(p("s - s^-1") * p("s + s^-1"), p("s^2 - s^-2"));
        assert_eq!(p("s - 1 + s^-1") * LaurentPoly::one(Var::S), p("s - 1 + s^-1"));
        assert_eq!(p("s - 1 + s^-1") * p("s - 1 + s^-1"), p("s^2 - 2*s + 3 - 2*s^-1 + s^-2"));
    }

    #[test]
    fn pow_examples() {
        let q = p("s - 1 + s^-1");
        assert_eq!(q.pow(1), q);
        assert!(q.pow(0).is_one());
        assert!(LaurentPoly::zero(Var::S).pow(0).is_one());
        assert_eq!(q.pow(2), p("s^2 - 2*s + 3 - 2*s^-1 + s^-2"));
    }

    #[test]
    fn variable_clash() {
        let a = p("s + 1");
        let b = p("tau + 1");
        assert!(matches!(a.checked_add(&b), Err(Error::VariableClash(Var::S, Var::Tau))));
        assert!(matches!(a.checked_mul(&b), Err(Error::VariableClash(..))));
        // constants adopt the other operand's variable
        assert_eq!(a.checked_add(&p("3")).unwrap().var(), Var::S);
        assert_eq!(p("3").checked_mul(&b).unwrap().var(), Var::Tau);
    }

    #[test]
    fn substitute_examples() {
        let q = p("s^2 - 1 + s^-2").substitute_variable(Var::Tau);
        assert_eq!(q.var(), Var::Tau);
        assert_eq!(q.to_string(), "tau^2 - 1 + tau^-2");
        assert!(LaurentPoly::one(Var::S).substitute_variable(Var::Tau).is_one());
        assert_eq!(LaurentPoly::x(Var::S).substitute_variable(Var::Tau), LaurentPoly::x(Var::Tau));
    }

    #[test]
    fn eval_examples() {
        let one = Complex64::new(1.0, 0.0);
        assert!(p("s - s^-1").eval_complex(one).unwrap().norm() < 1e-15);
        assert!((p("s^2 - 1 + s^-2").eval_complex(one).unwrap() - one).norm() < 1e-15);
        let half = p("s^-1").eval_complex(Complex64::new(2.0, 0.0)).unwrap();
        assert!((half - Complex64::new(0.5, 0.0)).norm() < 1e-15);
        assert!(matches!(p("s").eval_complex(Complex64::new(0.0, 0.0)), Err(Error::PoleAtZero)));
    }

    #[test]
    fn unit_normalize_examples() {
        assert_eq!(p("-s^3 + s").unit_normalize().unwrap(), p("s - s^-1"));
        assert_eq!(p("s - 1 + s^-1").unit_normalize().unwrap(), p("s - 1 + s^-1"));
        assert_eq!(p("2*s^2").unit_normalize().unwrap(), p("2"));
        assert_eq!(p("s - 1").unit_normalize().unwrap(), p("s - 1"));
        assert_eq!(p("1 - s").unit_normalize().unwrap(), p("s - 1"));
        assert!(matches!(LaurentPoly::zero(Var::S).unit_normalize(), Err(Error::ZeroPolynomial)));
    }

    #[test]
    fn render_and_parse() {
        assert_eq!(p("s^2 - 1 + s^-2").to_string(), "s^2 - 1 + s^-2");
        assert_eq!(p("-2*s^3 + s - 7").to_string(), "-2*s^3 + s - 7");
        assert_eq!(LaurentPoly::zero(Var::S).to_string(), "0");
        assert_eq!(p("s - s^-1").render_halved("t"), "t^(1/2) - t^(-1/2)");
        assert_eq!(p("s^2 - 1 + s^-2").render_halved("t"), "t - 1 + t^-1");
        assert_eq!(p("t^(-3)"), LaurentPoly::monomial(Var::T, -3, 1));
        assert!("s^".parse::<LaurentPoly>().is_err());
        assert!("s + tau".parse::<LaurentPoly>().is_err());
        assert!("".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn json_form() {
        let q = p("s^2 - 3 + s^-2");
        let j = q.to_json();
        assert_eq!(j, serde_json::json!([[-2, "1"], [0, "-3"], [2, "1"]]));
        assert_eq!(LaurentPoly::from_json(Var::S, &j).unwrap(), q);
    }

    #[test]
    fn exact_division() {
        let a = p("s^4 - 1");
        let b = p("s^2 - 1");
        assert_eq!(a.div_exact(&b).unwrap(), p("s^2 + 1"));
        assert!(matches!(p("s^2 + 1").div_exact(&p("s + 1")), Err(Error::NonExactDivision)));
        assert!(matches!(p("2*s").div_exact(&p("3")), Err(Error::NonExactDivision)));
    }

    #[test]
    fn big_coefficients_do_not_overflow() {
        let q = p("9223372036854775807*s + 9223372036854775807");
        let sq = q.pow(4);
        assert_eq!(sq.coeff(0), BigInt::from(i64::MAX).pow(4));
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-6i64..=6, -20i64..=20), 0..6)
            .prop_map(|ts| LaurentPoly::from_terms(Var::S, ts))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!((&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!((&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn canonical_form_has_no_zero_terms(a in arb_poly(), b in arb_poly()) {
            let prod = &a * &b;
            prop_assert!(prod.terms().all(|(_, c)| !c.is_zero()));
        }

        #[test]
        fn substitution_commutes_with_ring_ops(a in arb_poly(), b in arb_poly()) {
            let t = |x: &LaurentPoly| x.substitute_variable(Var::Tau);
            prop_assert_eq!(t(&(&a + &b)), t(&a) + t(&b));
            prop_assert_eq!(t(&(&a * &b)), t(&a) * t(&b));
            prop_assert_eq!(t(&a).substitute_variable(Var::S), a);
        }

        #[test]
        fn unit_normalize_ignores_units(a in arb_poly(), k in -8i64..8, neg in any::<bool>()) {
            prop_assume!(!a.is_zero());
            let mut u = a.shift(k);
            if neg { u = -u; }
            prop_assert_eq!(u.unit_normalize().unwrap(), a.unit_normalize().unwrap());
        }

        #[test]
        fn render_parse_roundtrip(a in arb_poly()) {
            let back: LaurentPoly = a.to_string().parse().unwrap();
            prop_assert_eq!(back, a);
        }

        #[test]
        fn division_inverts_multiplication(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
        }
    }
}
