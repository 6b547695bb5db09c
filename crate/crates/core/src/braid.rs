//! Braid words and Markov moves.
//!
//! Text grammar: `"<strands>; <k1> <k2> ..."` where each `k` is a nonzero
//! integer, `k` standing for the Artin generator `sigma_k` and `-k` for its
//! inverse. The empty word is the identity braid.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

/// One letter `sigma_index^{sign}`, with `index` counted from 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub index: usize,
    pub sign: Sign,
}

impl Letter {
    pub fn new(index: usize, sign: Sign) -> Self {
        Letter { index, sign }
    }

    pub fn inverse(self) -> Self {
        Letter { index: self.index, sign: self.sign.flip() }
    }

    fn as_signed(self) -> i64 {
        self.index as i64 * self.sign.as_i32() as i64
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::Parse("a braid needs at least one strand".into()));
        }
        for l in &letters {
            check_index(l.index, strands)?;
        }
        Ok(BraidWord { strands, letters })
    }

    /// Builds a word from signed generator indices, e.g. `[1, -2, 1, -2]`.
    pub fn from_signed(strands: usize, word: &[i64]) -> Result<Self> {
        let mut letters = Vec::with_capacity(word.len());
        for &k in word {
            if k == 0 {
                return Err(Error::Parse("generator index 0 is not allowed".into()));
            }
            let sign = if k > 0 { Sign::Pos } else { Sign::Neg };
            letters.push(Letter::new(k.unsigned_abs() as usize, sign));
        }
        Self::new(strands, letters)
    }

    pub fn identity(strands: usize) -> Result<Self> {
        Self::new(strands, Vec::new())
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Exponent sum.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|l| l.sign.as_i32() as i64).sum()
    }

    /// `sigma_i^{sign} * self * sigma_i^{-sign}` (Markov move I).
    pub fn conjugate(&self, index: usize, sign: Sign) -> Result<Self> {
        check_index(index, self.strands)?;
        let mut letters = Vec::with_capacity(self.letters.len() + 2);
        letters.push(Letter::new(index, sign));
        letters.extend_from_slice(&self.letters);
        letters.push(Letter::new(index, sign.flip()));
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// Adds a strand and appends `sigma_{strands}^{sign}` (Markov move II).
    pub fn stabilize(&self, sign: Sign) -> Self {
        let mut letters = self.letters.clone();
        letters.push(Letter::new(self.strands, sign));
        BraidWord { strands: self.strands + 1, letters }
    }

    /// Word with every crossing reversed; its closure is the mirror image.
    pub fn mirror(&self) -> Self {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().map(|l| l.inverse()).collect(),
        }
    }

    /// Concatenation `self * other`.
    pub fn compose(&self, other: &BraidWord) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::Parse(format!(
                "cannot compose braids on {} and {} strands",
                self.strands, other.strands
            )));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// Inverse braid: reversed word with flipped signs.
    pub fn inverse(&self) -> Self {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Deterministic pseudo-random word; uses ChaCha8 so the stream is
    /// stable across platforms.
    pub fn random(strands: usize, length: usize, seed: u64) -> Result<Self> {
        if strands < 2 {
            return Err(Error::Parse("random braids need at least two strands".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let letters = (0..length)
            .map(|_| {
                let index = rng.gen_range(1..strands);
                let sign = if rng.gen_bool(0.5) { Sign::Pos } else { Sign::Neg };
                Letter::new(index, sign)
            })
            .collect();
        Ok(BraidWord { strands, letters })
    }

    /// `sigma`-notation, e.g. `σ1 σ2^-1`; the identity renders as `1`.
    pub fn to_sigma_notation(&self) -> String {
        if self.letters.is_empty() {
            return "1".to_string();
        }
        self.letters
            .iter()
            .map(|l| match l.sign {
                Sign::Pos => format!("σ{}", l.index),
                Sign::Neg => format!("σ{}^-1", l.index),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn check_index(index: usize, strands: usize) -> Result<()> {
    if index == 0 || index >= strands {
        Err(Error::IndexOutOfRange { index, strands })
    } else {
        Ok(())
    }
}

/// Parses `"<strands>; <k1> <k2> ..."`.
pub fn parse_braid(text: &str) -> Result<BraidWord> {
    text.parse()
}

impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let (head, word) = text
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("missing `;` in braid `{text}`")))?;
        let strands: usize = head
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad strand count `{}`", head.trim())))?;
        let ks = word
            .split_whitespace()
            .map(|tok| {
                tok.parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad generator `{tok}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        if strands == 0 {
            return Err(Error::Parse("strand count must be positive".into()));
        }
        BraidWord::from_signed(strands, &ks)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.strands)?;
        for l in &self.letters {
            write!(f, " {}", l.as_signed())?;
        }
        Ok(())
    }
}
