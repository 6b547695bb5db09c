//! Braid corpus files.
//!
//! One braid per line, `[name:] ℓ; word [= expected]`, where `expected` is
//! the unit-normalized Alexander polynomial in `s`. Blank lines and text
//! after `#` are ignored.

use std::path::Path;

use crate::braid::{parse_braid, BraidWord};
use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Var};

const BUNDLED: &str = include_str!("../data/corpus.txt");

#[derive(Clone, Debug, PartialEq)]
pub struct CorpusEntry {
    pub name: String,
    pub braid: BraidWord,
    pub expected: Option<LaurentPoly>,
}

fn parse_line(line: &str, lineno: usize) -> Result<Option<CorpusEntry>> {
    let body = line.split('#').next().unwrap_or("").trim();
    if body.is_empty() {
        return Ok(None);
    }
    let err = |e: Error| Error::Parse(format!("line {lineno}: {e}"));
    let (name, rest) = match body.split_once(':') {
        Some((n, r)) if !n.contains(';') => (n.trim().to_string(), r.trim()),
        _ => (format!("line{lineno}"), body),
    };
    let (word, expected) = match rest.split_once('=') {
        Some((w, e)) => (w.trim(), Some(e.trim())),
        None => (rest, None),
    };
    let braid = parse_braid(word).map_err(err)?;
    let expected = expected
        .map(|e| e.parse::<LaurentPoly>().map(|p| p.substitute_variable(Var::S)))
        .transpose()
        .map_err(err)?;
    Ok(Some(CorpusEntry { name, braid, expected }))
}

pub fn parse_corpus(text: &str) -> Result<Vec<CorpusEntry>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, line)| parse_line(line, i + 1).transpose())
        .collect()
}

pub fn read_corpus(path: &Path) -> Result<Vec<CorpusEntry>> {
    parse_corpus(&std::fs::read_to_string(path)?)
}

/// The corpus shipped in `data/corpus.txt`.
pub fn bundled_corpus() -> Vec<CorpusEntry> {
    parse_corpus(BUNDLED).expect("bundled corpus parses")
}
