//! The `qlk` command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error, 3 budget.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::braid::{parse_braid, BraidWord};
use crate::corpus::{bundled_corpus, read_corpus, CorpusEntry};
use crate::engine::{equal_up_to_unit, EvalOptions, Evaluator, DEFAULT_BUDGET_BITS};
use crate::error::{Error, Result};
use crate::hopfcheck::{run_all, HopfSuite};
use crate::laurent::{LaurentPoly, Var};
use crate::ribbon::{build_lg_qm1_ribbon, build_sl2_ribbon, Model};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "qlk", version, about = "Alexander-Conway and Links-Gould (q = -1) invariants of braid closures")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Output variable: s or t for `alex`, tau or t0 for `lg`.
    #[arg(long, global = true, value_enum)]
    pub var: Option<OutVar>,
    /// Emit JSON (one object per line).
    #[arg(long, global = true)]
    pub json: bool,
    /// Directory for cached invariant results.
    #[arg(long, global = true, value_name = "DIR")]
    pub cache: Option<PathBuf>,
    /// Refuse state spaces with 2^BITS or more basis vectors.
    #[arg(long, global = true, value_name = "BITS", default_value_t = DEFAULT_BUDGET_BITS)]
    pub budget: u32,
    /// Worker threads for the partial trace.
    #[arg(long, global = true)]
    pub workers: Option<usize>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutVar {
    S,
    T,
    Tau,
    T0,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Alexander-Conway polynomial.
    Alex(BraidInput),
    /// Links-Gould LG^{n,1}(L; tau, -1).
    Lg {
        #[arg(short = 'n', long = "rank", default_value_t = 2)]
        n: u32,
        #[command(flatten)]
        input: BraidInput,
    },
    /// Check the oracle values and LG^{n,1}(L; tau, -1) = Δ_L(tau^2)^n on a corpus.
    Verify {
        #[arg(long, default_value_t = 1)]
        n_min: u32,
        #[arg(long, default_value_t = 3)]
        n_max: u32,
        /// Corpus file; the bundled corpus when omitted.
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
    /// Numeric checks on two-dimensional modules, as a JSON report.
    Hopf {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        /// Draws for the ratio check; 5/2 of `--samples` when omitted.
        #[arg(long)]
        ratio_samples: Option<usize>,
    },
}

#[derive(Args, Debug)]
pub struct BraidInput {
    /// Braid as `strands; i1 i2 ...`.
    pub braid: Option<String>,
    /// File with one braid per line (corpus grammar).
    #[arg(long)]
    pub file: Option<PathBuf>,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        Error::NotProportionalToIdentity { .. } | Error::NotProportional { .. } | Error::NotProportionalNumeric { .. } => {
            EXIT_VERIFY
        }
        _ => EXIT_INPUT,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if let Error::BudgetExceeded { bits, .. } = e {
                let _ = writeln!(err, "hint: pass --budget {} or more to allow this computation", bits + 1);
            }
            exit_code(&e)
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let g = &cli.global;
    let eval = Evaluator::new(EvalOptions { budget_bits: g.budget, workers: g.workers });
    match &cli.command {
        Command::Alex(input) => {
            let var = resolve_var(g.var, OutVar::S, &[OutVar::S, OutVar::T], "alex")?;
            compute(&eval, g, Model::Sl2, &load_braids(input)?, var, out)
        }
        Command::Lg { n, input } => {
            let var = resolve_var(g.var, OutVar::Tau, &[OutVar::Tau, OutVar::T0], "lg")?;
            build_lg_qm1_ribbon(*n)?;
            compute(&eval, g, Model::Lg(*n), &load_braids(input)?, var, out)
        }
        Command::Verify { n_min, n_max, corpus } => {
            let entries = match corpus {
                Some(p) => read_corpus(p)?,
                None => bundled_corpus(),
            };
            verify(&eval, g, &entries, *n_min..=*n_max, out, err)
        }
        Command::Hopf { seed, samples, ratio_samples } => {
            let suite = HopfSuite {
                seed: *seed,
                samples: *samples,
                ratio_samples: ratio_samples.unwrap_or(samples * 5 / 2),
            };
            if suite.samples == 0 || suite.ratio_samples == 0 {
                writeln!(err, "warning: zero samples requested; numeric checks are vacuous")?;
            }
            let report = run_all(&suite)?;
            let all_pass = report.iter().all(|r| r.pass);
            let value = json!({
                "seed": suite.seed,
                "checks": report,
                "pass": all_pass,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&value)?)?;
            Ok(if all_pass { EXIT_OK } else { EXIT_VERIFY })
        }
    }
}

fn resolve_var(var: Option<OutVar>, default: OutVar, allowed: &[OutVar], cmd: &str) -> Result<OutVar> {
    let v = var.unwrap_or(default);
    if allowed.contains(&v) {
        Ok(v)
    } else {
        Err(Error::Parse(format!("--var {v:?} is not available for `{cmd}`").to_lowercase()))
    }
}

fn load_braids(input: &BraidInput) -> Result<Vec<(String, BraidWord)>> {
    match (&input.braid, &input.file) {
        (Some(text), None) => Ok(vec![(text.trim().to_string(), parse_braid(text)?)]),
        (None, Some(path)) => Ok(read_corpus(path)?.into_iter().map(|e| (e.name, e.braid)).collect()),
        (Some(_), Some(_)) => Err(Error::Parse("give either a braid or --file, not both".into())),
        (None, None) => Err(Error::Parse("missing braid (pass `strands; word` or --file)".into())),
    }
}

fn render(p: &LaurentPoly, var: OutVar) -> String {
    match var {
        OutVar::S | OutVar::Tau => p.to_string(),
        OutVar::T => p.render_halved("t"),
        OutVar::T0 => p.render_halved("t0"),
    }
}

/// Cache file for `(model, braid)`: SHA-256 over the model tag and the
/// canonical braid text.
pub fn cache_path(dir: &Path, model: Model, b: &BraidWord) -> PathBuf {
    let digest = Sha256::digest(format!("{model}|{b}").as_bytes());
    dir.join(format!("{}.json", hex::encode(digest)))
}

fn cached_invariant(eval: &Evaluator, g: &GlobalOpts, model: Model, b: &BraidWord) -> Result<(LaurentPoly, bool)> {
    let var = match model {
        Model::Lg(_) => Var::Tau,
        _ => Var::S,
    };
    let path = g.cache.as_ref().map(|d| cache_path(d, model, b));
    if let Some(p) = path.as_ref().filter(|p| p.exists()) {
        let v: Value = serde_json::from_str(&std::fs::read_to_string(p)?)?;
        if v["braid"] == json!(b.to_string()) && v["model"] == json!(model.to_string()) {
            return Ok((LaurentPoly::from_json(var, &v["polynomial"])?, true));
        }
    }
    let poly = match model {
        Model::Lg(n) => eval.links_gould_qm1(b, n)?,
        _ => eval.invariant(b, &build_sl2_ribbon())?.scalar,
    };
    if let Some(p) = path {
        std::fs::create_dir_all(p.parent().expect("cache file has a parent"))?;
        let v = json!({"model": model.to_string(), "braid": b.to_string(), "polynomial": poly.to_json()});
        std::fs::write(p, serde_json::to_string(&v)?)?;
    }
    Ok((poly, false))
}

fn compute(
    eval: &Evaluator,
    g: &GlobalOpts,
    model: Model,
    braids: &[(String, BraidWord)],
    var: OutVar,
    out: &mut dyn Write,
) -> Result<i32> {
    for (name, b) in braids {
        let start = Instant::now();
        let (poly, cached) = cached_invariant(eval, g, model, b)?;
        if g.json {
            let normalized = if poly.is_zero() { poly.clone() } else { poly.unit_normalize()? };
            let v = json!({
                "name": name,
                "braid": b.to_string(),
                "model": model.to_string(),
                "variable": poly_var_name(model),
                "polynomial": poly.to_json(),
                "normalized": normalized.to_json(),
                "rendered": render(&poly, var),
                "strands": b.strands(),
                "writhe": b.writhe(),
                "elapsed_ms": start.elapsed().as_secs_f64() * 1e3,
                "cached": cached,
            });
            writeln!(out, "{v}")?;
        } else if braids.len() == 1 {
            writeln!(out, "{}", render(&poly, var))?;
        } else {
            writeln!(out, "{name}: {}", render(&poly, var))?;
        }
    }
    Ok(EXIT_OK)
}

fn poly_var_name(model: Model) -> &'static str {
    match model {
        Model::Lg(_) => "tau",
        _ => "s",
    }
}

#[derive(Debug)]
struct Row {
    name: String,
    braid: String,
    check: String,
    n: Option<u32>,
    status: Status,
    detail: String,
}

#[derive(Debug, PartialEq, Eq, Clone, Copy)]
enum Status {
    Pass,
    Fail,
    Skip,
}

impl Status {
    fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skip => "skip",
        }
    }
}

fn verify_entry(eval: &Evaluator, entry: &CorpusEntry, ns: &std::ops::RangeInclusive<u32>) -> Vec<Row> {
    let row = |check: &str, n: Option<u32>, status: Status, detail: String| Row {
        name: entry.name.clone(),
        braid: entry.braid.to_string(),
        check: check.to_string(),
        n,
        status,
        detail,
    };
    let mut rows = Vec::new();
    let alex = eval.alexander(&entry.braid);
    if let Some(expected) = &entry.expected {
        rows.push(match &alex {
            Ok(a) if equal_up_to_unit(a, expected) => row("alexander", None, Status::Pass, a.to_string()),
            Ok(a) => row("alexander", None, Status::Fail, format!("got {a}, expected {expected}")),
            Err(e) => row("alexander", None, Status::Fail, e.to_string()),
        });
    }
    for n in ns.clone() {
        let bits = n as u64 * entry.braid.strands() as u64;
        if bits >= eval.options.budget_bits as u64 {
            rows.push(row("theorem", Some(n), Status::Skip, format!("2^{bits} states over budget")));
            continue;
        }
        rows.push(match eval.verify_theorem(&entry.braid, n) {
            Ok(rep) if rep.equal_up_to_unit => row(
                "theorem",
                Some(n),
                Status::Pass,
                if rep.equal_exactly() { "exact".into() } else { "up to unit".into() },
            ),
            Ok(rep) => row(
                "theorem",
                Some(n),
                Status::Fail,
                format!("LG = {}, Δ^n = {}", rep.links_gould, rep.alexander_power),
            ),
            Err(e) => row("theorem", Some(n), Status::Fail, e.to_string()),
        });
    }
    rows
}

fn verify(
    eval: &Evaluator,
    g: &GlobalOpts,
    entries: &[CorpusEntry],
    ns: std::ops::RangeInclusive<u32>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    if entries.is_empty() {
        writeln!(err, "warning: corpus is empty; nothing to verify")?;
    }
    if *ns.start() == 0 {
        return Err(Error::Parse("--n-min must be at least 1".into()));
    }
    let rows: Vec<Row> = entries.par_iter().flat_map_iter(|e| verify_entry(eval, e, &ns)).collect();
    let count = |s: Status| rows.iter().filter(|r| r.status == s).count();
    let (passed, failed, skipped) = (count(Status::Pass), count(Status::Fail), count(Status::Skip));
    if g.json {
        let results: Vec<Value> = rows
            .iter()
            .map(|r| {
                json!({"name": r.name, "braid": r.braid, "check": r.check, "n": r.n,
                       "status": r.status.label(), "detail": r.detail})
            })
            .collect();
        let v = json!({"results": results, "passed": passed, "failed": failed, "skipped": skipped});
        writeln!(out, "{v}")?;
    } else {
        for r in &rows {
            let n = r.n.map_or("-".to_string(), |n| n.to_string());
            writeln!(out, "{:<24} {:<10} n={:<2} {:<5} {}", r.name, r.check, n, r.status.label(), r.detail)?;
        }
        writeln!(out, "summary: {passed} passed, {failed} failed, {skipped} skipped")?;
    }
    Ok(if failed == 0 { EXIT_OK } else { EXIT_VERIFY })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("qlk").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn alex_unknot() {
        let (code, out, _) = run_str(&["alex", "1;"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "1");
    }

    #[test]
    fn malformed_input_is_exit_2() {
        assert_eq!(run_str(&["alex", "2; 1 x"]).0, EXIT_INPUT);
        assert_eq!(run_str(&["alex"]).0, EXIT_INPUT);
        assert_eq!(run_str(&["alex", "--var", "tau", "2; 1"]).0, EXIT_INPUT);
        assert_eq!(run_str(&["frobnicate"]).0, EXIT_INPUT);
    }

    #[test]
    fn budget_is_exit_3() {
        let (code, _, err) = run_str(&["lg", "-n", "2", "12; 1 2 3 4 5 6 7 8 9 10 11"]);
        assert_eq!(code, EXIT_BUDGET);
        assert!(err.contains("--budget"));
    }

    #[test]
    fn cache_key_depends_on_model_and_braid() {
        let dir = Path::new("/x");
        let b = parse_braid("2; 1 1 1").unwrap();
        let c = parse_braid("2; 1 1").unwrap();
        assert_ne!(cache_path(dir, Model::Sl2, &b), cache_path(dir, Model::Lg(1), &b));
        assert_ne!(cache_path(dir, Model::Sl2, &b), cache_path(dir, Model::Sl2, &c));
        assert_eq!(cache_path(dir, Model::Sl2, &b), cache_path(dir, Model::Sl2, &b));
    }
}
