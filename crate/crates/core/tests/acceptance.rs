//! Acceptance suite: one PASS/FAIL line per criterion; exits nonzero if any fails.

use std::time::{Duration, Instant};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qlk::braid::{BraidWord, Sign};
use qlk::corpus::bundled_corpus;
use qlk::engine::{equal_up_to_unit, Evaluator};
use qlk::hopfcheck::{check_framing, check_yang_baxter, run_all, HopfSuite};
use qlk::oracle::alexander_oracle;
use qlk::ribbon::numeric::build_gl11_numeric;
use qlk::ribbon::{build_lg_qm1_ribbon, build_sl2_ribbon, lg_braiding_via_kronecker, RibbonData};
use qlk::LaurentPoly;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn normalized_eq(a: &LaurentPoly, b: &LaurentPoly) -> bool {
    equal_up_to_unit(a, b)
}

fn random_braids(count: usize, seed: u64, max_strands: usize, max_len: usize) -> Vec<BraidWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let strands = rng.gen_range(2..=max_strands);
            let len = rng.gen_range(0..=max_len);
            BraidWord::random(strands, len, rng.gen()).unwrap()
        })
        .collect()
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut braids: Vec<BraidWord> = bundled_corpus().into_iter().map(|e| e.braid).collect();
    let corpus_len = braids.len();
    braids.extend(random_braids(50, 0xA1E7, 4, 12));
    let mut failures = Vec::new();
    for b in &braids {
        match (qlk::alexander(b), alexander_oracle(b)) {
            (Ok(x), Ok(y)) if normalized_eq(&x, &y) => {}
            (x, y) => failures.push(format!("{b}: {x:?} vs {y:?}")),
        }
    }
    let elapsed = start.elapsed();
    let pass = failures.is_empty() && corpus_len >= 25 && elapsed < Duration::from_secs(10);
    outcome(
        pass,
        format!("{} braids ({corpus_len} corpus + 50 random), {} mismatches, {:.2?}", braids.len(), failures.len(), elapsed),
    )
}

fn theorem() -> Outcome {
    let start = Instant::now();
    let eval = Evaluator::default();
    let (mut checked, mut exact) = (0, 0);
    let mut failures = Vec::new();
    for entry in bundled_corpus() {
        for n in 1..=3u32 {
            if n as usize * entry.braid.strands() > 12 {
                continue;
            }
            checked += 1;
            match eval.verify_theorem(&entry.braid, n) {
                Ok(rep) if rep.equal_up_to_unit => exact += rep.equal_exactly() as usize,
                Ok(rep) => failures.push(format!("{} n={n}: {} vs {}", entry.name, rep.links_gould, rep.alexander_power)),
                Err(e) => failures.push(format!("{} n={n}: {e}", entry.name)),
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(
        failures.is_empty() && elapsed < Duration::from_secs(300),
        format!(
            "{checked} (braid, n) pairs, {} failures, {exact} equal without normalization, {:.2?}{}",
            failures.len(),
            elapsed,
            failures.first().map(|f| format!("; first: {f}")).unwrap_or_default()
        ),
    )
}

enum Move {
    Conjugate(usize, Sign),
    Stabilize(Sign),
}

fn markov_pairs(seed: u64, max_strands: usize) -> Vec<(BraidWord, Move)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..30)
        .map(|_| {
            let strands = rng.gen_range(2..=max_strands);
            let b = BraidWord::random(strands, rng.gen_range(1..=8), rng.gen()).unwrap();
            let sign = if rng.gen_bool(0.5) { Sign::Pos } else { Sign::Neg };
            let mv = if rng.gen_bool(0.5) { Move::Conjugate(rng.gen_range(1..strands), sign) } else { Move::Stabilize(sign) };
            (b, mv)
        })
        .collect()
}

fn apply(b: &BraidWord, mv: &Move) -> BraidWord {
    match mv {
        Move::Conjugate(i, s) => b.conjugate(*i, *s).unwrap(),
        Move::Stabilize(s) => b.stabilize(*s),
    }
}

fn markov() -> Outcome {
    let eval = Evaluator::default();
    let mut details = Vec::new();
    let mut pass = true;
    let models: [(&str, RibbonData, usize); 3] = [
        ("sl2", build_sl2_ribbon(), 4),
        ("lg(2)", build_lg_qm1_ribbon(2).unwrap(), 4),
        ("lg(3)", build_lg_qm1_ribbon(3).unwrap(), 3),
    ];
    for (k, (name, rib, max_strands)) in models.iter().enumerate() {
        let bad = markov_pairs(100 + k as u64, *max_strands)
            .iter()
            .filter(|(b, mv)| {
                let before = eval.invariant(b, rib).map(|r| r.scalar);
                let after = eval.invariant(&apply(b, mv), rib).map(|r| r.scalar);
                !matches!((before, after), (Ok(x), Ok(y)) if normalized_eq(&x, &y))
            })
            .count();
        pass &= bad == 0;
        details.push(format!("{name}: {bad}/30 changed"));
    }
    let rep = build_gl11_numeric(Complex64::new(0.7, 0.9), Complex64::new(0.31, -0.22), 1, Complex64::new(1.3, 0.4)).unwrap();
    let bad = markov_pairs(200, 4)
        .iter()
        .filter(|(b, mv)| {
            let before = eval.gl11_numeric_invariant(b, &rep, 1e-8);
            let after = eval.gl11_numeric_invariant(&apply(b, mv), &rep, 1e-8);
            !matches!((before, after), (Ok(x), Ok(y)) if (x - y).norm() <= 1e-8 * x.norm().max(1.0))
        })
        .count();
    pass &= bad == 0;
    details.push(format!("gl11-numeric: {bad}/30 changed (tol 1e-8)"));
    outcome(pass, details.join(", "))
}

fn proportionality() -> Outcome {
    let eval = Evaluator::default();
    let corpus = bundled_corpus();
    let rep = build_gl11_numeric(Complex64::new(-0.6, 1.2), Complex64::new(0.45, 0.1), 0, Complex64::new(0.8, -0.3)).unwrap();
    let mut ribbons = vec![build_sl2_ribbon()];
    for n in 1..=3 {
        ribbons.push(build_lg_qm1_ribbon(n).unwrap());
    }
    let mut evaluations = 0;
    let mut failures = Vec::new();
    for entry in &corpus {
        for rib in &ribbons {
            if rib.dim().trailing_zeros() as usize * entry.braid.strands() > 12 {
                continue;
            }
            evaluations += 1;
            if let Err(e) = eval.invariant(&entry.braid, rib) {
                failures.push(format!("{} {}: {e}", entry.name, rib.model()));
            }
        }
        evaluations += 1;
        if let Err(e) = eval.gl11_numeric_invariant(&entry.braid, &rep, 1e-8) {
            failures.push(format!("{} gl11-numeric: {e}", entry.name));
        }
    }
    outcome(failures.is_empty(), format!("{evaluations} closure traces, {} not proportional", failures.len()))
}

fn yang_baxter() -> Outcome {
    let mut ribbons = vec![build_sl2_ribbon()];
    for n in 1..=3 {
        ribbons.push(build_lg_qm1_ribbon(n).unwrap());
    }
    let results: Vec<String> = ribbons
        .iter()
        .map(|r| format!("{}: ybe={} framing={}", r.model(), check_yang_baxter(r), check_framing(r)))
        .collect();
    let pass = ribbons.iter().all(|r| check_yang_baxter(r) && check_framing(r));
    outcome(pass, results.join(", "))
}

fn hopf() -> Outcome {
    let report = run_all(&HopfSuite { seed: 0, samples: 20, ratio_samples: 50 }).unwrap();
    let detail = report
        .iter()
        .map(|r| format!("{}={:.1e}{}", r.name, r.max_residual, if r.pass { "" } else { "(FAIL)" }))
        .collect::<Vec<_>>()
        .join(", ");
    outcome(report.iter().all(|r| r.pass), detail)
}

fn factorization() -> Outcome {
    let results: Vec<(usize, bool)> = [2usize, 3]
        .iter()
        .map(|&n| (n, build_lg_qm1_ribbon(n as u32).unwrap().braiding() == &lg_braiding_via_kronecker(n)))
        .collect();
    outcome(
        results.iter().all(|r| r.1),
        results.iter().map(|(n, ok)| format!("n={n}: {ok}")).collect::<Vec<_>>().join(", "),
    )
}

fn peak_rss_kib() -> Option<u64> {
    let status = std::fs::read_to_string("/proc/self/status").ok()?;
    let line = status.lines().find(|l| l.starts_with("VmHWM:"))?;
    line.split_whitespace().nth(1)?.parse().ok()
}

fn performance() -> Outcome {
    let b = BraidWord::random(6, 12, 0x6006).unwrap();
    let start = Instant::now();
    let one = Evaluator::default().with_workers(1).links_gould_qm1(&b, 2);
    let t1 = start.elapsed();
    let start = Instant::now();
    let eight = Evaluator::default().with_workers(8).links_gould_qm1(&b, 2);
    let t8 = start.elapsed();
    let rss = peak_rss_kib();
    let identical = matches!((&one, &eight), (Ok(x), Ok(y)) if x == y);
    let mem_ok = rss.is_some_and(|k| k < 2 * 1024 * 1024);
    outcome(
        identical && t1 < Duration::from_secs(60) && t8 < Duration::from_secs(60) && mem_ok,
        format!(
            "n=2, {b}: 1 worker {t1:.2?}, 8 workers {t8:.2?}, identical={identical}, peak RSS {} MiB",
            rss.map_or("?".into(), |k| (k / 1024).to_string())
        ),
    )
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 oracle equivalence", oracle_equivalence),
        ("2 LG = Alexander^n", theorem),
        ("3 Markov invariance", markov),
        ("4 proportionality", proportionality),
        ("5 Yang-Baxter and framing", yang_baxter),
        ("6 Hopf checks", hopf),
        ("7 structural factorization", factorization),
        ("8 performance", performance),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let o = check();
        failed += !o.pass as usize;
        println!("criterion {name}: {} ({})", if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
