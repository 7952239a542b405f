//! Acceptance suite: one PASS/FAIL line per criterion, all arithmetic exact.
//!
//! Criterion 10 asks for the singleton {Q00} to fail closure. It closes, since
//! Q00 is twice a Virasoro field, so that line prints FAIL. The process exits
//! nonzero only when an outcome differs from the expected one recorded here.

use std::time::Instant;

use rayon::prelude::*;
use vaverify::{run_suite, Report};

/// Criteria whose FAIL line is expected and recorded in the decisions ledger.
const KNOWN_FAILURES: &[u32] = &[10];

struct Line {
    n: u32,
    pass: bool,
    text: String,
    secs: f64,
}

fn suite(name: &str, params: &[(&str, &str)]) -> Report {
    run_suite(name, params).unwrap_or_else(|e| panic!("{name}: {e}"))
}

/// Failing check names of the given reports, or "" when all passed.
fn failures(reports: &[&Report]) -> String {
    let mut v = Vec::new();
    for r in reports {
        for c in r.checks.iter().filter(|c| !c.ok) {
            v.push(format!("{}: {}{}", r.suite, c.name, if c.detail.is_empty() { String::new() } else { format!(" ({})", c.detail) }));
        }
    }
    v.join("; ")
}

fn verdict(reports: &[&Report], ok_text: String) -> (bool, String) {
    let f = failures(reports);
    if f.is_empty() && reports.iter().all(|r| r.passed()) {
        (true, ok_text)
    } else {
        (false, f)
    }
}

fn witness_str<'a>(r: &'a Report, path: &[&str]) -> Option<&'a str> {
    let mut v = r.witnesses.get(path[0])?;
    for p in &path[1..] {
        v = v.get(p)?;
    }
    v.as_str()
}

fn c1() -> (bool, String) {
    let r = suite("decouple-wt12", &[]);
    let published = witness_str(&r, &["Q0,10", "published"]);
    let solved = witness_str(&r, &["Q0,10", "solved"]);
    let delta = r.witnesses.get("delta").and_then(|d| d.as_array()).map_or(0, |d| d.len());
    let coeff_ok = published == Some("313/450") && solved.is_none_or(|s| s == "313/450");
    let (ok, text) = verdict(&[&r], format!("zero residual; Q0,10 coefficient {}; {delta} coefficients differ from the solver", published.unwrap_or("?")));
    (ok && coeff_ok, text)
}

fn c2() -> (bool, String) {
    let r = suite("central-charges", &[]);
    verdict(&[&r], "3k/(k+2), -6k-3, -6(k+1)".into())
}

fn c3() -> (bool, String) {
    let l = suite("jacobi-large-n4", &[]);
    let s = suite("jacobi-small-n4", &[]);
    verdict(&[&l, &s], "large N=4 at 3 points and small N=4 at 2 points, all triples; perturbed tables fail".into())
}

const PAIRS: [(&str, &str); 2] = [("2/3", "2/5"), ("5/3", "3/7")];

fn c4() -> (bool, String) {
    let rs: Vec<Report> = PAIRS.iter().map(|(l, m)| suite("thm-char-large", &[("lambda", l), ("mu", m)])).collect();
    verdict(&rs.iter().collect::<Vec<_>>(), "decomposition through q^4 at (2/3, 2/5) and (5/3, 3/7)".into())
}

fn c5() -> (bool, String) {
    let rs: Vec<Report> = PAIRS.iter().map(|(l, m)| suite("cor-char-large", &[("lambda", l), ("mu", m)])).collect();
    let coeffs = rs.iter().all(|r| r.find("q^1 coefficient at z=1").is_some_and(|c| c.ok) && r.find("q^3/2 coefficient at z=1").is_some_and(|c| c.ok));
    let (ok, text) = verdict(&rs.iter().collect::<Vec<_>>(), "V_0 = ch V^{k,a}; q^1 coefficient 6, q^3/2 coefficient 4".into());
    (ok && coeffs, text)
}

fn c6() -> (bool, String) {
    let r = suite("thm-char-small", &[("lambda", "2/3")]);
    verdict(&[&r], "small N=4 decomposition through q^4 at lambda = 2/3".into())
}

fn c7() -> (bool, String) {
    let r = suite("euler-poincare", &[("bound", "12")]);
    verdict(&[&r], "delta(n, m) for 0 <= n, m <= 12".into())
}

fn c8() -> (bool, String) {
    let a = suite("curves-on-curve", &[]);
    let b = suite("curves-coincidences", &[]);
    let xs: Vec<Report> = [("p2", "p3"), ("p2", "p4"), ("p3", "p4")].iter().map(|(x, y)| suite("curves-intersect", &[("a", x), ("b", y)])).collect();
    let mut all = vec![&a, &b];
    all.extend(xs.iter());
    verdict(&all, "identical vanishing; (15, 221/9506), (27/20, 4/12397), (49/5, 20/781); kk(-3/4) = kk(-6) = (27/5, 25/1078)".into())
}

fn c9() -> (bool, String) {
    let r = suite("coincidence-families", &[("family", "k2-sp"), ("n", "2..8")]);
    let fifth = r.checks.iter().any(|c| c.name.starts_with("fifth point") && c.ok);
    let (ok, text) = verdict(&[&r], "three k2 / sp_2n families and the fifth point for n = 2..8".into());
    (ok && fifth, text)
}

fn c10() -> (bool, String) {
    let r = suite("closure-scaled", &[]);
    let (ok, text) = verdict(&[&r], "minimal set to weight 14, fermionic set to weight 12, singleton fails".into());
    let others = r.checks.iter().filter(|c| !c.name.starts_with("singleton")).all(|c| c.ok);
    if ok {
        (true, text)
    } else if others {
        (false, format!("{text}; every other closure check holds, including the {{Q00, C012}} control"))
    } else {
        (false, text)
    }
}

fn c11() -> (bool, String) {
    let r = suite("coset-dims", &[("max_weight", "4")]);
    verdict(&[&r], "dimensions 1, 1, 3 at weights 2, 3, 4 with formal k1, k2".into())
}

type Criterion = fn() -> (bool, String);

fn main() {
    let criteria: Vec<(u32, Criterion)> = vec![(1, c1), (2, c2), (3, c3), (4, c4), (5, c5), (6, c6), (7, c7), (8, c8), (9, c9), (10, c10), (11, c11)];
    let lines: Vec<Line> = criteria
        .par_iter()
        .map(|(n, f)| {
            let t = Instant::now();
            let (pass, text) = f();
            Line { n: *n, pass, text, secs: t.elapsed().as_secs_f64() }
        })
        .collect();
    let mut unexpected = Vec::new();
    for l in &lines {
        println!("criterion {:>2}: {} ({:.1} s) {}", l.n, if l.pass { "PASS" } else { "FAIL" }, l.secs, l.text);
        if l.pass == KNOWN_FAILURES.contains(&l.n) {
            unexpected.push(l.n);
        }
    }
    let passed = lines.iter().filter(|l| l.pass).count();
    println!("acceptance: {passed}/{} criteria pass; expected failures: {KNOWN_FAILURES:?}", lines.len());
    if !unexpected.is_empty() {
        println!("acceptance: unexpected outcome for criteria {unexpected:?}");
        std::process::exit(1);
    }
}
