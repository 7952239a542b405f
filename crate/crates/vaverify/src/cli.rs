//! Command-line front end. Exit codes: 0 pass, 1 fail, 2 refused, 3 usage error.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde_json::{json, Value};

use truncation_curves::{curve, describe_curve, families, param, CURVE_NAMES, EXTERNAL_CURVES, MAP_NAMES};
use va_core::{parse_presentation, presets, write_presentation};

use crate::catalog::{list_suites, ParamKind};
use crate::report::{Report, Verdict};
use crate::request::{CheckRequest, RawRequest, UsageError};
use crate::run::run;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_REFUSED: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

/// Worker count for batch runs.
pub const WORKERS_ENV: &str = "VAVERIFY_WORKERS";

#[derive(Parser, Debug)]
#[command(name = "vaverify", version, about = "Exact verification suites for the sl2 diagonal coset and its relatives")]
struct Cli {
    /// Suite to run (see `vaverify list`).
    #[arg(long, conflicts_with = "batch")]
    suite: Option<String>,
    /// Suite parameter, repeatable: `--param k=1/2`.
    #[arg(long = "param", value_name = "NAME=VALUE")]
    params: Vec<String>,
    /// Truncation order of q-series.
    #[arg(long)]
    order: Option<String>,
    /// Weight bound for Jacobi instances or closure pairs.
    #[arg(long = "weight-bound")]
    weight_bound: Option<String>,
    /// Emit JSON reports.
    #[arg(long, global = true)]
    json: bool,
    /// Write the report to a file instead of standard output.
    #[arg(long)]
    output: Option<String>,
    /// File with one JSON request per line; reports are written in request order.
    #[arg(long)]
    batch: Option<PathBuf>,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List suites with their anchors and parameters.
    List,
    /// Truncation curves and their parametrizations.
    Curves {
        #[command(subcommand)]
        command: CurvesCommand,
    },
    /// Print a bundled presentation, or validate one from a file.
    Presentation {
        /// Bundled name such as `large-n4` or `heisenberg(3)`.
        name: Option<String>,
        #[arg(long, conflicts_with = "name")]
        file: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum CurvesCommand {
    /// Bundled curves, parametrizations and families.
    List,
    /// Evaluate a parametrization at a level.
    #[command(allow_negative_numbers = true)]
    Eval { map: String, k: String },
    /// Intersect two curves.
    Intersect { a: String, b: String },
    /// Check a coincidence family over a range of n.
    Family {
        id: String,
        #[arg(long, default_value = "2..8")]
        n: String,
    },
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Io<'_> {
    fn usage(&mut self, e: &UsageError) -> i32 {
        let _ = writeln!(self.err, "vaverify: {e}");
        EXIT_USAGE
    }
}

/// Parse `args` (including the program name) and run; returns the exit code.
pub fn main_with(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut io = Io { out, err };
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => EXIT_PASS,
                _ => EXIT_USAGE,
            };
            let text = e.render().to_string();
            let _ = if code == EXIT_PASS { write!(io.out, "{text}") } else { write!(io.err, "{text}") };
            return code;
        }
    };
    let json = cli.json;
    match &cli.command {
        Some(Command::List) => return list(&mut io, json),
        Some(Command::Presentation { name, file }) => return presentation(&mut io, name.as_deref(), file.as_ref()),
        Some(Command::Curves { command }) => {
            if cli.suite.is_some() || cli.batch.is_some() {
                return io.usage(&UsageError("`curves` does not combine with --suite or --batch".into()));
            }
            let raw = match command {
                CurvesCommand::List => return curves_list(&mut io, json),
                CurvesCommand::Eval { map, k } => raw("curves-eval", &[("map", map), ("k", k)]),
                CurvesCommand::Intersect { a, b } => raw("curves-intersect", &[("a", a), ("b", b)]),
                CurvesCommand::Family { id, n } => raw("coincidence-families", &[("family", id), ("n", n)]),
            };
            let raw = RawRequest { output: cli.output.clone(), ..raw };
            return single(&mut io, &raw, json);
        }
        None => {}
    }
    if let Some(path) = &cli.batch {
        if !cli.params.is_empty() || cli.order.is_some() || cli.weight_bound.is_some() || cli.output.is_some() {
            return io.usage(&UsageError("--batch takes its parameters from the file".into()));
        }
        return batch(&mut io, path);
    }
    let Some(suite) = cli.suite.clone() else {
        return io.usage(&UsageError("nothing to do: give --suite, --batch or a subcommand (see --help)".into()));
    };
    let mut params = Vec::new();
    for p in &cli.params {
        match p.split_once('=') {
            Some((k, v)) if !k.trim().is_empty() => params.push((k.trim().to_string(), v.trim().to_string())),
            _ => return io.usage(&UsageError(format!("--param expects name=value, got `{p}`"))),
        }
    }
    let raw = RawRequest { suite, params, order: cli.order.clone(), weight_bound: cli.weight_bound.clone(), output: cli.output.clone() };
    single(&mut io, &raw, json)
}

fn raw(suite: &str, params: &[(&str, &String)]) -> RawRequest {
    RawRequest { suite: suite.into(), params: params.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect(), ..Default::default() }
}

fn render(r: &Report, json: bool) -> String {
    if json {
        r.json_line()
    } else {
        r.to_string()
    }
}

fn emit(io: &mut Io, req: &CheckRequest, r: &Report, json: bool) -> Result<(), i32> {
    let text = render(r, json);
    match &req.output {
        Some(p) => fs::write(p, format!("{text}\n")).map_err(|e| {
            let _ = writeln!(io.err, "vaverify: cannot write {}: {e}", p.display());
            EXIT_USAGE
        }),
        None => {
            let _ = writeln!(io.out, "{text}");
            Ok(())
        }
    }
}

fn single(io: &mut Io, raw: &RawRequest, json: bool) -> i32 {
    let req = match raw.validate() {
        Ok(r) => r,
        Err(e) => return io.usage(&e),
    };
    let report = run(&req);
    if let Err(code) = emit(io, &req, &report, json) {
        return code;
    }
    report.verdict().exit_code()
}

/// Worker count from the environment; unset means one per core.
pub fn workers() -> Result<usize, UsageError> {
    match std::env::var(WORKERS_ENV) {
        Err(_) => Ok(std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(n),
            _ => Err(UsageError(format!("{WORKERS_ENV} must be a positive integer, got `{s}`"))),
        },
    }
}

/// Validate every line first, then run the requests concurrently and write the
/// reports (always JSON) in request order.
fn batch(io: &mut Io, path: &PathBuf) -> i32 {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return io.usage(&UsageError(format!("cannot read {}: {e}", path.display()))),
    };
    let mut reqs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match RawRequest::from_json(line).and_then(|r| r.validate()) {
            Ok(r) => reqs.push(r),
            Err(e) => return io.usage(&UsageError(format!("{}:{}: {e}", path.display(), i + 1))),
        }
    }
    let n = match workers() {
        Ok(n) => n,
        Err(e) => return io.usage(&e),
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
        Ok(p) => p,
        Err(e) => return io.usage(&UsageError(e.to_string())),
    };
    let reports: Vec<Report> = pool.install(|| reqs.par_iter().map(run).collect());
    for (req, r) in reqs.iter().zip(&reports) {
        if let Err(code) = emit(io, req, r, true) {
            return code;
        }
    }
    batch_exit(reports.iter().map(|r| r.verdict()))
}

/// 1 if anything failed, else 2 if anything was refused, else 0.
pub fn batch_exit(verdicts: impl Iterator<Item = Verdict>) -> i32 {
    let v: Vec<Verdict> = verdicts.collect();
    if v.contains(&Verdict::Fail) {
        EXIT_FAIL
    } else if v.contains(&Verdict::Refused) {
        EXIT_REFUSED
    } else {
        EXIT_PASS
    }
}

fn kind_text(k: ParamKind) -> String {
    match k {
        ParamKind::Fraction => "fraction".into(),
        ParamKind::Integer { min, max } => format!("integer {min}..{max}"),
        ParamKind::Curve => "curve".into(),
        ParamKind::Map => "map".into(),
        ParamKind::Family => "family".into(),
        ParamKind::Range { min, max } => format!("range within {min}..{max}"),
    }
}

fn list(io: &mut Io, json: bool) -> i32 {
    if json {
        let v: Vec<Value> = list_suites()
            .iter()
            .map(|s| {
                let params: Vec<Value> =
                    s.params.iter().map(|p| json!({ "name": p.name, "kind": kind_text(p.kind), "default": p.default, "help": p.help })).collect();
                json!({
                    "name": s.name,
                    "anchor": s.anchor,
                    "summary": s.summary,
                    "params": params,
                    "order": s.order.map(|b| b.default),
                    "weight_bound": s.weight_bound.map(|b| b.default),
                })
            })
            .collect();
        let _ = writeln!(io.out, "{}", Value::Array(v));
        return EXIT_PASS;
    }
    for s in list_suites() {
        let _ = writeln!(io.out, "{:<22} [{}]\n    {}", s.name, s.anchor, s.summary);
        for p in s.params {
            let _ = writeln!(io.out, "    --param {}=<{}>  default {}  {}", p.name, kind_text(p.kind), p.default.unwrap_or("none"), p.help);
        }
        if let Some(b) = s.order {
            let _ = writeln!(io.out, "    --order <integer>  default {}  at most {}", b.default, b.max.0);
        }
        if let Some(b) = s.weight_bound {
            let _ = writeln!(io.out, "    --weight-bound <fraction>  default {}  at most {}", b.default, b.max.0);
        }
    }
    EXIT_PASS
}

fn curves_list(io: &mut Io, json: bool) -> i32 {
    let curves: Vec<Value> = CURVE_NAMES
        .iter()
        .map(|n| {
            let p = curve(n).expect("bundled");
            json!({ "name": n, "degree_c": p.degree_c(), "degree_lambda": p.degree_lambda(), "terms": p.len(), "sha256": p.coefficient_hash(), "description": describe_curve(n) })
        })
        .collect();
    let maps: Vec<Value> = MAP_NAMES
        .iter()
        .map(|n| {
            let m = param(n).expect("bundled");
            json!({ "name": n, "variable": m.variable, "c": m.c_of_k.display_in(m.variable), "lambda": m.lambda_of_k.display_in(m.variable), "curve": m.curve, "description": m.description })
        })
        .collect();
    let fams: Vec<Value> = families().iter().map(|f| json!({ "id": f.id, "map": f.map, "partner": f.partner, "n_min": f.n_min })).collect();
    let ext: Vec<Value> = EXTERNAL_CURVES.iter().map(|(n, why)| json!({ "name": n, "status": "refused", "reason": why })).collect();
    if json {
        let _ = writeln!(io.out, "{}", json!({ "curves": curves, "maps": maps, "families": fams, "external": ext }));
        return EXIT_PASS;
    }
    let _ = writeln!(io.out, "curves");
    for n in CURVE_NAMES {
        let p = curve(n).expect("bundled");
        let _ = writeln!(io.out, "  {n:<11} degree ({}, {}) in (c, lambda)  {}", p.degree_c(), p.degree_lambda(), describe_curve(n));
    }
    let _ = writeln!(io.out, "parametrizations");
    for n in MAP_NAMES {
        let m = param(n).expect("bundled");
        let _ = writeln!(io.out, "  {n:<6} c = {}\n         lambda = {}", m.c_of_k.display_in(m.variable), m.lambda_of_k.display_in(m.variable));
    }
    let _ = writeln!(io.out, "families");
    for f in families() {
        let _ = writeln!(io.out, "  {:<10} under {:<3} partner {} (n >= {})", f.id, f.map, f.partner, f.n_min);
    }
    let _ = writeln!(io.out, "external (refused)");
    for (n, why) in EXTERNAL_CURVES {
        let _ = writeln!(io.out, "  {n:<15} {why}");
    }
    EXIT_PASS
}

fn presentation(io: &mut Io, name: Option<&str>, file: Option<&PathBuf>) -> i32 {
    match (name, file) {
        (Some(n), None) => match presets::text_by_name(n) {
            Ok(t) => {
                let _ = write!(io.out, "{t}");
                if !t.ends_with('\n') {
                    let _ = writeln!(io.out);
                }
                EXIT_PASS
            }
            Err(e) => io.usage(&UsageError(format!("{e}; bundled: {}", presets::CATALOG.join(", ")))),
        },
        (None, Some(p)) => {
            let src = match fs::read_to_string(p) {
                Ok(s) => s,
                Err(e) => return io.usage(&UsageError(format!("cannot read {}: {e}", p.display()))),
            };
            let alg = match parse_presentation(&src) {
                Ok(a) => a,
                Err(e) => return io.usage(&UsageError(format!("{}: {e}", p.display()))),
            };
            let text = write_presentation(&alg);
            let stable = parse_presentation(&text).map(|b| write_presentation(&b) == text).unwrap_or(false);
            let _ = writeln!(
                io.out,
                "{}: {} generators, parameters [{}], {} OPE entries, round trip {}",
                alg.name(),
                alg.ngens(),
                alg.params().join(", "),
                alg.entries().values().map(|m| m.len()).sum::<usize>(),
                if stable { "ok" } else { "unstable" }
            );
            if stable {
                EXIT_PASS
            } else {
                EXIT_FAIL
            }
        }
        _ => io.usage(&UsageError("presentation takes a bundled name or --file <path>".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let args: Vec<String> = std::iter::once("vaverify").chain(args.iter().copied()).map(String::from).collect();
        let (mut o, mut e) = (Vec::new(), Vec::new());
        let code = main_with(&args, &mut o, &mut e);
        (code, String::from_utf8(o).unwrap(), String::from_utf8(e).unwrap())
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&[]).0, EXIT_USAGE);
        assert_eq!(call(&["--suite", "nope"]).0, EXIT_USAGE);
        assert_eq!(call(&["--bogus"]).0, EXIT_USAGE);
        assert_eq!(call(&["--suite", "curves-eval", "--param", "k"]).0, EXIT_USAGE);
        assert_eq!(call(&["presentation", "nope"]).0, EXIT_USAGE);
    }

    #[test]
    fn help_is_not_an_error() {
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, EXIT_PASS);
        assert!(out.contains("--weight-bound"));
    }

    #[test]
    fn batch_exit_codes() {
        use Verdict::*;
        assert_eq!(batch_exit([Pass, Pass].into_iter()), 0);
        assert_eq!(batch_exit([Pass, Refused].into_iter()), 2);
        assert_eq!(batch_exit([Refused, Fail].into_iter()), 1);
    }
}
