//! Command-line front end.
//!
//! `--signature` takes multiplicities and `--lambda` takes the top row
//! itself: `--signature 1,3,1` and `--lambda 1,2,2,2,3` both name
//! `GZ(1 2^3 3)`.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::time::Instant;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::closedforms::{f_12k3_solution, gf_family, h_123k, h_12k3, h_223k, Family};
use crate::error::{Error, Result};
use crate::oracle::{face_lattice, fiber_decomposition_check_on, OracleLimits};
use crate::par::{self, Parallelism};
use crate::poly::IntPoly;
use crate::recurrence::{Engine, EngineConfig};
use crate::signature::{parse_sequence, LevelSequence, Signature};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "gtface",
    version,
    about = "Face numbers of Gelfand-Tsetlin polytopes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Emit JSON.
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,

    /// Emit CSV.
    #[arg(long, global = true)]
    pub csv: bool,

    /// Print only the essential result.
    #[arg(long, short, global = true)]
    pub quiet: bool,

    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// f- and h-vector of one polytope, by the recurrence.
    F(FArgs),
    /// Closed-form h- and f-vectors of a one-parameter family.
    Family(FamilyArgs),
    /// Expand the generating function of a family.
    Gf(GfArgs),
    /// Cross-check engine, oracle and formulas.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("input").required(true).args(["lambda", "signature"])))]
pub struct FArgs {
    /// Nondecreasing top row, e.g. `1,2,2,2,3`; halves like `1.5` allowed.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,

    /// Multiplicities, e.g. `1,3,1` for GZ(1 2^3 3).
    #[arg(long)]
    pub signature: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    /// GZ(1 2^k 3)
    #[value(name = "12k3")]
    F12K3,
    /// GZ(1 2 3^k)
    #[value(name = "123k")]
    F123K,
    /// GZ(2^2 3^k)
    #[value(name = "223k")]
    F223K,
}

impl FamilyName {
    fn label(self) -> &'static str {
        match self {
            FamilyName::F12K3 => "12k3",
            FamilyName::F123K => "123k",
            FamilyName::F223K => "223k",
        }
    }

    /// Top row of the `k`-th member.
    fn top_row(self, k: usize) -> Vec<i64> {
        let (a, b, c) = match self {
            FamilyName::F12K3 => (vec![1], vec![2; k], vec![3]),
            FamilyName::F123K => (vec![1], vec![2], vec![3; k]),
            FamilyName::F223K => (vec![2, 2], vec![], vec![3; k]),
        };
        [a, b, c].concat()
    }

    fn h(self, k: usize) -> IntPoly {
        match self {
            FamilyName::F12K3 => h_12k3(k),
            FamilyName::F123K => h_123k(k),
            FamilyName::F223K => h_223k(k),
        }
    }

    fn f(self, k: usize) -> IntPoly {
        match self {
            FamilyName::F12K3 => f_12k3_solution(k),
            _ => self.h(k).substitute_shift(1),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GfFamily {
    #[value(name = "123k")]
    F123K,
    #[value(name = "223k")]
    F223K,
}

/// Inclusive range of `k`, written `N` or `A..B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KRange {
    pub start: usize,
    pub end: usize,
}

fn parse_k_range(text: &str) -> std::result::Result<KRange, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("`{t}` is not a nonnegative integer"))
    };
    match text.split_once("..") {
        Some((a, b)) => {
            let (start, end) = (num(a)?, num(b.trim_start_matches('='))?);
            if start > end {
                return Err(format!("empty range `{text}`"));
            }
            Ok(KRange { start, end })
        }
        None => num(text).map(|k| KRange { start: k, end: k }),
    }
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    pub family: FamilyName,

    /// Member index `N` or inclusive range `A..B`.
    #[arg(long, value_parser = parse_k_range, allow_hyphen_values = true)]
    pub k: KRange,

    /// Also run the recurrence and report agreement.
    #[arg(long)]
    pub check: bool,
}

#[derive(Debug, Args)]
pub struct GfArgs {
    #[arg(long)]
    pub family: GfFamily,

    #[arg(long, allow_hyphen_values = true)]
    pub kmax: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Sweep every signature with total length up to this bound
    /// (5 when no other work is requested).
    #[arg(long, allow_hyphen_values = true)]
    pub max_s: Option<usize>,

    /// Compare engine, oracle and closed form on GZ(2^2 3^3).
    #[arg(long = "adjudicate-223-k3")]
    pub adjudicate: bool,

    /// Skip the fiber decomposition check.
    #[arg(long)]
    pub no_fiber: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Csv,
}

/// What the user typed.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum InputEcho {
    Lambda(String),
    Signature(String),
    Family { name: String, k: usize },
}

#[derive(Clone, Debug, Serialize)]
pub struct OutputRecord {
    pub input: InputEcho,
    pub signature: Signature,
    pub dimension: usize,
    pub f_vector: Vec<String>,
    pub h_vector: Vec<String>,
    pub timing_ms: f64,
    /// Present only under `--check`: whether the recurrence agrees.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub engine_agrees: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GfRecord {
    pub family: String,
    pub k: usize,
    pub h: String,
    pub h_vector: Vec<String>,
    pub matches_formula: bool,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct CheckSummary {
    pub name: String,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub failures: Vec<String>,
    pub skips: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Adjudication {
    pub signature: Signature,
    pub worked_example: Vec<String>,
    pub formula: Vec<String>,
    pub engine: Vec<String>,
    pub oracle: Option<Vec<String>>,
    pub computations_agree: bool,
    pub matches_worked_example: bool,
    pub matches_formula: bool,
    pub verdict: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub max_s: Option<usize>,
    pub signatures: usize,
    pub checks: Vec<CheckSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub adjudication: Option<Adjudication>,
    pub status: String,
    pub timing_ms: f64,
}

/// Parses `args` (including the program name), runs, and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let format = if cli.json {
        Format::Json
    } else if cli.csv {
        Format::Csv
    } else {
        Format::Text
    };
    let outcome = match &cli.command {
        Command::F(a) => cmd_f(a).map(|r| (render_f(&r, format, cli.quiet), EXIT_OK)),
        Command::Family(a) => cmd_family(a).map(|rs| {
            let code = if rs.iter().any(|r| r.engine_agrees == Some(false)) {
                EXIT_VERIFY_FAILED
            } else {
                EXIT_OK
            };
            (render_family(&rs, format, cli.quiet), code)
        }),
        Command::Gf(a) => Ok(cmd_gf(a)).map(|rs| {
            let code = if rs.iter().all(|r| r.matches_formula) {
                EXIT_OK
            } else {
                EXIT_VERIFY_FAILED
            };
            (render_gf(&rs, format, cli.quiet), code)
        }),
        Command::Verify(a) => cmd_verify(a, &OracleLimits::from_env()).map(|r| {
            let code = match r.status.as_str() {
                "pass" => EXIT_OK,
                "resource-limit" => EXIT_RESOURCE,
                _ => EXIT_VERIFY_FAILED,
            };
            (render_verify(&r, format, cli.quiet), code)
        }),
    };
    match outcome {
        Ok((text, code)) => match emit(&text, cli.out.as_deref()) {
            Ok(()) => code,
            Err(e) => {
                eprintln!("error: {e}");
                EXIT_USAGE
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::ResourceLimit(_) => EXIT_RESOURCE,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn emit(text: &str, out: Option<&std::path::Path>) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()
        }
    }
}

fn elapsed_ms(start: Instant) -> f64 {
    (start.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

/// `f --lambda ... | --signature ...`
pub fn cmd_f(args: &FArgs) -> Result<OutputRecord> {
    let start = Instant::now();
    let (input, sig) = match (&args.lambda, &args.signature) {
        (Some(l), None) => (
            InputEcho::Lambda(l.clone()),
            parse_sequence(l)?.canonicalize(),
        ),
        (None, Some(m)) => (InputEcho::Signature(m.clone()), Signature::parse(m)?),
        _ => {
            return Err(Error::InvalidArgument(
                "give exactly one of --lambda and --signature".into(),
            ))
        }
    };
    let f = crate::recurrence::f_polynomial(&sig);
    Ok(OutputRecord {
        input,
        dimension: sig.dimension(),
        h_vector: f.substitute_shift(-1).to_decimal_strings(),
        f_vector: f.to_decimal_strings(),
        signature: sig,
        timing_ms: elapsed_ms(start),
        engine_agrees: None,
    })
}

fn family_signature(name: FamilyName, k: usize) -> Signature {
    LevelSequence::from_integers(&name.top_row(k))
        .expect("family top rows are nondecreasing")
        .canonicalize()
}

/// `family NAME --k N|A..B [--check]`
pub fn cmd_family(args: &FamilyArgs) -> Result<Vec<OutputRecord>> {
    let engine = Engine::new();
    let ks: Vec<usize> = (args.k.start..=args.k.end).collect();
    Ok(ks
        .into_iter()
        .map(|k| {
            let start = Instant::now();
            let sig = family_signature(args.family, k);
            let h = args.family.h(k);
            let f = args.family.f(k);
            let engine_agrees = args
                .check
                .then(|| engine.h_polynomial(&sig) == h && engine.f_polynomial(&sig) == f);
            OutputRecord {
                input: InputEcho::Family {
                    name: args.family.label().into(),
                    k,
                },
                dimension: sig.dimension(),
                signature: sig,
                f_vector: f.to_decimal_strings(),
                h_vector: h.to_decimal_strings(),
                timing_ms: elapsed_ms(start),
                engine_agrees,
            }
        })
        .collect())
}

/// `gf --family NAME --kmax K`
pub fn cmd_gf(args: &GfArgs) -> Vec<GfRecord> {
    let (family, name) = match args.family {
        GfFamily::F123K => (Family::F123K, FamilyName::F123K),
        GfFamily::F223K => (Family::F223K, FamilyName::F223K),
    };
    gf_family(family)
        .series_coeffs(args.kmax)
        .into_iter()
        .enumerate()
        .map(|(k, h)| GfRecord {
            family: name.label().into(),
            k,
            h: h.display_in("s").to_string(),
            h_vector: h.to_decimal_strings(),
            matches_formula: h == name.h(k),
        })
        .collect()
}

const CHECKS: [&str; 5] = [
    "oracle-vs-engine",
    "reversal",
    "euler",
    "dimension",
    "fiber",
];

enum Verdict {
    Pass,
    Fail(String),
    Skip(String),
}

fn check_signature(
    sig: &Signature,
    limits: &OracleLimits,
    unfolded: &Engine,
    fiber: bool,
) -> [Verdict; 5] {
    let f = crate::recurrence::f_polynomial(sig);
    let dim = sig.dimension();
    let lattice = face_lattice(sig, limits);

    let oracle_vs_engine = match &lattice {
        Ok(l) => {
            let engine: Vec<String> = f.to_decimal_strings();
            let oracle: Vec<String> = l.f_vector.iter().map(u64::to_string).collect();
            if engine == oracle {
                Verdict::Pass
            } else {
                Verdict::Fail(format!("{sig}: engine {engine:?}, oracle {oracle:?}"))
            }
        }
        Err(e) => Verdict::Skip(format!("{sig}: {e}")),
    };

    let a = unfolded.f_polynomial(sig);
    let b = unfolded.f_polynomial(&sig.reversed());
    let reversal = if a == b && a == f {
        Verdict::Pass
    } else {
        Verdict::Fail(format!("{sig}: f = {a}, reversed f = {b}"))
    };

    let at_minus_one = f.evaluate_i64(-1);
    let euler = match (&lattice, at_minus_one == 1.into()) {
        (_, false) => Verdict::Fail(format!("{sig}: f(-1) = {at_minus_one}")),
        (Ok(l), true) if l.euler_sum() != 1 => {
            Verdict::Fail(format!("{sig}: oracle alternating sum {}", l.euler_sum()))
        }
        _ => Verdict::Pass,
    };

    let degree = f.degree().unwrap_or(0);
    let dimension = match &lattice {
        _ if degree != dim => Verdict::Fail(format!("{sig}: deg f = {degree}, e2 = {dim}")),
        Ok(l) if l.f_vector.len() != dim + 1 => Verdict::Fail(format!(
            "{sig}: oracle top dimension {}",
            l.f_vector.len() - 1
        )),
        _ => Verdict::Pass,
    };

    let fiber = match (&lattice, fiber) {
        (_, false) => Verdict::Skip(format!("{sig}: disabled")),
        (Err(e), true) => Verdict::Skip(format!("{sig}: {e}")),
        (Ok(l), true) => match fiber_decomposition_check_on(l, limits) {
            Ok(r) if r.passed() => Verdict::Pass,
            Ok(r) => Verdict::Fail(format!("{sig}: {}", r.failure.unwrap_or_default())),
            Err(e) => Verdict::Skip(format!("{sig}: {e}")),
        },
    };

    [oracle_vs_engine, reversal, euler, dimension, fiber]
}

/// Engine, oracle and closed form on `GZ(2^2 3^3)`, next to the worked
/// example vector `(1,1,1,2,1)`.
pub fn adjudicate_223_k3(limits: &OracleLimits) -> Adjudication {
    let sig = Signature::new(vec![2, 3]).expect("valid");
    let worked = IntPoly::from_coeffs(vec![1, 1, 1, 2, 1]);
    let formula = h_223k(3);
    let engine = crate::recurrence::h_polynomial(&sig);
    let oracle = face_lattice(&sig, limits).ok().map(|l| {
        IntPoly::from_coeffs(l.f_vector.iter().map(|&x| x as i64).collect()).substitute_shift(-1)
    });
    let computations_agree = engine == formula && oracle.as_ref().is_some_and(|o| *o == engine);
    let matches_worked_example = engine == worked;
    let matches_formula = engine == formula;
    let verdict = match (&oracle, computations_agree) {
        (None, _) => "oracle unavailable; engine and formula compared only".to_string(),
        (Some(_), false) => "engine, oracle and formula disagree".to_string(),
        (Some(_), true) if matches_worked_example => {
            "all computations give the worked example vector".to_string()
        }
        (Some(_), true) => format!(
            "engine, oracle and formula agree on {}; the worked example vector (1,1,1,2,1) is wrong",
            engine.display_in("s")
        ),
    };
    Adjudication {
        signature: sig,
        worked_example: worked.to_decimal_strings(),
        formula: formula.to_decimal_strings(),
        engine: engine.to_decimal_strings(),
        oracle: oracle.map(|o| o.to_decimal_strings()),
        computations_agree,
        matches_worked_example,
        matches_formula,
        verdict,
    }
}

/// `verify [--max-s N] [--adjudicate-223-k3]`
pub fn cmd_verify(args: &VerifyArgs, limits: &OracleLimits) -> Result<VerifyReport> {
    let start = Instant::now();
    let max_s = match (args.max_s, args.adjudicate) {
        (None, true) => None,
        (m, _) => Some(m.unwrap_or(5)),
    };
    if let Some(m) = max_s {
        if m > limits.max_s {
            return Err(Error::ResourceLimit(format!(
                "--max-s {m} exceeds the oracle bound {}",
                limits.max_s
            )));
        }
    }
    let mut sigs: Vec<Signature> = (1..=max_s.unwrap_or(0))
        .flat_map(Signature::all_with_total)
        .collect();
    sigs.sort_by(|a, b| (a.total_len(), a.mults()).cmp(&(b.total_len(), b.mults())));

    let unfolded = Engine::with_config(EngineConfig {
        fold_reversal: false,
        ..EngineConfig::default()
    });
    let results = par::map(Parallelism::default(), &sigs, |sig| {
        check_signature(sig, limits, &unfolded, !args.no_fiber)
    });

    let mut checks: Vec<CheckSummary> = CHECKS
        .iter()
        .map(|name| CheckSummary {
            name: (*name).into(),
            ..CheckSummary::default()
        })
        .collect();
    for verdicts in results {
        for (summary, v) in checks.iter_mut().zip(verdicts) {
            match v {
                Verdict::Pass => summary.passed += 1,
                Verdict::Fail(msg) => {
                    summary.failed += 1;
                    summary.failures.push(msg);
                }
                Verdict::Skip(msg) => {
                    summary.skipped += 1;
                    summary.skips.push(msg);
                }
            }
        }
    }
    if args.no_fiber {
        checks.retain(|c| c.name != "fiber");
    }

    let adjudication = args.adjudicate.then(|| adjudicate_223_k3(limits));
    let failed = checks.iter().any(|c| c.failed > 0)
        || adjudication
            .as_ref()
            .is_some_and(|a| a.oracle.is_some() && !a.computations_agree);
    let skipped = checks.iter().any(|c| c.skipped > 0)
        || adjudication.as_ref().is_some_and(|a| a.oracle.is_none());
    let status = if failed {
        "fail"
    } else if skipped {
        "resource-limit"
    } else {
        "pass"
    };
    Ok(VerifyReport {
        max_s,
        signatures: sigs.len(),
        checks,
        adjudication,
        status: status.into(),
        timing_ms: elapsed_ms(start),
    })
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("plain data serializes");
    text.push('\n');
    text
}

fn csv_text(header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

/// `GZ(1 2^3 3)` style name of a signature.
pub fn gz_name(sig: &Signature) -> String {
    let parts: Vec<String> = sig
        .mults()
        .iter()
        .enumerate()
        .map(|(q, &m)| match m {
            1 => format!("{}", q + 1),
            _ => format!("{}^{m}", q + 1),
        })
        .collect();
    format!("GZ({})", parts.join(" "))
}

fn vector_rows(r: &OutputRecord, prefix: &[String]) -> Vec<Vec<String>> {
    (0..=r.dimension)
        .map(|d| {
            let mut row = prefix.to_vec();
            row.push(d.to_string());
            row.push(r.f_vector.get(d).cloned().unwrap_or_else(|| "0".into()));
            row.push(r.h_vector.get(d).cloned().unwrap_or_else(|| "0".into()));
            row
        })
        .collect()
}

fn text_table(out: &mut String, r: &OutputRecord) {
    let rows = vector_rows(r, &[]);
    let wf = rows.iter().map(|x| x[1].len()).max().unwrap_or(0).max(3);
    let wh = rows.iter().map(|x| x[2].len()).max().unwrap_or(0).max(3);
    let wd = r.dimension.to_string().len().max(3);
    let _ = writeln!(out, "  {:>wd$}  {:>wf$}  {:>wh$}", "dim", "f_d", "h_d");
    for row in rows {
        let _ = writeln!(out, "  {:>wd$}  {:>wf$}  {:>wh$}", row[0], row[1], row[2]);
    }
}

fn render_f(r: &OutputRecord, format: Format, quiet: bool) -> String {
    match format {
        Format::Json => to_json(r),
        Format::Csv => csv_text(&["dim", "f_d", "h_d"], vector_rows(r, &[])),
        Format::Text if quiet => format!(
            "f = ({})\nh = ({})\n",
            r.f_vector.join(","),
            r.h_vector.join(",")
        ),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "{} = signature {}, dimension {}  [{:.3} ms]",
                gz_name(&r.signature),
                r.signature,
                r.dimension,
                r.timing_ms
            );
            text_table(&mut out, r);
            out
        }
    }
}

fn render_family(rs: &[OutputRecord], format: Format, quiet: bool) -> String {
    match format {
        Format::Json => to_json(&rs),
        Format::Csv => {
            let rows = rs
                .iter()
                .flat_map(|r| {
                    let k = match &r.input {
                        InputEcho::Family { k, .. } => k.to_string(),
                        _ => String::new(),
                    };
                    vector_rows(r, &[k])
                })
                .collect();
            csv_text(&["k", "dim", "f_d", "h_d"], rows)
        }
        Format::Text => {
            let mut out = String::new();
            for r in rs {
                let k = match &r.input {
                    InputEcho::Family { k, .. } => *k,
                    _ => 0,
                };
                let check = match r.engine_agrees {
                    Some(true) => "  recurrence agrees",
                    Some(false) => "  RECURRENCE DISAGREES",
                    None => "",
                };
                if quiet {
                    let _ = writeln!(out, "k={k} h = ({}){check}", r.h_vector.join(","));
                    continue;
                }
                let _ = writeln!(
                    out,
                    "k = {k}: {} = signature {}, dimension {}{check}",
                    gz_name(&r.signature),
                    r.signature,
                    r.dimension
                );
                text_table(&mut out, r);
            }
            out
        }
    }
}

fn render_gf(rs: &[GfRecord], format: Format, quiet: bool) -> String {
    match format {
        Format::Json => to_json(&rs),
        Format::Csv => {
            let rows = rs
                .iter()
                .flat_map(|r| {
                    r.h_vector
                        .iter()
                        .enumerate()
                        .map(|(d, h)| vec![r.k.to_string(), d.to_string(), h.clone()])
                        .collect::<Vec<_>>()
                })
                .collect();
            csv_text(&["k", "dim", "h_d"], rows)
        }
        Format::Text => {
            let mut out = String::new();
            for r in rs {
                let flag = if r.matches_formula {
                    ""
                } else {
                    "  (DIFFERS FROM FORMULA)"
                };
                if quiet {
                    let _ = writeln!(out, "{}{flag}", r.h);
                } else {
                    let _ = writeln!(out, "[z^{}] {}{flag}", r.k, r.h);
                }
            }
            out
        }
    }
}

fn render_verify(r: &VerifyReport, format: Format, quiet: bool) -> String {
    match format {
        Format::Json => to_json(r),
        Format::Csv => {
            let rows = r
                .checks
                .iter()
                .map(|c| {
                    vec![
                        c.name.clone(),
                        c.passed.to_string(),
                        c.failed.to_string(),
                        c.skipped.to_string(),
                    ]
                })
                .collect();
            csv_text(&["check", "passed", "failed", "skipped"], rows)
        }
        Format::Text => {
            let mut out = String::new();
            if !quiet {
                if let Some(m) = r.max_s {
                    let _ = writeln!(out, "{} signatures with s <= {m}", r.signatures);
                    for c in &r.checks {
                        let _ = writeln!(
                            out,
                            "  {:<17} passed {:>4}  failed {:>4}  skipped {:>4}",
                            c.name, c.passed, c.failed, c.skipped
                        );
                        for msg in &c.failures {
                            let _ = writeln!(out, "    FAIL {msg}");
                        }
                        for msg in &c.skips {
                            let _ = writeln!(out, "    skip {msg}");
                        }
                    }
                }
                if let Some(a) = &r.adjudication {
                    let show = |v: &[String]| v.join(",");
                    let _ = writeln!(out, "adjudication for {}:", gz_name(&a.signature));
                    let _ = writeln!(out, "  worked example h  ({})", show(&a.worked_example));
                    let _ = writeln!(out, "  closed form h     ({})", show(&a.formula));
                    let _ = writeln!(out, "  recurrence h      ({})", show(&a.engine));
                    match &a.oracle {
                        Some(o) => {
                            let _ = writeln!(out, "  oracle h          ({})", show(o));
                        }
                        None => {
                            let _ = writeln!(out, "  oracle h          unavailable");
                        }
                    }
                    let _ = writeln!(out, "  verdict: {}", a.verdict);
                }
            }
            let _ = writeln!(out, "status: {}  [{:.1} ms]", r.status, r.timing_ms);
            out
        }
    }
}
