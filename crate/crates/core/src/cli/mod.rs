//! Command implementations behind the `zmeasures` binary.
//!
//! Every command renders its whole output into a string first. Runs with the
//! same arguments produce byte-identical output, and `--output` replaces the
//! target file atomically (write to a sibling temp file, then rename).
//!
//! CSV outputs start with two comment lines,
//!
//! ```text
//! # zmeasures <version>
//! # config {"command":...}
//! ```
//!
//! and JSON outputs carry the same information in `version` and `config`.
//!
//! Exit codes: `0` success, `1` a verification failed, `2` usage or parse
//! error, `3` math-domain error.

mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::Error;
use crate::kernel::{
    block_factorization, brute_corr_rimhook, rho_det_report, KernelMatrix, KernelSpec, Method, RimHookTable,
};
use crate::measure::{
    brute_corr, mixed_weight, negative_binomial_tail, sample, sample_fit, size_distribution, zmeasure_n, Params,
};
use crate::partition::{enumerate_partitions, parse_points, partitions_up_to, residue, HalfInt, Partition};
use crate::scalar::{GaussRat, Scalar, C64};

pub use verify::Suite;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "zmeasures", version, about = "z-measures on partitions and their correlation kernels")]
pub struct Cli {
    /// Write to this file (atomically) instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Table of M_n(λ) over |λ| = n, or of the mixed measure M(λ) over |λ| ≤ n.
    Measure(MeasureArgs),
    /// Kernel matrix [K_r(i, j)] over a point list.
    Kernel(KernelArgs),
    /// ρ(X) by determinant and by brute-force enumeration.
    Corr(CorrArgs),
    /// Exact samples from the mixed measure.
    Sample(SampleArgs),
    /// Runs the identity suites and prints a JSON report.
    Verify(VerifyArgs),
    /// Rim-hook correlations of every small subset of a point list.
    RimhookCorr(RimhookArgs),
}

#[derive(Args, Debug, Clone)]
pub struct ParamArgs {
    /// z, as `p/q+r/si` or a decimal such as `0.3` or `1+2i`.
    #[arg(long, default_value = "0.3", allow_hyphen_values = true)]
    pub z: String,
    /// z'.
    #[arg(long, default_value = "0.7", allow_hyphen_values = true)]
    pub zp: String,
    /// Mixing parameter ξ in [0, 1).
    #[arg(long, default_value = "0.3")]
    pub xi: String,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Float,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Series,
    Closed,
    Both,
}

#[derive(Args, Debug)]
pub struct MeasureArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    /// Size n (or the truncation size with `--mixed`).
    #[arg(long)]
    pub n: usize,
    /// Tabulate the mixed measure M(λ) for |λ| ≤ n.
    #[arg(long)]
    pub mixed: bool,
    #[arg(long, value_enum, default_value_t = Mode::Float)]
    pub mode: Mode,
    /// Only print rows with |value| above this (exact text in exact mode).
    /// Without it only exact zeros are dropped.
    #[arg(long)]
    pub threshold: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct KernelArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    /// Comma separated half-integers, e.g. `-1/2,3/2`.
    #[arg(long, allow_hyphen_values = true)]
    pub points: String,
    #[arg(long, default_value_t = 1)]
    pub r: usize,
    #[arg(long, value_enum, default_value_t = MethodArg::Closed)]
    pub method: MethodArg,
    /// Series tolerance.
    #[arg(long, default_value_t = 1e-14)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct CorrArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    /// The set X; `-` or empty for X = ∅.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    pub points: String,
    #[arg(long, default_value_t = 1)]
    pub r: usize,
    /// Brute-force truncation size (default 25, or 20 when r > 1).
    #[arg(long)]
    pub n: Option<usize>,
    /// Allowed gap beyond the truncation tail.
    #[arg(long, default_value_t = 1e-6)]
    pub tol: f64,
    /// Exit with status 1 when the gap exceeds tail + tol.
    #[arg(long)]
    pub strict: bool,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct SampleArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, default_value_t = 1000)]
    pub count: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Truncation size of the sampler.
    #[arg(long, default_value_t = 40)]
    pub n: usize,
    /// Largest mass the truncation may drop.
    #[arg(long, default_value_t = 1e-12)]
    pub max_tail: f64,
    /// Partitions up to this size get their own χ² bin.
    #[arg(long, default_value_t = 8)]
    pub fit_size: usize,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    /// Suites to run (repeatable); all of them by default.
    #[arg(long, value_enum)]
    pub suite: Vec<Suite>,
    /// Largest partition size for the exact suites and the DU size cap.
    #[arg(long, default_value_t = 8)]
    pub max_size: usize,
    #[arg(long, default_value = "1/4", allow_hyphen_values = true)]
    pub alpha: String,
    #[arg(long, default_value = "1/4", allow_hyphen_values = true)]
    pub beta: String,
    /// Restrict the r-dependent suites to this r.
    #[arg(long)]
    pub r: Option<usize>,
    /// DU threshold.
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    /// Truncation size of the rim-hook suite.
    #[arg(long, default_value_t = 20)]
    pub n: usize,
}

#[derive(Args, Debug)]
pub struct RimhookArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    /// Candidate points; every same-residue subset up to `--max-points` is checked.
    #[arg(long, default_value = "-7/2,-5/2,-3/2,-1/2,1/2,3/2,5/2,7/2", allow_hyphen_values = true)]
    pub points: String,
    #[arg(long, default_value_t = 2)]
    pub r: usize,
    #[arg(long, default_value_t = 20)]
    pub n: usize,
    #[arg(long, default_value_t = 2)]
    pub max_points: usize,
    /// Allowed gap beyond the truncation tail.
    #[arg(long, default_value_t = 1e-5)]
    pub tol: f64,
    #[arg(long)]
    pub strict: bool,
}

/// A failed run: exit status and message for stderr.
#[derive(Debug, Clone, PartialEq)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::NotHalfInteger(_) | Error::InvalidPartition(_) => EXIT_USAGE,
            _ => EXIT_DOMAIN,
        };
        Failure { code, message: e.to_string() }
    }
}

/// Rendered output and the exit status it should produce.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub text: String,
    pub code: i32,
}

impl Report {
    fn ok(text: String) -> Self {
        Report { text, code: EXIT_OK }
    }

    fn checked(text: String, pass: bool) -> Self {
        Report { text, code: if pass { EXIT_OK } else { EXIT_VERIFY } }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

/// Parses arguments, runs the command, writes the output and returns the
/// process exit status.
pub fn main_with_args<I, T>(args: I) -> i32
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
    match run(&cli.command).and_then(|report| emit(&report.text, cli.output.as_deref()).map(|_| report.code)) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

pub fn run(command: &Command) -> CliResult<Report> {
    match command {
        Command::Measure(a) => cmd_measure(a),
        Command::Kernel(a) => cmd_kernel(a),
        Command::Corr(a) => cmd_corr(a),
        Command::Sample(a) => cmd_sample(a),
        Command::Verify(a) => verify::cmd_verify(a),
        Command::RimhookCorr(a) => cmd_rimhook(a),
    }
}

fn emit(text: &str, path: Option<&Path>) -> CliResult<()> {
    let io = |e: std::io::Error| Failure::usage(format!("cannot write output: {e}"));
    match path {
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(io)?;
            out.flush().map_err(io)
        }
        Some(path) => {
            let mut tmp = path.as_os_str().to_owned();
            tmp.push(format!(".tmp{}", std::process::id()));
            let tmp = PathBuf::from(tmp);
            std::fs::write(&tmp, text).map_err(io)?;
            std::fs::rename(&tmp, path).map_err(|e| {
                let _ = std::fs::remove_file(&tmp);
                io(e)
            })
        }
    }
}

fn header(config: &Value) -> String {
    format!("# zmeasures {VERSION}\n# config {config}\n")
}

fn json_document(config: Value, body: Value) -> String {
    let mut doc = json!({ "version": VERSION, "config": config });
    if let (Some(d), Value::Object(b)) = (doc.as_object_mut(), body) {
        d.extend(b);
    }
    format!("{}\n", serde_json::to_string_pretty(&doc).expect("JSON values serialise"))
}

fn parse_scalar<S: Scalar>(name: &str, text: &str) -> CliResult<S> {
    S::parse_text(text).map_err(|e| Failure::usage(format!("--{name}: {e}")))
}

fn parse_xi(text: &str) -> CliResult<f64> {
    let xi: C64 = parse_scalar("xi", text)?;
    if xi.im != 0.0 {
        return Err(Failure::usage("--xi must be real"));
    }
    Ok(xi.re)
}

fn parse_point_list(text: &str) -> CliResult<Vec<HalfInt>> {
    parse_points(text).map_err(|e| Failure::usage(format!("--points: {e}")))
}

fn check_r(r: usize) -> CliResult<()> {
    if r == 0 {
        return Err(Failure::usage("--r must be at least 1"));
    }
    Ok(())
}

fn float_params(p: &ParamArgs) -> CliResult<(C64, C64, f64)> {
    Ok((parse_scalar("z", &p.z)?, parse_scalar("zp", &p.zp)?, parse_xi(&p.xi)?))
}

/// Shortest round-trip form, scientific for very small or large values.
fn num(x: f64) -> String {
    format!("{:?}", x + 0.0)
}

fn complex_text(v: C64) -> String {
    C64::new(v.re + 0.0, v.im + 0.0).to_text()
}

fn complex_json(v: C64) -> Value {
    json!({ "re": v.re, "im": v.im })
}

fn points_text(x: &[HalfInt]) -> Vec<String> {
    x.iter().map(HalfInt::to_string).collect()
}

fn csv_partition(l: &Partition) -> String {
    format!("\"({})\"", l.parts().iter().map(usize::to_string).collect::<Vec<_>>().join(","))
}

fn cmd_measure(a: &MeasureArgs) -> CliResult<Report> {
    match a.mode {
        Mode::Exact => measure_table::<GaussRat>(a),
        Mode::Float => measure_table::<C64>(a),
    }
}

/// `|v| > t`. Exact values are compared in rational arithmetic.
fn above<S: Scalar>(v: &S, threshold: &Option<S>) -> bool {
    match threshold {
        None => !v.is_zero(),
        Some(t) if S::EXACT => {
            let exact = |s: &S| GaussRat::parse_text(&s.to_text()).expect("exact text round-trips");
            let (v, t) = (exact(v), exact(t));
            v.re.clone() * v.re + v.im.clone() * v.im > t.re.clone() * t.re + t.im.clone() * t.im
        }
        Some(t) => v.abs_f64() > t.abs_f64(),
    }
}

fn measure_table<S: Scalar>(a: &MeasureArgs) -> CliResult<Report> {
    let exact = S::EXACT;
    let z: S = parse_scalar("z", &a.params.z)?;
    let zp: S = parse_scalar("zp", &a.params.zp)?;
    let xi: S = parse_scalar("xi", &a.params.xi)?;
    let threshold: Option<S> = match &a.threshold {
        None => None,
        Some(t) => Some(parse_scalar("threshold", t)?),
    };
    let p = Params::new(z, zp, xi)?;
    let mut config = json!({
        "command": "measure",
        "mode": if exact { "exact" } else { "float" },
        "z": p.z.to_text(),
        "zp": p.zp.to_text(),
        "n": a.n,
        "mixed": a.mixed,
    });
    if a.mixed {
        config["xi"] = json!(p.xi.to_text());
    }
    if let Some(t) = &threshold {
        config["threshold"] = json!(t.to_text());
    }

    let mut rows: Vec<(Partition, S)> = Vec::new();
    let mut sum = S::zero();
    if a.mixed {
        for l in partitions_up_to(a.n) {
            let w = mixed_weight(&l, &p)?;
            sum = sum + w.clone();
            rows.push((l, w));
        }
    } else {
        for l in enumerate_partitions(a.n) {
            let w = zmeasure_n(&l, &p)?;
            sum = sum + w.clone();
            rows.push((l, w));
        }
    }
    rows.retain(|(_, w)| above(w, &threshold));

    let mut summary: Vec<(String, String)> = vec![("sum".into(), sum.to_text())];
    if a.mixed {
        if exact {
            summary.push(("mass outside".into(), (S::one() - sum.clone()).to_text()));
        } else {
            let pc = p.to_c64();
            if pc.zzp().im == 0.0 {
                let tail = negative_binomial_tail(pc.zzp().re, pc.xi.re, a.n);
                summary.push(("tail bound".into(), num(tail)));
            }
        }
    }

    let text = match a.format {
        Format::Csv => {
            let mut out = header(&config);
            out.push_str(if exact { "partition,size,value\n" } else { "partition,size,re,im\n" });
            for (l, w) in &rows {
                if exact {
                    out.push_str(&format!("{},{},{}\n", csv_partition(l), l.size(), w.to_text()));
                } else {
                    let c = w.to_c64();
                    out.push_str(&format!("{},{},{},{}\n", csv_partition(l), l.size(), num(c.re), num(c.im)));
                }
            }
            for (k, v) in &summary {
                out.push_str(&format!("# {k} = {v}\n"));
            }
            out
        }
        Format::Json => {
            let value = |w: &S| if exact { json!(w.to_text()) } else { complex_json(w.to_c64()) };
            let rows: Vec<Value> = rows
                .iter()
                .map(|(l, w)| json!({ "partition": l.parts(), "size": l.size(), "value": value(w) }))
                .collect();
            let mut body = json!({ "rows": rows });
            for (k, v) in &summary {
                body[k.replace(' ', "_")] = json!(v);
            }
            json_document(config, body)
        }
    };
    Ok(Report::ok(text))
}

fn cmd_kernel(a: &KernelArgs) -> CliResult<Report> {
    check_r(a.r)?;
    let (z, zp, xi) = float_params(&a.params)?;
    let points = parse_point_list(&a.points)?;
    let ks = KernelSpec::with_r(z, zp, xi, a.r)?;
    let config = json!({
        "command": "kernel",
        "z": z.to_text(),
        "zp": zp.to_text(),
        "xi": xi,
        "r": a.r,
        "points": points_text(&points),
        "method": format!("{:?}", a.method).to_lowercase(),
        "tol": a.tol,
    });
    let (matrix, discrepancy) = match a.method {
        MethodArg::Series => (KernelMatrix::build(&points, &ks, Method::Series, a.tol)?, None),
        MethodArg::Closed => (KernelMatrix::build(&points, &ks, Method::Closed, a.tol)?, None),
        MethodArg::Both => {
            let closed = KernelMatrix::build(&points, &ks, Method::Closed, a.tol)?;
            let series = KernelMatrix::build(&points, &ks, Method::Series, a.tol)?;
            let d = closed.max_difference(&series);
            (closed, Some(d))
        }
    };
    let text = match a.format {
        Format::Csv => {
            let mut out = header(&config);
            out.push_str("i,j,re,im\n");
            for (i, row) in points.iter().zip(&matrix.entries) {
                for (j, v) in points.iter().zip(row) {
                    out.push_str(&format!("{i},{j},{},{}\n", num(v.re), num(v.im)));
                }
            }
            if let Some(d) = discrepancy {
                out.push_str(&format!("# max |series - closed| = {}\n", num(d)));
            }
            out
        }
        Format::Json => {
            let entries: Vec<Vec<Value>> =
                matrix.entries.iter().map(|row| row.iter().map(|&v| complex_json(v)).collect()).collect();
            let mut body = json!({ "points": points_text(&points), "entries": entries });
            if let Some(d) = discrepancy {
                body["discrepancy"] = json!(d);
            }
            json_document(config, body)
        }
    };
    Ok(Report::ok(text))
}

fn cmd_corr(a: &CorrArgs) -> CliResult<Report> {
    check_r(a.r)?;
    let (z, zp, xi) = float_params(&a.params)?;
    let x = parse_point_list(&a.points)?;
    let n = a.n.unwrap_or(if a.r == 1 { 25 } else { 20 });
    let ks = KernelSpec::with_r(z, zp, xi, a.r)?;
    let det = rho_det_report(&x, &ks, 1e-14)?;
    let (brute, tail, rigorous) = if a.r == 1 {
        let (rho, tail) = brute_corr(&x, &Params::new(z, zp, C64::new(xi, 0.0))?, n)?;
        (rho, tail.bound, tail.rigorous)
    } else {
        let (rho, table) = brute_corr_rimhook(&x, &ks, n)?;
        (rho, table.tail, table.rigorous)
    };
    let gap = (det.value - brute).norm();
    let within = gap <= tail + a.tol;
    let config = json!({
        "command": "corr",
        "z": z.to_text(),
        "zp": zp.to_text(),
        "xi": xi,
        "r": a.r,
        "points": points_text(&x),
        "n": n,
        "tol": a.tol,
        "strict": a.strict,
    });
    let mut rows: Vec<(&str, Value, String)> = vec![
        ("det", complex_json(det.value), complex_text(det.value)),
        ("brute", complex_json(brute), complex_text(brute)),
        ("tail", json!(tail), num(tail)),
        ("tail_rigorous", json!(rigorous), rigorous.to_string()),
        ("gap", json!(gap), num(gap)),
        ("gap_within_tail_plus_tol", json!(within), within.to_string()),
        ("condition", json!(det.condition), num(det.condition)),
    ];
    let mixed = a.r > 1 && x.iter().any(|&k| residue(k, a.r) != residue(x[0], a.r));
    if mixed {
        let (full, product) = block_factorization(&x, &ks, 1e-14)?;
        let fgap = (full - product).norm();
        rows.push(("det_product_over_residues", complex_json(product), complex_text(product)));
        rows.push(("factorization_gap", json!(fgap), num(fgap)));
    }
    let text = match a.format {
        Format::Csv => {
            let mut out = header(&config);
            out.push_str("quantity,value\n");
            for (k, _, v) in &rows {
                out.push_str(&format!("{k},{v}\n"));
            }
            out
        }
        Format::Json => {
            let mut body = json!({});
            for (k, v, _) in rows {
                body[k] = v;
            }
            json_document(config, body)
        }
    };
    Ok(Report::checked(text, within || !a.strict))
}

fn cmd_sample(a: &SampleArgs) -> CliResult<Report> {
    let (z, zp, xi) = float_params(&a.params)?;
    let p = Params::new(z, zp, C64::new(xi, 0.0))?;
    let s = sample(&p, a.count, a.n, a.seed, a.max_tail)?;
    let config = json!({
        "command": "sample",
        "z": z.to_text(),
        "zp": zp.to_text(),
        "xi": xi,
        "count": a.count,
        "seed": a.seed,
        "rng": "ChaCha8Rng::seed_from_u64",
        "n": a.n,
        "max_tail": a.max_tail,
        "fit_size": a.fit_size,
    });
    let mut out = header(&config);
    for l in &s.draws {
        out.push_str(&format!("{l}\n"));
    }
    let sizes: Vec<f64> = size_distribution(&p, a.n)?.iter().map(|w| w.re).collect();
    let mass: f64 = sizes.iter().sum();
    let mut counts = vec![0usize; a.n + 1];
    for l in &s.draws {
        counts[l.size()] += 1;
    }
    out.push_str("# summary: size, empirical frequency, exact probability\n");
    let shown = a.fit_size.min(a.n);
    for (size, (&c, &w)) in counts.iter().zip(&sizes).enumerate().take(shown + 1) {
        out.push_str(&format!("# {size},{},{}\n", num(c as f64 / a.count.max(1) as f64), num(w / mass)));
    }
    let rest_count: usize = counts[shown + 1..].iter().sum();
    let rest_mass: f64 = sizes[shown + 1..].iter().sum();
    out.push_str(&format!("# >{shown},{},{}\n", num(rest_count as f64 / a.count.max(1) as f64), num(rest_mass / mass)));
    out.push_str(&format!("# truncation tail = {}\n", num(s.tail.bound)));
    if a.count > 0 {
        let fit = sample_fit(&s.draws, &p, a.n, a.fit_size)?;
        out.push_str(&format!("# chi2 = {}, dof = {}, p = {}\n", num(fit.statistic), fit.dof, num(fit.p_value)));
    }
    Ok(Report::ok(out))
}

fn same_residue_subsets(points: &[HalfInt], r: usize, max: usize) -> Vec<Vec<HalfInt>> {
    let mut out: Vec<Vec<HalfInt>> = vec![Vec::new()];
    for &p in points {
        let extended: Vec<Vec<HalfInt>> = out
            .iter()
            .filter(|s| s.len() < max && s.first().is_none_or(|&q| residue(q, r) == residue(p, r)))
            .map(|s| {
                let mut t = s.clone();
                t.push(p);
                t
            })
            .collect();
        out.extend(extended);
    }
    out.retain(|s| !s.is_empty());
    out
}

fn cmd_rimhook(a: &RimhookArgs) -> CliResult<Report> {
    check_r(a.r)?;
    let (z, zp, xi) = float_params(&a.params)?;
    let points = parse_point_list(&a.points)?;
    let ks = KernelSpec::with_r(z, zp, xi, a.r)?;
    let table = RimHookTable::new(&ks, a.n)?;
    let config = json!({
        "command": "rimhook-corr",
        "z": z.to_text(),
        "zp": zp.to_text(),
        "xi": xi,
        "r": a.r,
        "points": points_text(&points),
        "n": a.n,
        "max_points": a.max_points,
        "tol": a.tol,
        "strict": a.strict,
    });
    let mut out = header(&config);
    out.push_str("set,det_re,det_im,brute_re,brute_im,gap\n");
    let mut worst = 0.0f64;
    for x in same_residue_subsets(&points, a.r, a.max_points) {
        let det = rho_det_report(&x, &ks, 1e-14)?.value;
        let brute = table.rho(&x);
        let gap = (det - brute).norm();
        worst = worst.max(gap);
        out.push_str(&format!(
            "\"{}\",{},{},{},{},{}\n",
            points_text(&x).join(" "),
            num(det.re),
            num(det.im),
            num(brute.re),
            num(brute.im),
            num(gap)
        ));
    }
    let z_gap = table.normalization_gap();
    let pass = worst <= table.tail + a.tol && z_gap <= table.tail;
    out.push_str(&format!("# Z_r truncated = {}\n", complex_text(table.z_truncated)));
    out.push_str(&format!("# Z_r predicted = {}\n", complex_text(table.z_predicted)));
    out.push_str(&format!("# Z_r relative gap = {}\n", num(z_gap)));
    out.push_str(&format!("# tail = {} (rigorous: {})\n", num(table.tail), table.rigorous));
    out.push_str(&format!("# max gap = {}, within tail + tol: {pass}\n", num(worst)));
    Ok(Report::checked(out, pass || !a.strict))
}
