//! Command-line front end. Every command builds a [`RunReport`]; text output is
//! rendered from the same data.
//!
//! Exit codes: 0 when the claim is supported, 1 for a counterexample or a
//! failed certificate, 2 for usage errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::certificate::{run_d8_certificate, D8Options};
use crate::error::{Error, Result};
use crate::optimizer::{
    check_pair, scan_incomparable, verify_counterexample, Evidence, InequalityVerdict, NRange, SearchConfig,
    TheoremEvidence,
};
use crate::partition::{enumerate_partitions, majorizes, Partition};
use crate::rational::{format_rational, Rational};
use crate::report::RunReport;
use crate::symmetric::{eval_normalized, eval_raw, normalization_constant, EvalPoint, FamilyTag};

pub const EXIT_SUPPORTED: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "symineq",
    version,
    about = "Exact checks of inequalities between normalized symmetric functions"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalArgs {
    /// Print the JSON report instead of text
    #[arg(long, global = true)]
    pub json: bool,
    /// Sampling seed (default 0)
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Random points per n
    #[arg(long, global = true)]
    pub samples: Option<u64>,
    /// Number of variables: N or LO..HI
    #[arg(long = "n", global = true, value_name = "RANGE")]
    pub n: Option<String>,
    /// Function family: h (complete homogeneous), m (monomial) or p (power sum)
    #[arg(long, global = true, default_value = "h")]
    pub family: String,
    /// JSON file with search settings
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,
    /// Override one search setting, e.g. `--set numerator_bound=20` (repeatable)
    #[arg(long = "set", global = true, value_name = "KEY=VALUE")]
    pub set: Vec<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the partitions of d with their majorization matrix
    Partitions { d: u32 },
    /// Compare two partitions in the majorization order
    Majorize { mu: String, lambda: String },
    /// Evaluate the raw and normalized function of a partition at a point
    Eval { lambda: String, point: String },
    /// Search for a point where F_mu < F_lambda
    Verify { mu: String, lambda: String },
    /// Build the degree-8 positivity certificate
    #[command(name = "certify-d8")]
    CertifyD8 {
        /// Range of n for the monotonicity check, LO..HI with LO >= 2
        #[arg(long, value_name = "RANGE")]
        t_range: Option<String>,
        /// Coefficient table to check against instead of the bundled one
        #[arg(long, value_name = "FILE")]
        coeffs: Option<PathBuf>,
    },
    /// Collect the evidence for the non-majorizing pair of degree d >= 8
    Theorem { d: u32 },
    /// Check every incomparable pair of partitions of d
    Scan {
        d: u32,
        /// Restrict to a single ordered pair
        #[arg(long, num_args = 2, value_names = ["MU", "LAMBDA"])]
        pair: Option<Vec<String>>,
    },
}

/// A finished command: report, exit code, text rendering and stderr warnings.
#[derive(Debug, Clone)]
pub struct CmdOutput {
    pub report: RunReport,
    pub exit: i32,
    pub text: String,
    pub warnings: Vec<String>,
}

/// Exit code for an error raised while running a command.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Certificate { .. } | Error::Divisibility(_) => EXIT_REFUTED,
        _ => EXIT_USAGE,
    }
}

fn parse_partition(s: &str) -> Result<Partition> {
    s.parse()
}

/// Defaults, then `--config`, then `--set`, then the dedicated flags.
pub fn search_config(g: &GlobalArgs) -> Result<SearchConfig> {
    let mut cfg = match &g.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Parse(format!("cannot read config {}: {e}", path.display())))?;
            SearchConfig::from_json(&text)?
        }
        None => SearchConfig::default(),
    };
    for kv in &g.set {
        let (k, v) = kv
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected KEY=VALUE, got `{kv}`")))?;
        cfg.set(k, v)?;
    }
    if let Some(seed) = g.seed {
        cfg.seed = seed;
    }
    if let Some(samples) = g.samples {
        cfg.samples = samples;
    }
    if let Some(n) = &g.n {
        cfg.n_range = NRange::parse(n)?;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn config_json(cfg: &SearchConfig) -> Value {
    serde_json::to_value(cfg).expect("config serializes")
}

fn fr(r: &Rational) -> String {
    format_rational(r)
}

pub fn cmd_partitions(d: u32) -> Result<CmdOutput> {
    let parts = enumerate_partitions(d)?;
    let matrix = parts
        .iter()
        .map(|mu| parts.iter().map(|l| majorizes(mu, l)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let names: Vec<String> = parts.iter().map(Partition::to_block_string).collect();
    let width = names.iter().map(String::len).max().unwrap_or(1);
    let mut text = format!("{} partitions of {d} (row majorizes column: 1)\n", parts.len());
    for (name, row) in names.iter().zip(&matrix) {
        let cells: Vec<&str> = row.iter().map(|&b| if b { "1" } else { "." }).collect();
        let _ = writeln!(text, "{name:>width$}  {}", cells.join(" "));
    }
    let result = json!({ "d": d, "count": parts.len(), "partitions": parts, "majorizes": matrix });
    Ok(CmdOutput {
        report: RunReport::new("partitions", json!({ "d": d }), 0, result),
        exit: EXIT_SUPPORTED,
        text,
        warnings: vec![],
    })
}

fn prefix_sums(p: &Partition, len: usize) -> Vec<u32> {
    p.padded(len)
        .iter()
        .scan(0, |s, &x| {
            *s += x;
            Some(*s)
        })
        .collect()
}

pub fn cmd_majorize(mu: &Partition, lambda: &Partition) -> Result<CmdOutput> {
    let forward = majorizes(mu, lambda)?;
    let backward = majorizes(lambda, mu)?;
    let len = mu.len().max(lambda.len());
    let relation = match (forward, backward) {
        (true, true) => "equal",
        (true, false) => "mu majorizes lambda",
        (false, true) => "lambda majorizes mu",
        (false, false) => "incomparable",
    };
    let result = json!({
        "mu": mu, "lambda": lambda,
        "mu_majorizes_lambda": forward, "lambda_majorizes_mu": backward,
        "relation": relation,
        "mu_prefix_sums": prefix_sums(mu, len), "lambda_prefix_sums": prefix_sums(lambda, len),
    });
    let text = format!("{mu} vs {lambda}: {relation}\n");
    let inputs = json!({ "mu": mu, "lambda": lambda });
    Ok(CmdOutput {
        report: RunReport::new("majorize", inputs, 0, result),
        exit: EXIT_SUPPORTED,
        text,
        warnings: vec![],
    })
}

pub fn cmd_eval(family: FamilyTag, lambda: &Partition, x: &EvalPoint) -> Result<CmdOutput> {
    let n = x.n();
    let raw = eval_raw(family, lambda, x)?;
    let constant = normalization_constant(family, n, lambda)?;
    let normalized = eval_normalized(family, n, lambda, x)?;
    let sym = family.short();
    let text = format!(
        "{sym}_{lambda}{x} = {}\n{}_{{{n},{lambda}}}{x} = {}  (normalization {})\n",
        fr(&raw),
        family.normalized_symbol(),
        fr(&normalized),
        fr(&constant)
    );
    let result = json!({
        "family": family, "n": n, "lambda": lambda, "point": x,
        "raw": fr(&raw), "normalization": fr(&constant), "normalized": fr(&normalized),
    });
    let inputs = json!({ "family": family, "lambda": lambda, "point": x });
    Ok(CmdOutput {
        report: RunReport::new("eval", inputs, 0, result),
        exit: EXIT_SUPPORTED,
        text,
        warnings: vec![],
    })
}

fn verdict_text(v: &InequalityVerdict) -> String {
    let sym = v.family.normalized_symbol();
    let mut s = format!(
        "{sym}_{{n,{}}} >= {sym}_{{n,{}}} for n in {}: {}\n",
        v.mu,
        v.lambda,
        v.n_range,
        v.status.as_str()
    );
    for st in &v.per_n {
        let _ = writeln!(s, "  n = {}: {}", st.n, st.status.as_str());
    }
    for e in &v.evidence {
        let line = match e {
            Evidence::ProfileGrid { n, t_values, scan } => format!(
                "  profiles n = {n}: {t_values} t-values x {n} splits, minimum {} at t = {}, u = {}, v = {}",
                fr(&scan.min_gap),
                fr(&scan.argmin.t),
                scan.argmin.u,
                scan.argmin.v
            ),
            Evidence::Samples { n, points, seed, .. } => format!("  samples n = {n}: {points} points, seed {seed}"),
            Evidence::Probes { .. } => continue,
            Evidence::Skipped { n, reason } => format!("  skipped n = {n}: {reason}"),
        };
        let _ = writeln!(s, "{line}");
    }
    if let Some(w) = &v.witness {
        let _ = writeln!(
            s,
            "  witness n = {} at {}: {} < {} ({})",
            w.n,
            w.point,
            fr(&w.mu_value),
            fr(&w.lambda_value),
            w.source
        );
    }
    s
}

pub fn cmd_verify(family: FamilyTag, mu: &Partition, lambda: &Partition, cfg: &SearchConfig) -> Result<CmdOutput> {
    let v = check_pair(family, mu, lambda, cfg)?;
    let exit = if v.violated() {
        EXIT_REFUTED
    } else if v.holds() {
        EXIT_SUPPORTED
    } else {
        EXIT_USAGE
    };
    let warnings = if exit == EXIT_USAGE {
        vec!["no n in the range could be checked".to_string()]
    } else {
        vec![]
    };
    let text = verdict_text(&v);
    let inputs = json!({ "family": family, "mu": mu, "lambda": lambda, "config": config_json(cfg) });
    Ok(CmdOutput {
        report: RunReport::new("verify", inputs, cfg.seed, &v),
        exit,
        text,
        warnings,
    })
}

pub fn cmd_certify_d8(t_range: Option<(u64, u64)>, coeffs: Option<&Path>) -> Result<CmdOutput> {
    let mut opts = D8Options::default();
    if let Some((lo, hi)) = t_range {
        if lo < 2 || hi < lo {
            return Err(Error::Domain(format!(
                "--t-range must satisfy 2 <= lo <= hi, got {lo}..{hi}"
            )));
        }
        opts.t_range = (lo, hi);
    }
    if let Some(path) = coeffs {
        opts.coefficients =
            std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    }
    let doc = run_d8_certificate(&opts);
    let mut text = format!("{}\n", doc.claim);
    for st in &doc.steps {
        let _ = writeln!(
            text,
            "  {}: {}",
            st.name,
            serde_json::to_string(&st.status).unwrap_or_default().trim_matches('"')
        );
    }
    let mut warnings = vec![];
    if let Some((step, detail)) = doc.first_failure() {
        warnings.push(format!("certificate step `{step}` failed: {detail}"));
        let _ = writeln!(text, "INVALID: {step}: {detail}");
    } else {
        let _ = writeln!(text, "valid");
    }
    let exit = if doc.valid { EXIT_SUPPORTED } else { EXIT_REFUTED };
    let inputs = json!({
        "t_range": [opts.t_range.0, opts.t_range.1],
        "coeffs": coeffs.map(|p| p.display().to_string()),
    });
    Ok(CmdOutput {
        report: RunReport::new("certify-d8", inputs, 0, &doc),
        exit,
        text,
        warnings,
    })
}

fn theorem_text(ev: &TheoremEvidence) -> String {
    let mut s = format!(
        "d = {}: mu = {}, lambda = {}, mu majorizes lambda: {}\n",
        ev.d, ev.mu, ev.lambda, ev.mu_majorizes_lambda
    );
    s.push_str(&verdict_text(&ev.verdict));
    let _ = writeln!(
        s,
        "degree-8 certificate: {}",
        if ev.certificate.valid { "valid" } else { "INVALID" }
    );
    if !ev.odd_reduction.is_empty() {
        let ok = ev.odd_reduction.iter().all(|l| l.holds);
        let _ = writeln!(
            s,
            "odd reduction (m = {}): {} checks, {}",
            ev.d / 2,
            ev.odd_reduction.len(),
            if ok { "hold" } else { "FAIL" }
        );
    }
    if !ev.ratio_chain.is_empty() {
        let ok = ev.ratio_chain.iter().all(|l| l.holds);
        let _ = writeln!(
            s,
            "ratio steps m = {}..5: {} checks, {}",
            ev.d / 2,
            ev.ratio_chain.len(),
            if ok { "hold" } else { "FAIL" }
        );
    }
    for b in &ev.boundary_identity {
        let _ = writeln!(
            s,
            "boundary identity n = {}: {} points, {}",
            b.n,
            b.points,
            if b.holds { "holds" } else { "FAILS" }
        );
    }
    let _ = writeln!(s, "{}", if ev.supported { "supported" } else { "NOT SUPPORTED" });
    s
}

pub fn cmd_theorem(d: u32, cfg: &SearchConfig) -> Result<CmdOutput> {
    let ev = verify_counterexample(d, cfg)?;
    let warnings: Vec<String> = ev
        .negative_evidence
        .iter()
        .map(|e| format!("NEGATIVE EVIDENCE: {e}"))
        .collect();
    let exit = if ev.supported { EXIT_SUPPORTED } else { EXIT_REFUTED };
    let text = theorem_text(&ev);
    let inputs = json!({ "d": d, "config": config_json(cfg) });
    Ok(CmdOutput {
        report: RunReport::new("theorem", inputs, cfg.seed, &ev),
        exit,
        text,
        warnings,
    })
}

pub fn cmd_scan(
    d: u32,
    family: FamilyTag,
    cfg: &SearchConfig,
    pair: Option<(&Partition, &Partition)>,
) -> Result<CmdOutput> {
    let r = scan_incomparable(d, family, cfg, pair)?;
    let mut text = format!("{} incomparable ordered pairs of {d}, n in {}\n", r.pairs, cfg.n_range);
    for v in &r.verdicts {
        let per_n: Vec<String> = v
            .per_n
            .iter()
            .map(|s| {
                let c = match s.status.as_str() {
                    "holds_on_evidence" => "ok",
                    "counterexample_found" => "x",
                    _ => "?",
                };
                format!("{}:{c}", s.n)
            })
            .collect();
        let mark = if v.holds() { "  <- no violation found" } else { "" };
        let _ = writeln!(text, "  {} vs {}  [{}]{mark}", v.mu, v.lambda, per_n.join(" "));
    }
    let _ = writeln!(text, "{} unfalsified", r.unfalsified.len());
    let inputs = json!({
        "d": d, "family": family, "config": config_json(cfg),
        "pair": pair.map(|(a, b)| json!([a, b])),
    });
    Ok(CmdOutput {
        report: RunReport::new("scan", inputs, cfg.seed, &r),
        exit: EXIT_SUPPORTED,
        text,
        warnings: vec![],
    })
}

fn parse_t_range(s: &str) -> Result<(u64, u64)> {
    let r = NRange::parse(s)?;
    Ok((r.lo as u64, r.hi as u64))
}

/// Dispatches a parsed command line.
pub fn run(cli: &Cli) -> Result<CmdOutput> {
    let g = &cli.global;
    let family: FamilyTag = g.family.parse()?;
    match &cli.command {
        Command::Partitions { d } => cmd_partitions(*d),
        Command::Majorize { mu, lambda } => cmd_majorize(&parse_partition(mu)?, &parse_partition(lambda)?),
        Command::Eval { lambda, point } => cmd_eval(family, &parse_partition(lambda)?, &point.parse()?),
        Command::Verify { mu, lambda } => cmd_verify(
            family,
            &parse_partition(mu)?,
            &parse_partition(lambda)?,
            &search_config(g)?,
        ),
        Command::CertifyD8 { t_range, coeffs } => {
            let range = t_range.as_deref().map(parse_t_range).transpose()?;
            cmd_certify_d8(range, coeffs.as_deref())
        }
        Command::Theorem { d } => cmd_theorem(*d, &search_config(g)?),
        Command::Scan { d, pair } => {
            let cfg = search_config(g)?;
            match pair {
                Some(v) => {
                    let (a, b) = (parse_partition(&v[0])?, parse_partition(&v[1])?);
                    cmd_scan(*d, family, &cfg, Some((&a, &b)))
                }
                None => cmd_scan(*d, family, &cfg, None),
            }
        }
    }
}

/// Parses `args`, runs the command and writes its output; returns the exit code.
pub fn main_with_args<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = if code == 0 {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return if code == 0 { 0 } else { EXIT_USAGE };
        }
    };
    match run(&cli) {
        Ok(o) => {
            for w in &o.warnings {
                let _ = writeln!(err, "{w}");
            }
            let _ = if cli.global.json {
                writeln!(out, "{}", o.report.to_json())
            } else {
                write!(out, "{}", o.text)
            };
            o.exit
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("symineq").chain(args.iter().copied());
        let code = main_with_args(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn partitions_counts() {
        let (code, out, _) = run_args(&["partitions", "8", "--json"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["result"]["count"], 22);
        let (_, out, _) = run_args(&["partitions", "1"]);
        assert_eq!(out.lines().count(), 2);
        let (_, out, _) = run_args(&["partitions", "3", "--json"]);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(
            v["result"]["majorizes"],
            json!([[true, true, true], [false, true, true], [false, false, true]])
        );
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_args(&["partitions", "0"]).0, 2);
        assert_eq!(run_args(&["partitions", "x"]).0, 2);
        assert_eq!(run_args(&["theorem", "7"]).0, 2);
        assert_eq!(run_args(&["verify", "3", "1,1"]).0, 2);
        assert_eq!(run_args(&["verify", "3", "2,1", "--family", "q"]).0, 2);
        assert_eq!(run_args(&["certify-d8", "--t-range", "1..5"]).0, 2);
        assert_eq!(run_args(&["nope"]).0, 2);
    }

    #[test]
    fn verify_exit_codes() {
        let (code, out, _) = run_args(&["verify", "1,1,1", "2,1", "--family", "m", "--n", "3", "--json"]);
        assert_eq!(code, 1);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["result"]["witness"]["point"], json!(["1", "1", "0"]));
        assert_eq!(run_args(&["verify", "2,1", "3", "--n", "2", "--samples", "50"]).0, 1);
        assert_eq!(run_args(&["verify", "3", "2,1", "--n", "2..3", "--samples", "50"]).0, 0);
    }

    #[test]
    fn eval_and_majorize() {
        let (code, out, _) = run_args(&["eval", "2,1", "1,1,0", "--family", "m", "--json"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["result"]["normalized"], "1/3");
        let (_, out, _) = run_args(&["majorize", "4,4", "5,2,1"]);
        assert!(out.contains("incomparable"));
    }

    #[test]
    fn config_layering() {
        let g = GlobalArgs {
            json: false,
            seed: Some(4),
            samples: None,
            n: Some("2..3".into()),
            family: "h".into(),
            config: None,
            set: vec!["samples=7".into(), "seed=1".into()],
        };
        let c = search_config(&g).unwrap();
        assert_eq!((c.seed, c.samples, c.n_range.lo, c.n_range.hi), (4, 7, 2, 3));
    }
}
