//! Command-line front end. Exit codes: 0 pass, 1 counterexample found, 2 usage
//! or configuration error.

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::equation::{
    brute_force_oracle, erdos_divisibility_exceptions, exhaustive_search_with, sieve_for, solve_x_in_mode,
    verify_a1_identity, EquationInstance, Mode, SolveOutcome,
};
use crate::error::{Error, Result};
use crate::lemmas::{
    case_certificates, lemma2345_scan, lemma28_sweep, lemma29_checks, prime_divisor_scan, prop215_crossover,
    prop21_trichotomy, stanica_grid, threshold_constant_mismatches, three_b_binomial_exceptions, BoundCheckRecord,
    PrimeLemma,
};
use crate::report::{Format, ReportEnvelope, Verdict};
use crate::sieve::{IntervalProductSpec, SieveTable};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable overriding `--jobs`.
pub const JOBS_ENV: &str = "BINOMEQ_JOBS";

#[derive(Debug, Clone, Parser)]
#[command(name = "binomeq", version, about = "Exact checks for C(2k,k) = C(2a,a)·C(x+2b,b)")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Worker threads (0 = one per core).
    #[arg(long, global = true, env = JOBS_ENV, default_value_t = 0)]
    pub jobs: usize,
    /// Test hook: plant a synthetic counterexample so the failure path runs.
    #[arg(long, global = true, hide = true)]
    pub inject_fault: bool,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Exhaustive search over k; passes when only x = a = 1 solves.
    VerifyTheorem(VerifyArgs),
    /// Prime divisor > 1.5m for n > m >= 2, n+m-1 <= n-max.
    ScanHanson(HansonArgs),
    /// Prime divisor > 1.8m or > 4.42m under the respective hypotheses.
    ScanShorey(ShoreyArgs),
    /// Two-sided bound on C(mn, rn).
    CheckStanica(StanicaArgs),
    /// Ratio identities, case certificates and inequality suites.
    CheckLemmas(LemmaArgs),
    /// Solve for x at a single (k, a).
    Solve(SolveArgs),
    /// Compare the search with the brute-force oracle.
    OracleCrosscheck(OracleArgs),
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 1)]
    pub k_min: u64,
    #[arg(long, default_value_t = 150)]
    pub k_max: u64,
    #[arg(long, default_value = "standard", value_parser = parse_mode)]
    pub mode: Mode,
}

#[derive(Debug, Clone, Args)]
pub struct HansonArgs {
    #[arg(long, default_value_t = 10_000)]
    pub n_max: u64,
}

#[derive(Debug, Clone, Args)]
pub struct ShoreyArgs {
    /// 1.8 or 4.42
    #[arg(long, default_value = "1.8", value_parser = parse_threshold)]
    pub threshold: PrimeLemma,
    /// Upper bound on n + m.
    #[arg(long, default_value_t = 10_000)]
    pub n_max: u64,
}

#[derive(Debug, Clone, Args)]
pub struct StanicaArgs {
    #[arg(long, default_value_t = 8)]
    pub m_max: u64,
    #[arg(long, default_value_t = 40)]
    pub n_max: u64,
}

#[derive(Debug, Clone, Args)]
pub struct LemmaArgs {
    /// Range for the 2^b identity, the a-x in {1,2,3} scan and the b in {1,2} cases.
    #[arg(long, default_value_t = 300)]
    pub k_max: u64,
    /// Range for the telescoping ratio and the a = 1 identity.
    #[arg(long, default_value_t = 200)]
    pub ratio_k_max: u64,
    /// Range for C(3b, b) > 4^b.
    #[arg(long, default_value_t = 100)]
    pub b_max: u64,
    /// Range for the (9/5)^x crossover.
    #[arg(long, default_value_t = 50)]
    pub x_max: u64,
    /// Range for the C(2m,m) ∤ C(2n,n) spot check.
    #[arg(long, default_value_t = 100)]
    pub erdos_n_max: u64,
}

#[derive(Debug, Clone, Args)]
pub struct SolveArgs {
    #[arg(long)]
    pub k: u64,
    #[arg(long)]
    pub a: u64,
    #[arg(long, default_value = "standard", value_parser = parse_mode)]
    pub mode: Mode,
}

#[derive(Debug, Clone, Args)]
pub struct OracleArgs {
    #[arg(long, default_value_t = 60)]
    pub k_max: u64,
    /// Restrict to one mode; both by default.
    #[arg(long, value_parser = parse_mode)]
    pub mode: Option<Mode>,
}

fn parse_mode(s: &str) -> std::result::Result<Mode, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_threshold(s: &str) -> std::result::Result<PrimeLemma, String> {
    match s {
        "1.8" => Ok(PrimeLemma::Shorey),
        "4.42" => Ok(PrimeLemma::NairShorey),
        other => Err(format!("threshold must be 1.8 or 4.42, got '{other}'")),
    }
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::VerifyTheorem(_) => "verify-theorem",
            Command::ScanHanson(_) => "scan-hanson",
            Command::ScanShorey(_) => "scan-shorey",
            Command::CheckStanica(_) => "check-stanica",
            Command::CheckLemmas(_) => "check-lemmas",
            Command::Solve(_) => "solve",
            Command::OracleCrosscheck(_) => "oracle-crosscheck",
        }
    }
}

/// Findings plus the number of them that contradict the expected outcome.
struct Outcome {
    env: ReportEnvelope,
    unexpected: usize,
}

impl Outcome {
    fn new(name: &str) -> Self {
        Outcome { env: ReportEnvelope::new(name), unexpected: 0 }
    }
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("finding serializes")
}

fn instance_value(i: &EquationInstance) -> Value {
    json!({"k": i.k, "a": i.a, "b": i.b, "x": i.x})
}

fn usage(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

/// Runs one subcommand on the current thread pool and returns its envelope.
pub fn run(config: &RunConfig) -> Result<ReportEnvelope> {
    let started = Instant::now();
    let mut out = match &config.command {
        Command::VerifyTheorem(a) => verify_theorem(a)?,
        Command::ScanHanson(a) => scan_hanson(a)?,
        Command::ScanShorey(a) => scan_shorey(a)?,
        Command::CheckStanica(a) => check_stanica(a)?,
        Command::CheckLemmas(a) => check_lemmas(a)?,
        Command::Solve(a) => solve(a)?,
        Command::OracleCrosscheck(a) => oracle_crosscheck(a)?,
    };
    if config.inject_fault {
        out.env.findings.push(json!({"injected_fault": true}));
        out.unexpected += 1;
    }
    out.env.verdict = if out.unexpected == 0 { Verdict::Pass } else { Verdict::Fail };
    out.env.duration_ms = started.elapsed().as_millis() as u64;
    Ok(out.env)
}

/// Runs with the configured worker count.
pub fn run_with_jobs(config: &RunConfig) -> Result<ReportEnvelope> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| usage(format!("cannot start {} workers: {e}", config.jobs)))?;
    pool.install(|| run(config))
}

pub fn exit_code(env: &ReportEnvelope) -> i32 {
    match env.verdict {
        Verdict::Pass => EXIT_PASS,
        Verdict::Fail => EXIT_COUNTEREXAMPLE,
    }
}

/// Parses `args` (including the program name), runs, writes the report and
/// returns the exit code.
pub fn main_with_args<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    EXIT_PASS
                }
                _ => {
                    let _ = write!(stderr, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    let env = match run_with_jobs(&config) {
        Ok(env) => env,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let text = env.render(config.format);
    match &config.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                let _ = writeln!(stderr, "error: cannot write {}: {e}", path.display());
                return EXIT_USAGE;
            }
        }
        None => {
            let _ = stdout.write_all(text.as_bytes());
        }
    }
    exit_code(&env)
}

fn verify_theorem(args: &VerifyArgs) -> Result<Outcome> {
    if args.k_min < 1 || args.k_min > args.k_max {
        return Err(usage(format!("need 1 <= k-min <= k-max, got {}..={}", args.k_min, args.k_max)));
    }
    let sieve = sieve_for(args.k_max)?;
    let report = exhaustive_search_with(args.k_min, args.k_max, args.mode, &sieve)?;
    let expected = report.expected_solutions();
    let mut out = Outcome::new("verify-theorem");
    out.env
        .param("k_min", args.k_min)
        .param("k_max", args.k_max)
        .param("mode", args.mode.as_str());
    let unexpected = report.solutions.iter().filter(|s| !expected.contains(s)).count();
    let missing = expected.iter().filter(|s| !report.solutions.contains(s)).count();
    out.unexpected = unexpected + missing;
    out.env.findings = report.solutions.iter().map(instance_value).collect();
    out.env
        .count("pairs_checked", report.pairs_checked)
        .count("non_integral_ratio", report.non_integral)
        .count("no_matching_x", report.no_matching_x)
        .count("solutions", report.solutions.len())
        .count("expected_solutions", expected.len())
        .count("unexpected_solutions", unexpected)
        .count("missing_solutions", missing);
    Ok(out)
}

fn prime_scan(name: &str, lemma: PrimeLemma, bound: u64, bound_key: &str) -> Result<Outcome> {
    if bound < 2 {
        return Err(usage(format!("{bound_key} must be >= 2")));
    }
    let sieve = SieveTable::new(bound)?;
    let summary = prime_divisor_scan(&lemma.constraints(bound), &sieve)?;
    let known = lemma.known_exceptions();
    let mut out = Outcome::new(name);
    out.env.param(bound_key, bound).param("threshold", lemma.multiplier().value());
    for v in &summary.violations {
        let is_known = known.contains(&(v.n, v.m));
        if !is_known {
            out.unexpected += 1;
        }
        out.env.findings.push(json!({
            "n": v.n,
            "m": v.m,
            "product": IntervalProductSpec { n: v.n, m: v.m }.display_product(),
            "greatest_prime": v.greatest_prime,
            "threshold": v.threshold,
            "known_exception": is_known,
        }));
    }
    let c = lemma.constraints(bound);
    let in_range: Vec<_> = known.iter().filter(|&&(n, m)| n + m - 1 <= c.last_max).collect();
    let missing = in_range
        .iter()
        .filter(|&&&(n, m)| !summary.violations.iter().any(|v| (v.n, v.m) == (n, m)))
        .count();
    out.unexpected += missing;
    out.env
        .count("checked", summary.checked)
        .count("violations", summary.violations.len())
        .count("known_exceptions_in_range", in_range.len())
        .count("missing_known_exceptions", missing);
    Ok(out)
}

fn scan_hanson(args: &HansonArgs) -> Result<Outcome> {
    prime_scan("scan-hanson", PrimeLemma::Hanson, args.n_max, "n_max")
}

fn scan_shorey(args: &ShoreyArgs) -> Result<Outcome> {
    prime_scan("scan-shorey", args.threshold, args.n_max, "n_max")
}

fn check_stanica(args: &StanicaArgs) -> Result<Outcome> {
    if args.m_max < 2 || args.n_max < 1 {
        return Err(usage("need m-max >= 2 and n-max >= 1"));
    }
    let sieve = SieveTable::new((args.m_max * args.n_max).max(2))?;
    let records = stanica_grid(args.m_max, args.n_max, &sieve)?;
    let mut out = Outcome::new("check-stanica");
    out.env.param("m_max", args.m_max).param("n_max", args.n_max);
    let rel = |r: &BoundCheckRecord| {
        let (l, h): (f64, f64) = (r.lhs.parse().unwrap_or(f64::NAN), r.rhs.parse().unwrap_or(f64::NAN));
        (h - l) / h
    };
    let min_rel = |check: &str| {
        records.iter().filter(|r| r.check == check).map(rel).fold(f64::INFINITY, f64::min)
    };
    let failed: Vec<&BoundCheckRecord> = records.iter().filter(|r| !r.holds).collect();
    out.unexpected = failed.len();
    out.env.findings = failed.into_iter().map(to_value).collect();
    out.env
        .count("checked", records.len())
        .count("failed", out.unexpected)
        .count("rechecked", records.iter().filter(|r| r.rechecked).count())
        .count("min_relative_margin_lower", min_rel("stanica_lower"))
        .count("min_relative_margin_upper", min_rel("stanica_upper"));
    Ok(out)
}

fn check_lemmas(args: &LemmaArgs) -> Result<Outcome> {
    if args.k_max < 10 || args.ratio_k_max < 2 || args.b_max < 3 || args.x_max < 3 || args.erdos_n_max < 2 {
        return Err(usage("need k-max >= 10, ratio-k-max >= 2, b-max >= 3, x-max >= 3, erdos-n-max >= 2"));
    }
    let top = (2 * args.k_max.max(args.ratio_k_max).max(args.erdos_n_max)).max(3 * args.b_max);
    let sieve = SieveTable::new(top)?;
    let mut out = Outcome::new("check-lemmas");
    out.env
        .param("k_max", args.k_max)
        .param("ratio_k_max", args.ratio_k_max)
        .param("b_max", args.b_max)
        .param("x_max", args.x_max)
        .param("erdos_n_max", args.erdos_n_max);

    let suite = |out: &mut Outcome, name: &str, checked: usize, failures: Vec<Value>| {
        out.env.count(&format!("{name}.checked"), checked);
        out.env.count(&format!("{name}.failed"), failures.len());
        out.unexpected += failures.len();
        for f in failures {
            out.env.findings.push(json!({"suite": name, "detail": f}));
        }
    };

    let bad = prop21_trichotomy(args.ratio_k_max, &sieve)?;
    let n: usize = (1..=args.ratio_k_max as usize).sum();
    suite(&mut out, "prop21_trichotomy", n, bad.iter().map(|(k, a)| json!({"k": k, "a": a})).collect());

    let mut bad = Vec::new();
    for k in 2..=args.ratio_k_max {
        let r = verify_a1_identity(k, &sieve)?;
        if r.to_string() != "2" {
            bad.push(json!({"k": k, "ratio": r.to_string()}));
        }
    }
    suite(&mut out, "a1_identity", args.ratio_k_max as usize - 1, bad);

    let (checked, bad) = lemma28_sweep(args.k_max, &sieve)?;
    suite(&mut out, "lemma28_identity_bound", checked as usize, bad.iter().map(to_value).collect());

    let bad = three_b_binomial_exceptions(args.b_max, &sieve)?;
    suite(&mut out, "lemma28_c3b", args.b_max as usize - 2, bad.iter().map(|b| json!({"b": b})).collect());

    let recs = lemma29_checks(args.k_max, &sieve)?;
    let n = recs.len();
    suite(&mut out, "lemma29", n, recs.iter().filter(|r| !r.holds).map(to_value).collect());

    let scan = lemma2345_scan(args.k_max, &sieve)?;
    suite(&mut out, "lemma2345", scan.checked as usize, scan.violations.iter().map(to_value).collect());

    let certs = case_certificates()?;
    let n = certs.len();
    suite(&mut out, "case_certificates", n, certs.iter().filter(|c| !c.holds()).map(to_value).collect());

    let cross = prop215_crossover(args.x_max)?;
    let n = cross.inequality.len() + cross.increasing.len();
    let mut bad: Vec<Value> = cross
        .inequality
        .iter()
        .filter(|r| r.holds != (r.params != "x=2"))
        .map(to_value)
        .collect();
    bad.extend(cross.increasing.iter().filter(|r| !r.holds).map(to_value));
    suite(&mut out, "prop215_crossover", n, bad);

    let bad = threshold_constant_mismatches(200);
    suite(&mut out, "threshold_constant", 200 * 200, bad.iter().map(|(a, x)| json!({"a": a, "x": x})).collect());

    let bad = erdos_divisibility_exceptions(args.erdos_n_max, &sieve)?;
    let n: usize = (2..=args.erdos_n_max).map(|n| (n - n / 2 - 1) as usize).sum();
    suite(&mut out, "erdos_spot_check", n, bad.iter().map(|(n, m)| json!({"n": n, "m": m})).collect());
    Ok(out)
}

fn solve(args: &SolveArgs) -> Result<Outcome> {
    let sieve = sieve_for(args.k)?;
    let outcome = solve_x_in_mode(args.k, args.a, args.mode, &sieve)?;
    let mut out = Outcome::new("solve");
    out.env.param("k", args.k).param("a", args.a).param("mode", args.mode.as_str());
    let b = args.k - args.a;
    let mut finding = json!({"k": args.k, "a": args.a, "b": b});
    if let (Value::Object(m), Value::Object(o)) = (&mut finding, to_value(&outcome)) {
        m.extend(o);
    }
    let expected_solution = args.mode == Mode::Standard && args.a == 1;
    out.unexpected = match outcome {
        SolveOutcome::Solution { x } => usize::from(!(expected_solution && x == 1)),
        _ => usize::from(expected_solution),
    };
    out.env.findings.push(finding);
    Ok(out)
}

fn oracle_crosscheck(args: &OracleArgs) -> Result<Outcome> {
    if args.k_max < 1 {
        return Err(usage("k-max must be >= 1"));
    }
    let modes = match args.mode {
        Some(m) => vec![m],
        None => vec![Mode::Standard, Mode::Moser],
    };
    let sieve = sieve_for(args.k_max)?;
    let mut out = Outcome::new("oracle-crosscheck");
    out.env.param("k_max", args.k_max).param(
        "modes",
        Value::Array(modes.iter().map(|m| Value::from(m.as_str())).collect()),
    );
    for mode in modes {
        let search = exhaustive_search_with(1, args.k_max, mode, &sieve)?.solutions;
        let oracle = brute_force_oracle(args.k_max, mode);
        for (side, only) in [
            ("search_only", search.iter().filter(|s| !oracle.contains(s)).collect::<Vec<_>>()),
            ("oracle_only", oracle.iter().filter(|s| !search.contains(s)).collect()),
        ] {
            for s in only {
                out.unexpected += 1;
                let mut v = instance_value(s);
                v["mode"] = mode.as_str().into();
                v["side"] = side.into();
                out.env.findings.push(v);
            }
        }
        out.env
            .count(&format!("{mode}.search_solutions"), search.len())
            .count(&format!("{mode}.oracle_solutions"), oracle.len());
    }
    Ok(out)
}
