//! The `qcong` command line.

pub mod report;
pub mod suite;

use std::io::Write;
use std::path::PathBuf;
use std::sync::atomic::{AtomicBool, Ordering};

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use crate::arith::Rational;
use crate::catalog::{self, identities, supercong, wz, Case, Trunc};
use crate::congruence::{sort_reports, Status, VerificationReport};
use crate::error::{Error, Result};
use crate::qsymbols::{ParamVal, Params};

pub use report::Format;
pub use suite::{Job, Profile};

/// Environment variable naming the default output directory.
pub const OUT_DIR_ENV: &str = "QCONG_OUT_DIR";

#[derive(Parser, Debug)]
#[command(name = "qcong", version, about = "Exact checks of q-congruences and supercongruences")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Output file; defaults to stdout, or to a file in $QCONG_OUT_DIR.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Report 0 ms for every result, so output is reproducible.
    #[arg(long, global = true)]
    pub no_timing: bool,
    /// Exit 1 when a conjecture fails as well.
    #[arg(long, global = true)]
    pub strict_conjectures: bool,
    /// Stop scheduling jobs after the first theorem failure.
    #[arg(long, global = true)]
    pub fail_fast: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TruncArg {
    Full,
    Half,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PairArg {
    Tilde,
    Plain,
    Both,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the registry.
    List,
    /// Check a truncated-sum family.
    Verify {
        id: String,
        /// Values of n, e.g. `5,7,11` or `1..25`.
        #[arg(long, default_value = "5")]
        n: String,
        /// Values for the symbolic parameter; symbolic when omitted.
        #[arg(long)]
        a: Option<String>,
        /// Fixed parameter values, `name=value`.
        #[arg(long = "param")]
        params: Vec<String>,
        #[arg(long, value_enum, default_value_t = TruncArg::Both)]
        trunc: TruncArg,
        /// Values of d for two-index families.
        #[arg(long)]
        d: Option<String>,
        /// Values of r for two-index families.
        #[arg(long)]
        r: Option<String>,
    },
    /// Check infinite identities to a given order, or finite ones up to N.
    Series {
        /// A series or finite identity id, or `all`.
        id: String,
        #[arg(long, default_value_t = 50)]
        order: usize,
        /// Values of N for finite identities.
        #[arg(long = "big-n", default_value = "0..6")]
        big_n: String,
        #[arg(long = "param")]
        params: Vec<String>,
    },
    /// Check an integer supercongruence or binomial divisibility.
    Supercong {
        /// An S or B id, or `all`.
        id: String,
        #[arg(long, default_value = "5..37")]
        primes: String,
        #[arg(long, default_value = "1")]
        s: String,
        #[arg(long, default_value = "3,4,5")]
        d: String,
        /// Values of n for the B entries.
        #[arg(long, default_value = "0..15")]
        n: String,
    },
    /// Block sums of a family at primitive roots of unity.
    Zeta {
        id: String,
        #[arg(long, default_value = "5,7,11,13")]
        d: String,
        #[arg(long)]
        a: Option<String>,
    },
    /// Check the WZ pairs.
    Wz {
        #[arg(long, default_value_t = 6)]
        n_max: i64,
        #[arg(long, default_value_t = 6)]
        k_max: i64,
        /// Largest odd m for the telescoped divisibility.
        #[arg(long, default_value_t = 9)]
        m_max: i64,
        #[arg(long, value_enum, default_value_t = PairArg::Both)]
        pair: PairArg,
    },
    /// Run a whole profile.
    Suite {
        #[arg(long, value_enum, default_value_t = Profile::Quick)]
        profile: Profile,
        /// Restrict to these acceptance criteria.
        #[arg(long)]
        criterion: Option<String>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::List => "list",
            Command::Verify { .. } => "verify",
            Command::Series { .. } => "series",
            Command::Supercong { .. } => "supercong",
            Command::Zeta { .. } => "zeta",
            Command::Wz { .. } => "wz",
            Command::Suite { .. } => "suite",
        }
    }
}

/// Parses `5,7,11`, `1..25` and `1..=25` (ranges inclusive), or mixtures.
pub fn parse_int_list(s: &str) -> Result<Vec<i64>> {
    let bad = || Error::Usage(format!("cannot parse integer list `{}`", s));
    let mut out = Vec::new();
    for item in s.split(',').map(str::trim).filter(|x| !x.is_empty()) {
        if let Some((lo, hi)) = item.split_once("..") {
            let hi = hi.strip_prefix('=').unwrap_or(hi);
            let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
            let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
            out.extend(lo..=hi);
        } else {
            out.push(item.parse().map_err(|_| bad())?);
        }
    }
    if out.is_empty() {
        return Err(bad());
    }
    Ok(out)
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    crate::arith::parse_rational(s).ok_or_else(|| Error::Usage(format!("cannot parse rational `{}`", s)))
}

pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>> {
    s.split(',').map(parse_rational).collect()
}

fn parse_params(items: &[String]) -> Result<Params> {
    let mut p = Params::new();
    for it in items {
        let (k, v) = it
            .split_once('=')
            .ok_or_else(|| Error::Usage(format!("expected name=value, got `{}`", it)))?;
        p.set(k.trim(), ParamVal::rational(parse_rational(v)?));
    }
    Ok(p)
}

/// 0 when no theorem-status report fails; with `strict`, conjecture
/// failures count too.
pub fn exit_code(reports: &[VerificationReport], strict: bool) -> i32 {
    let bad = reports.iter().any(|r| {
        r.is_theorem_failure() || (strict && r.status == Status::Conjecture && !r.passed() && r.verdict != crate::congruence::Verdict::SkippedConstraint)
    });
    i32::from(bad)
}

fn verify_jobs(
    id: &str,
    n: &str,
    a: Option<&str>,
    params: &[String],
    trunc: TruncArg,
    d: Option<&str>,
    r: Option<&str>,
) -> Result<Vec<Job>> {
    if id == "T4.10-remark" {
        return Ok(parse_int_list(n)?
            .into_iter()
            .map(|n| Job::new(0, format!("T4.10-remark n={}", n), move || {
                catalog::t410_exponent_swap(n, &Params::new())
            }))
            .collect());
    }
    let f = catalog::family(id)?;
    let base = parse_params(params)?;
    for (k, _) in base.iter() {
        if !f.params.contains(&k.as_str()) {
            return Err(Error::Usage(format!("{} has no parameter {}", f.id, k)));
        }
    }
    let mut psets = Vec::new();
    match (a, f.symbolic) {
        (Some(list), Some(s)) => {
            for v in parse_rational_list(list)? {
                let mut p = base.clone();
                p.set(s, ParamVal::rational(v));
                psets.push(p);
            }
        }
        (Some(_), None) => return Err(Error::Usage(format!("{} has no symbolic parameter", f.id))),
        (None, _) => psets.push(base),
    }
    let truncs: Vec<Trunc> = match trunc {
        TruncArg::Both => f.truncs.to_vec(),
        TruncArg::Full => vec![Trunc::Full],
        TruncArg::Half => vec![Trunc::Half],
    };
    for t in &truncs {
        if !f.truncs.contains(t) {
            return Err(Error::Usage(format!("{} has no {} truncation", f.id, t)));
        }
    }
    let ns = parse_int_list(n)?;
    let mut cases = Vec::new();
    if f.uses_dr {
        let ds = parse_int_list(d.ok_or_else(|| Error::Usage(format!("{} needs --d", f.id)))?)?;
        let rs = match r {
            Some(r) => parse_int_list(r)?,
            None => vec![0],
        };
        for &n in &ns {
            for &d in &ds {
                for &r in &rs {
                    cases.push(Case::ndr(n, d, r));
                }
            }
        }
    } else {
        cases.extend(ns.into_iter().map(Case::n));
    }
    let mut jobs = Vec::new();
    for c in cases {
        for p in &psets {
            for &t in &truncs {
                let p = p.clone();
                jobs.push(Job::new(0, format!("{} n={}", f.id, c.n), move || {
                    catalog::verify_family(f, &c, &p, t)
                }));
            }
        }
    }
    Ok(jobs)
}

fn series_jobs(id: &str, order: usize, big_n: &str, params: &[String]) -> Result<Vec<Job>> {
    let given = parse_params(params)?;
    let ns = parse_int_list(big_n)?;
    let mut jobs = Vec::new();
    let all = id == "all";
    for s in identities::SERIES.iter().filter(|s| all || s.id == id) {
        let g = given.clone();
        jobs.push(Job::new(7, s.id, move || identities::verify_series(s.id, &g, order)));
    }
    for f in identities::FINITE.iter().filter(|f| all || f.id == id) {
        for &n in &ns {
            jobs.push(Job::new(7, f.id, move || identities::verify_finite(f.id, n)));
        }
    }
    if jobs.is_empty() {
        return Err(Error::UnknownId(id.to_string()));
    }
    Ok(jobs)
}

fn supercong_jobs(id: &str, primes: &str, s: &str, d: &str, n: &str) -> Result<Vec<Job>> {
    let all = id == "all";
    let ps = parse_int_list(primes)?;
    let ss = parse_int_list(s)?;
    let ds = parse_int_list(d)?;
    let bns = parse_int_list(n)?;
    let mut jobs = Vec::new();
    for sc in supercong::SUPERCONGRUENCES.iter().filter(|x| all || x.id == id) {
        let dlist: Vec<i64> = if sc.id.ends_with("-ds") { ds.clone() } else { vec![0] };
        let slist: Vec<i64> = if sc.id.ends_with("-ds") || sc.id == "S5.Dwork" {
            ss.clone()
        } else {
            vec![1]
        };
        for &p in &ps {
            if p < 2 || !crate::arith::is_prime(p as u64) {
                continue;
            }
            for &s in &slist {
                for &d in &dlist {
                    let (p, s) = (p as u64, s.max(1) as u32);
                    jobs.push(Job::new(8, sc.id, move || {
                        supercong::verify_supercongruence(sc.id, p, s, d)
                    }));
                }
            }
        }
    }
    let bids: Vec<&'static str> = supercong::BINOMIAL_CONGRUENCES
        .iter()
        .map(|b| b.id)
        .chain(["C5.1a", "C5.1b"])
        .collect();
    for b in bids.into_iter().filter(|b| all || *b == id) {
        for &n in &bns {
            jobs.push(Job::new(8, b, move || supercong::verify_binomial_congruence(b, n)));
        }
    }
    if id == "S1.2-intermediate" || all {
        jobs.extend(
            suite::jobs(Profile::Quick)
                .into_iter()
                .filter(|j| j.label == "S1.2-intermediate"),
        );
    }
    if jobs.is_empty() {
        return Err(Error::UnknownId(id.to_string()));
    }
    Ok(jobs)
}

fn zeta_jobs(id: &str, d: &str, a: Option<&str>) -> Result<Vec<Job>> {
    let f = catalog::family(id)?;
    let ds = parse_int_list(d)?;
    let avals: Vec<Option<Rational>> = match a {
        Some(l) => parse_rational_list(l)?.into_iter().map(Some).collect(),
        None => vec![None],
    };
    if f.symbolic.is_some() && avals.iter().any(Option::is_none) {
        return Err(Error::Usage(format!("{} needs --a values at roots of unity", f.id)));
    }
    let mut jobs = Vec::new();
    for &d in &ds {
        if d < 1 {
            return Err(Error::Usage("d must be positive".into()));
        }
        for a in &avals {
            let a = a.clone();
            jobs.push(Job::new(9, f.id, move || suite::zeta_report(f, d as u64, a.as_ref())));
        }
    }
    Ok(jobs)
}

fn list(format: Format, w: &mut dyn Write) -> Result<()> {
    let mut rows: Vec<(String, String, String, String)> = Vec::new();
    for f in catalog::families() {
        rows.push(("family".into(), f.id.into(), f.status.to_string(), f.display.into()));
    }
    rows.push((
        "family".into(),
        "T4.10-remark".into(),
        Status::Theorem.to_string(),
        "q^((n-1)k/2) may be replaced by q^(k(n^2-2nk-n-2)/4) mod Phi_n, n = 1 mod 4".into(),
    ));
    for s in identities::SERIES {
        rows.push(("series".into(), s.id.into(), Status::Theorem.to_string(), s.display.into()));
    }
    for s in identities::FINITE {
        rows.push(("finite".into(), s.id.into(), Status::Theorem.to_string(), s.display.into()));
    }
    for s in supercong::SUPERCONGRUENCES {
        rows.push(("supercong".into(), s.id.into(), s.status.to_string(), s.display.into()));
    }
    for b in supercong::BINOMIAL_CONGRUENCES {
        rows.push(("binomial".into(), b.id.into(), Status::Conjecture.to_string(), b.display.into()));
    }
    for p in [wz::WzPair::Tilde, wz::WzPair::Plain] {
        rows.push(("wz".into(), p.id().into(), Status::Theorem.to_string(), "F(n,k-1) - F(n,k) = G(n+1,k) - G(n,k)".into()));
    }
    let io = |e: std::io::Error| Error::Io {
        path: "<output>".into(),
        message: e.to_string(),
    };
    match format {
        Format::Json => {
            let v: Vec<_> = rows
                .iter()
                .map(|(k, id, st, d)| json!({"kind": k, "id": id, "status": st, "display": d}))
                .collect();
            writeln!(w, "{}", serde_json::to_string_pretty(&v).unwrap_or_default()).map_err(io)
        }
        Format::Csv => {
            let mut c = csv::Writer::from_writer(w);
            let mut put = |r: [&str; 4]| {
                c.write_record(r).map_err(|e| Error::Io {
                    path: "<csv>".into(),
                    message: e.to_string(),
                })
            };
            put(["kind", "id", "status", "display"])?;
            for (k, id, st, d) in &rows {
                put([k, id, st, d])?;
            }
            Ok(())
        }
        Format::Text => {
            let wid = rows.iter().map(|r| r.1.len()).max().unwrap_or(0);
            for (k, id, st, d) in &rows {
                writeln!(w, "{:<9} {:<wid$} {:<10} {}", k, id, st, d, wid = wid).map_err(io)?;
            }
            Ok(())
        }
    }
}

/// Runs the jobs on `threads` workers and returns the sorted reports.
pub fn run_jobs(jobs: &[Job], threads: Option<usize>, fail_fast: bool) -> Result<Vec<VerificationReport>> {
    let stop = AtomicBool::new(false);
    let work = || -> Vec<VerificationReport> {
        jobs.par_iter()
            .filter_map(|j| {
                if stop.load(Ordering::Relaxed) {
                    return None;
                }
                let r = j.run();
                if fail_fast && r.is_theorem_failure() {
                    stop.store(true, Ordering::Relaxed);
                }
                Some(r)
            })
            .collect()
    };
    let mut reports = match threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .map_err(|e| Error::Usage(e.to_string()))?
            .install(work),
        None => work(),
    };
    sort_reports(&mut reports);
    Ok(reports)
}

fn execute(cli: &Cli, argv: &[String], out: &mut dyn Write) -> Result<i32> {
    let jobs = match &cli.command {
        Command::List => {
            return match output_path(cli) {
                Some(p) => {
                    let mut f = std::fs::File::create(&p).map_err(|e| Error::Io {
                        path: p.display().to_string(),
                        message: e.to_string(),
                    })?;
                    list(cli.format, &mut f).map(|_| 0)
                }
                None => list(cli.format, out).map(|_| 0),
            };
        }
        Command::Verify { id, n, a, params, trunc, d, r } => {
            verify_jobs(id, n, a.as_deref(), params, *trunc, d.as_deref(), r.as_deref())?
        }
        Command::Series { id, order, big_n, params } => {
            if *order < 1 {
                return Err(Error::Usage("--order must be at least 1".into()));
            }
            series_jobs(id, *order, big_n, params)?
        }
        Command::Supercong { id, primes, s, d, n } => supercong_jobs(id, primes, s, d, n)?,
        Command::Zeta { id, d, a } => zeta_jobs(id, d, a.as_deref())?,
        Command::Wz { n_max, k_max, m_max, pair } => {
            let pairs = match pair {
                PairArg::Tilde => vec![wz::WzPair::Tilde],
                PairArg::Plain => vec![wz::WzPair::Plain],
                PairArg::Both => vec![wz::WzPair::Tilde, wz::WzPair::Plain],
            };
            let (n, k, m) = (*n_max, *k_max, *m_max);
            pairs
                .into_iter()
                .map(|p| Job::new(10, p.id(), move || wz::verify_wz(p, n, k, m, 3)))
                .collect()
        }
        Command::Suite { profile, criterion } => {
            let keep = match criterion {
                Some(c) => Some(parse_int_list(c)?),
                None => None,
            };
            suite::jobs(*profile)
                .into_iter()
                .filter(|j| keep.as_ref().map_or(true, |k| k.contains(&(j.criterion as i64))))
                .collect()
        }
    };
    let mut reports = run_jobs(&jobs, cli.jobs, cli.fail_fast)?;
    if cli.no_timing {
        for r in &mut reports {
            r.millis = 0;
        }
    }
    let config = json!({
        "command": cli.command.name(),
        "argv": argv,
        "jobs": cli.jobs,
        "format": cli.format,
        "strict_conjectures": cli.strict_conjectures,
        "fail_fast": cli.fail_fast,
        "no_timing": cli.no_timing,
    });
    let timing = !cli.no_timing;
    match output_path(cli) {
        Some(p) => {
            report::emit_to_path(&reports, cli.format, timing, config, &p)?;
            let count = |v| reports.iter().filter(|r| r.verdict == v).count();
            use crate::congruence::Verdict::*;
            let _ = writeln!(
                out,
                "wrote {} ({} pass, {} fail, {} skipped)",
                p.display(),
                count(Pass),
                count(Fail),
                count(SkippedConstraint)
            );
        }
        None => report::emit(&reports, cli.format, timing, config, out)?,
    }
    Ok(exit_code(&reports, cli.strict_conjectures))
}

fn output_path(cli: &Cli) -> Option<PathBuf> {
    if let Some(p) = &cli.out {
        return Some(p.clone());
    }
    let dir = std::env::var_os(OUT_DIR_ENV)?;
    Some(PathBuf::from(dir).join(format!("qcong-{}.{}", cli.command.name(), cli.format.extension())))
}

/// Parses `argv` (program name first) and runs it, writing to `out` and
/// `err`. Returns the process exit code: 0 on success, 1 on a failed
/// theorem check, 2 on a usage error.
pub fn run_with(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e);
                    0
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    2
                }
            };
        }
    };
    let rest: Vec<String> = argv.iter().skip(1).cloned().collect();
    match execute(&cli, &rest, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e);
            match e {
                Error::Usage(_) | Error::UnknownId(_) => 2,
                _ => 1,
            }
        }
    }
}

/// [`run_with`] on the process's stdout and stderr.
pub fn run<I: IntoIterator<Item = String>>(argv: I) -> i32 {
    let argv: Vec<String> = argv.into_iter().collect();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(&argv, &mut stdout.lock(), &mut stderr.lock())
}
