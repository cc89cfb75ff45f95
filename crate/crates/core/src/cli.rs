//! Command-line front end: compute, verify, inspect, and export in
//! stable text and JSON formats.
//!
//! Exit codes: 0 success / all checks pass, 1 orthogonality violation
//! found, 2 usage or domain error.

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::cyclo::{self, Algorithm, CycloCache};
use crate::error::Result;
use crate::numtheory::{divisors, totient};
use crate::polyring::{IntPoly, RatPoly};
use crate::structure::{self, VerificationCertificate};

/// Environment variable consulted for the cache directory when
/// `--cache-dir` is absent.
pub const CACHE_DIR_ENV: &str = "CYCLORTH_CACHE_DIR";

/// Test-only hook: when this variable is set, `verify` injects a fake
/// violation so the exit-code-1 path can be exercised end to end.
pub const FAKE_VIOLATION_ENV: &str = "CYCLORTH_TEST_FAKE_VIOLATION";

/// Largest n the text renderer of `gram` will print; JSON has no cap.
const GRAM_TEXT_CAP: u64 = 30;

/// Stable top-level shape of every JSON output.
#[derive(Debug, Serialize, Deserialize)]
pub struct OutputEnvelope {
    pub command: String,
    pub parameters: Value,
    pub result: Value,
    pub version: String,
}

impl OutputEnvelope {
    pub fn new(command: &str, parameters: Value, result: Value) -> Self {
        OutputEnvelope {
            command: command.to_string(),
            parameters,
            result,
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "cyclorth",
    version,
    about = "Exact cyclotomic polynomial computations and orthogonality certificates",
    after_help = "Cache directory resolution: --cache-dir, then $CYCLORTH_CACHE_DIR, \
then $XDG_CACHE_HOME/cyclorth (or ~/.cache/cyclorth)."
)]
pub struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Directory holding the Phi coefficient cache
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,

    /// Verification worker count (default: available parallelism)
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the n-th cyclotomic polynomial Phi_n
    Phi {
        n: u64,
        #[arg(long, default_value = "auto")]
        algorithm: String,
    },
    /// Compute the n-th inverse cyclotomic polynomial Psi_n
    Psi { n: u64 },
    /// Compute the cofactor Psi_{n,d} = (X^n - 1)/Phi_d for d | n
    Psind { n: u64, d: u64 },
    /// Verify the orthogonality relation for one n or a range
    Verify(VerifyArgs),
    /// Print the Gram matrix of the combined component bases
    Gram { n: u64 },
    /// Project a polynomial onto the components of Q[X]/(X^n - 1)
    Decompose {
        n: u64,
        /// Coefficients from degree 0 upward, integers or a/b rationals
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        coeffs: Vec<String>,
    },
    /// Coefficient statistics for Phi_n and Psi_n
    Stats { n: u64 },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Single order to verify
    pub n: Option<u64>,
    /// Inclusive range A..B of orders to verify
    #[arg(long, conflicts_with = "n")]
    pub range: Option<String>,
    /// Write a full JSON certificate file per n into this directory
    #[arg(long, value_name = "DIR", num_args = 0..=1, default_missing_value = ".")]
    pub certificate: Option<PathBuf>,
    /// Additionally check the component-orthogonality lemma on all
    /// divisor pairs
    #[arg(long)]
    pub lemma: bool,
}

/// Entry point used by the `cyclorth` binary.
pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

pub fn run(cli: Cli) -> Result<ExitCode> {
    let cache = open_cache(cli.cache_dir.as_deref())?;
    let code = match &cli.command {
        Command::Phi { n, algorithm } => cmd_phi(*n, algorithm, cli.format, &cache)?,
        Command::Psi { n } => cmd_psi(*n, cli.format, &cache)?,
        Command::Psind { n, d } => cmd_psind(*n, *d, cli.format, &cache)?,
        Command::Verify(args) => cmd_verify(args, cli.format, cli.jobs, &cache)?,
        Command::Gram { n } => cmd_gram(*n, cli.format, &cache)?,
        Command::Decompose { n, coeffs } => cmd_decompose(*n, coeffs, cli.format, &cache)?,
        Command::Stats { n } => cmd_stats(*n, cli.format, &cache)?,
    };
    if let Err(e) = cache.save() {
        eprintln!("warning: could not persist cache: {e}");
    }
    Ok(code)
}

fn open_cache(flag: Option<&std::path::Path>) -> Result<CycloCache> {
    let dir = flag
        .map(PathBuf::from)
        .or_else(|| std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from))
        .or_else(default_cache_dir);
    match dir {
        Some(dir) => CycloCache::with_file(dir.join("phi.cache")),
        None => Ok(CycloCache::new()),
    }
}

fn default_cache_dir() -> Option<PathBuf> {
    if let Some(xdg) = std::env::var_os("XDG_CACHE_HOME") {
        return Some(PathBuf::from(xdg).join("cyclorth"));
    }
    std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache").join("cyclorth"))
}

fn coeff_strings(p: &IntPoly) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

fn print_poly(name: &str, p: &IntPoly, command: &str, params: Value, format: Format) {
    match format {
        Format::Text => {
            println!("{name} = {p}");
            println!("coefficients: [{}]", coeff_strings(p).join(","));
        }
        Format::Json => {
            let env = OutputEnvelope::new(
                command,
                params,
                json!({
                    "coefficients": coeff_strings(p),
                    "degree": p.degree(),
                }),
            );
            println!("{}", serde_json::to_string(&env).unwrap());
        }
    }
}

fn cmd_phi(n: u64, algorithm: &str, format: Format, cache: &CycloCache) -> Result<ExitCode> {
    let alg = Algorithm::from_str(algorithm).map_err(crate::Error::InvalidArgument)?;
    let p = cyclo::phi(n, alg, cache)?;
    print_poly(
        &format!("Phi_{n}(X)"),
        &p,
        "phi",
        json!({"n": n, "algorithm": algorithm}),
        format,
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_psi(n: u64, format: Format, cache: &CycloCache) -> Result<ExitCode> {
    let p = cyclo::psi(n, cache)?;
    print_poly(&format!("Psi_{n}(X)"), &p, "psi", json!({"n": n}), format);
    Ok(ExitCode::SUCCESS)
}

fn cmd_psind(n: u64, d: u64, format: Format, cache: &CycloCache) -> Result<ExitCode> {
    let p = cyclo::psi_nd(n, d, cache)?;
    print_poly(
        &format!("Psi_{{{n},{d}}}(X)"),
        &p,
        "psind",
        json!({"n": n, "d": d}),
        format,
    );
    Ok(ExitCode::SUCCESS)
}

fn certificate_result_json(cert: &VerificationCertificate) -> Value {
    json!({
        "checks_performed": cert.checks_performed,
        "pass": cert.pass,
        "violations": cert.violations,
        "lemma_checked": cert.lemma_checked,
    })
}

fn verify_one(n: u64, lemma: bool, cache: &CycloCache) -> Result<VerificationCertificate> {
    let mut cert = structure::verify_theorem(n, cache)?;
    if lemma {
        let divs = divisors(n)?;
        let mut lemma_ok = true;
        for (i, &d1) in divs.iter().enumerate() {
            for &d2 in &divs[i + 1..] {
                lemma_ok &= structure::verify_lemma(n, d1, d2, cache)?;
            }
        }
        cert.lemma_checked = true;
        cert.pass &= lemma_ok;
    }
    if std::env::var_os(FAKE_VIOLATION_ENV).is_some() {
        cert.violations.push(structure::Violation {
            d1: 0,
            l1: 0,
            d2: 0,
            l2: 0,
            value: "1".into(),
        });
        cert.pass = false;
    }
    Ok(cert)
}

fn parse_range(s: &str) -> Result<(u64, u64)> {
    let parts: Vec<&str> = s.split("..").collect();
    let err = || crate::Error::InvalidArgument(format!("bad range '{s}', expected A..B"));
    if parts.len() != 2 {
        return Err(err());
    }
    let a: u64 = parts[0].parse().map_err(|_| err())?;
    let b: u64 = parts[1].parse().map_err(|_| err())?;
    if a == 0 || a > b {
        return Err(crate::Error::InvalidArgument(format!(
            "invalid range {a}..{b}: need 1 <= A <= B"
        )));
    }
    Ok((a, b))
}

fn cmd_verify(
    args: &VerifyArgs,
    format: Format,
    jobs: Option<usize>,
    cache: &CycloCache,
) -> Result<ExitCode> {
    let (lo, hi) = match (&args.n, &args.range) {
        (Some(n), None) => {
            if *n == 0 {
                return Err(crate::Error::NonPositive);
            }
            (*n, *n)
        }
        (None, Some(r)) => parse_range(r)?,
        (None, None) => {
            return Err(crate::Error::InvalidArgument(
                "verify needs an order N or --range A..B".into(),
            ))
        }
        (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
    };

    let ns: Vec<u64> = (lo..=hi).collect();
    let certs: Vec<VerificationCertificate> = if ns.len() > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.unwrap_or(0))
            .build()
            .map_err(|e| crate::Error::InvalidArgument(e.to_string()))?;
        use rayon::prelude::*;
        pool.install(|| {
            ns.par_iter()
                .map(|&n| verify_one(n, args.lemma, cache))
                .collect::<Result<Vec<_>>>()
        })?
    } else {
        vec![verify_one(ns[0], args.lemma, cache)?]
    };

    if let Some(dir) = &args.certificate {
        std::fs::create_dir_all(dir)?;
        for cert in &certs {
            let mut stamped = cert.clone();
            stamped.timestamp = Some(chrono::Utc::now().to_rfc3339());
            let env = OutputEnvelope::new(
                "verify",
                json!({"n": stamped.n}),
                serde_json::to_value(&stamped).unwrap(),
            );
            let path = dir.join(format!("certificate-{}.json", cert.n));
            std::fs::write(&path, serde_json::to_string_pretty(&env).unwrap())?;
        }
    }

    let all_pass = certs.iter().all(|c| c.pass);
    match format {
        Format::Text => {
            for cert in &certs {
                let status = if cert.pass { "pass" } else { "FAIL" };
                let lemma_note = if cert.lemma_checked { ", lemma checked" } else { "" };
                println!(
                    "n={}: {status} ({} checks{lemma_note})",
                    cert.n, cert.checks_performed
                );
                for v in &cert.violations {
                    println!(
                        "  violation: d1={} l1={} d2={} l2={} value={}",
                        v.d1, v.l1, v.d2, v.l2, v.value
                    );
                }
            }
            let total: u64 = certs.iter().map(|c| c.checks_performed).sum();
            println!(
                "{}: {} order(s), {} inner products checked",
                if all_pass { "all pass" } else { "VIOLATIONS FOUND" },
                certs.len(),
                total
            );
        }
        Format::Json => {
            let env = if certs.len() == 1 {
                OutputEnvelope::new(
                    "verify",
                    json!({"n": certs[0].n}),
                    certificate_result_json(&certs[0]),
                )
            } else {
                let results: Vec<Value> = certs
                    .iter()
                    .map(|c| {
                        let mut v = certificate_result_json(c);
                        v["n"] = json!(c.n);
                        v
                    })
                    .collect();
                OutputEnvelope::new(
                    "verify",
                    json!({"range": format!("{lo}..{hi}")}),
                    json!({"pass": all_pass, "results": results}),
                )
            };
            println!("{}", serde_json::to_string(&env).unwrap());
        }
    }
    Ok(if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_gram(n: u64, format: Format, cache: &CycloCache) -> Result<ExitCode> {
    if format == Format::Text && n > GRAM_TEXT_CAP {
        return Err(crate::Error::InvalidArgument(format!(
            "n={n} exceeds the text display cap ({GRAM_TEXT_CAP}); use --format json"
        )));
    }
    let report = structure::gram_matrix(n, cache)?;
    match format {
        Format::Text => {
            // block separators between divisor groups
            let mut boundaries = Vec::new();
            let mut pos = 0usize;
            for d in divisors(n)? {
                pos += totient(d)? as usize;
                boundaries.push(pos);
            }
            let width = report
                .matrix
                .iter()
                .flatten()
                .map(|v| v.to_string().len())
                .max()
                .unwrap_or(1);
            for (i, row) in report.matrix.iter().enumerate() {
                if boundaries.contains(&i) && i > 0 {
                    println!();
                }
                let mut line = String::new();
                for (j, v) in row.iter().enumerate() {
                    if boundaries.contains(&j) && j > 0 {
                        line.push_str(" |");
                    }
                    line.push_str(&format!(" {:>width$}", v.to_string()));
                }
                println!("{}", line.trim_end());
            }
            println!(
                "block_diagonal: {} ({} violations)",
                report.block_diagonal,
                report.violations.len()
            );
        }
        Format::Json => {
            let entries: Vec<Vec<String>> = report
                .matrix
                .iter()
                .map(|row| row.iter().map(|v| v.to_string()).collect())
                .collect();
            let env = OutputEnvelope::new(
                "gram",
                json!({"n": n}),
                json!({
                    "ordering": report.ordering,
                    "entries": entries,
                    "block_diagonal": report.block_diagonal,
                    "violations": report.violations,
                }),
            );
            println!("{}", serde_json::to_string(&env).unwrap());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_rational(tok: &str) -> Result<BigRational> {
    let tok = tok.trim();
    BigRational::from_str(tok)
        .or_else(|_| BigInt::from_str(tok).map(BigRational::from_integer))
        .map_err(|_| crate::Error::InvalidArgument(format!("cannot parse coefficient '{tok}'")))
}

fn rational_string(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn cmd_decompose(n: u64, coeffs: &[String], format: Format, cache: &CycloCache) -> Result<ExitCode> {
    let parsed: Vec<BigRational> = coeffs.iter().map(|t| parse_rational(t)).collect::<Result<_>>()?;
    let f = RatPoly::new(parsed);
    let components = structure::decompose(n, &f, cache)?;
    match format {
        Format::Text => {
            let mut any = false;
            for (d, c) in &components {
                if !c.is_zero() {
                    any = true;
                    println!("d={d}: {c}");
                }
            }
            if !any {
                println!("all components zero");
            }
        }
        Format::Json => {
            let comps: Value = components
                .iter()
                .map(|(d, c)| {
                    (
                        d.to_string(),
                        json!(c.coeffs().iter().map(rational_string).collect::<Vec<_>>()),
                    )
                })
                .collect::<serde_json::Map<String, Value>>()
                .into();
            let env = OutputEnvelope::new(
                "decompose",
                json!({"n": n, "coeffs": coeffs}),
                json!({"components": comps}),
            );
            println!("{}", serde_json::to_string(&env).unwrap());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_stats(n: u64, format: Format, cache: &CycloCache) -> Result<ExitCode> {
    let phi_n = cyclo::phi(n, Algorithm::Auto, cache)?;
    let psi_n = cyclo::psi(n, cache)?;
    let phi_stats = cyclo::stats(&phi_n, n);
    let psi_stats = cyclo::stats(&psi_n, n);
    match format {
        Format::Text => {
            println!(
                "Phi_{n}: degree {}, height {}, {} nonzero terms",
                phi_stats.degree.map(|d| d.to_string()).unwrap_or("zero".into()),
                phi_stats.height,
                phi_stats.nonzero_terms
            );
            println!(
                "Psi_{n}: degree {}, height {}, {} nonzero terms",
                psi_stats.degree.map(|d| d.to_string()).unwrap_or("zero".into()),
                psi_stats.height,
                psi_stats.nonzero_terms
            );
        }
        Format::Json => {
            let env = OutputEnvelope::new(
                "stats",
                json!({"n": n}),
                json!({"phi": phi_stats, "psi": psi_stats}),
            );
            println!("{}", serde_json::to_string(&env).unwrap());
        }
    }
    Ok(ExitCode::SUCCESS)
}
