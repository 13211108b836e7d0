//! Command-line front end.
//!
//! Exit status: `0` when every selected check passes, `1` when any check
//! fails (reports are still written), `2` on a usage or hypothesis error.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{delannoy_poly, large_schroder_poly, little_schroder_poly_table};
use crate::sequences::{SequenceKind, SequenceTable};
use crate::verify::catalog::{run_claim, ClaimId, RangeRequest};
use crate::verify::certificate::{CertificateId, CertificateSpec};
use crate::verify::{Status, VerificationReport};

pub const CACHE_DIR_ENV: &str = "DELANNOY_CACHE_DIR";

#[derive(Debug, Parser)]
#[command(name = "delannoy", version, about = "Exact Delannoy/Schröder sequences and identity verification")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit a sequence or polynomial table.
    Gen(GenArgs),
    /// Run named claims.
    Verify(VerifyArgs),
    /// Run telescoping certificates (all three unless --claim is given).
    Cert(VerifyArgs),
    /// Run every claim over its default range.
    SweepAll(SweepAllArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    Delannoy,
    LittleSchroder,
    LargeSchroder,
    DelannoyPoly,
    LittleSchroderPoly,
    LargeSchroderPoly,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Report every elapsed time as 0 so output is byte-reproducible.
    #[arg(long)]
    pub deterministic_timing: bool,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(value_enum)]
    pub kind: GenKind,
    /// Largest index to emit.
    #[arg(long, default_value_t = 20)]
    pub nmax: u64,
    /// Directory of cached integer tables.
    #[arg(long, env = CACHE_DIR_ENV)]
    pub cache_dir: Option<PathBuf>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Claim selectors, e.g. thm1.2 lem3.4 cert-f2 rec-a2 xdef-delannoy.
    pub claims: Vec<String>,
    /// Same as a positional selector; repeatable.
    #[arg(long = "claim")]
    pub claim_flags: Vec<String>,
    /// Upper end of the n (or j) sweep; defaults per claim.
    #[arg(long)]
    pub nmax: Option<u64>,
    /// A single n instead of a sweep.
    #[arg(long)]
    pub n: Option<u64>,
    /// Lower end of the prime sweep (default 2; primes outside a claim's hypothesis are skipped).
    #[arg(long)]
    pub pmin: Option<u64>,
    /// Upper end of the prime sweep (default 1000).
    #[arg(long)]
    pub pmax: Option<u64>,
    /// A single prime instead of a sweep.
    #[arg(long)]
    pub p: Option<u64>,
    /// Largest j for the (j, n) pair claims and lem3.5.
    #[arg(long)]
    pub jmax: Option<u64>,
    /// Certificate JSON that replaces the shipped certificate with its id.
    #[arg(long)]
    pub spec_file: Option<PathBuf>,
    /// Accepted for symmetry with `gen`; claims do not read the cache.
    #[arg(long, env = CACHE_DIR_ENV, hide_env_values = true)]
    pub cache_dir: Option<PathBuf>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SweepAllArgs {
    /// Certificate JSON that replaces the shipped certificate with its id.
    #[arg(long)]
    pub spec_file: Option<PathBuf>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Serialize)]
struct SweepDocument<'a> {
    command: &'a str,
    status: Status,
    reports: &'a [VerificationReport],
}

#[derive(Debug, Serialize)]
struct GenDocument<'a> {
    command: &'a str,
    kind: &'a str,
    n_max: u64,
    entries: Vec<GenEntry>,
}

#[derive(Debug, Serialize)]
struct GenEntry {
    index: u64,
    value: String,
}

/// Parses `args` and runs; returns the process exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

pub fn exit_code_for(e: &Error) -> i32 {
    if e.is_usage() || matches!(e, Error::Io(_) | Error::Cache(_)) {
        2
    } else {
        1
    }
}

pub fn run(cli: &Cli) -> Result<i32> {
    match &cli.command {
        Command::Gen(args) => run_gen(args),
        Command::Verify(args) => run_verify("verify", args, false),
        Command::Cert(args) => run_verify("cert", args, true),
        Command::SweepAll(args) => {
            let cert = load_spec(args.spec_file.as_deref())?;
            let reports = run_claims(&ClaimId::all(), &RangeRequest::default(), cert.as_ref())?;
            emit_reports("sweep-all", reports, &args.output)
        }
    }
}

fn load_spec(path: Option<&Path>) -> Result<Option<CertificateSpec>> {
    path.map(|p| {
        let text = std::fs::read_to_string(p)
            .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", p.display())))?;
        CertificateSpec::from_json(&text)
    })
    .transpose()
}

/// Resolves selectors (rejecting unknown ones before any work) into
/// catalog order without duplicates.
pub fn select_claims(names: &[String], default: &[ClaimId]) -> Result<Vec<ClaimId>> {
    let parsed = names.iter().map(|n| n.parse::<ClaimId>()).collect::<Result<Vec<_>>>()?;
    let wanted = if parsed.is_empty() { default.to_vec() } else { parsed };
    Ok(ClaimId::all().into_iter().filter(|c| wanted.contains(c)).collect())
}

fn run_verify(command: &str, args: &VerifyArgs, certs_only: bool) -> Result<i32> {
    let names: Vec<String> = args.claims.iter().chain(&args.claim_flags).cloned().collect();
    let default: Vec<ClaimId> = if certs_only { CertificateId::ALL.map(ClaimId::Cert).to_vec() } else { Vec::new() };
    let claims = select_claims(&names, &default)?;
    if claims.is_empty() {
        return Err(Error::InvalidArgument("no claim selected (use --claim)".into()));
    }
    if certs_only && claims.iter().any(|c| !matches!(c, ClaimId::Cert(_))) {
        return Err(Error::InvalidArgument("`cert` accepts certificate selectors only".into()));
    }
    let req =
        RangeRequest { n_max: args.nmax, n: args.n, p_min: args.pmin, p_max: args.pmax, p: args.p, j_max: args.jmax };
    req.validate()?;
    let cert = load_spec(args.spec_file.as_deref())?;
    let reports = run_claims(&claims, &req, cert.as_ref())?;
    emit_reports(command, reports, &args.output)
}

/// Claims run concurrently; results keep the input order. The first error
/// in that order wins.
pub fn run_claims(
    claims: &[ClaimId],
    req: &RangeRequest,
    cert: Option<&CertificateSpec>,
) -> Result<Vec<VerificationReport>> {
    claims.par_iter().map(|&id| run_claim(id, req, cert)).collect::<Vec<_>>().into_iter().collect()
}

fn open_output(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn emit_reports(command: &str, mut reports: Vec<VerificationReport>, output: &OutputArgs) -> Result<i32> {
    if output.deterministic_timing {
        for r in &mut reports {
            r.elapsed_ms = 0;
        }
    }
    let all_pass = reports.iter().all(VerificationReport::passed);
    let status = if all_pass { Status::Pass } else { Status::Fail };
    let mut out = open_output(output.out.as_deref())?;
    match output.format {
        Format::Json => {
            let doc = SweepDocument { command, status, reports: &reports };
            serde_json::to_writer_pretty(&mut out, &doc)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            w.write_record(["claim_id", "param", "status"])?;
            for r in &reports {
                w.write_record([r.claim_id.as_str(), r.range.as_str(), &r.status.to_string()])?;
            }
            w.flush()?;
        }
        Format::Text => {
            for r in &reports {
                writeln!(out, "{}", r.summary())?;
            }
            let passed = reports.iter().filter(|r| r.passed()).count();
            writeln!(out, "{passed}/{} claims passed", reports.len())?;
        }
    }
    out.flush()?;
    Ok(if all_pass { 0 } else { 1 })
}

fn gen_entries(args: &GenArgs) -> Result<Vec<GenEntry>> {
    let n_max = args.nmax;
    let entry = |index: u64, value: String| GenEntry { index, value };
    let integers = |kind: SequenceKind, first: u64| -> Result<Vec<GenEntry>> {
        let table = match &args.cache_dir {
            Some(dir) => SequenceTable::load_or_build(kind, n_max, dir)?,
            None => SequenceTable::build(kind, n_max)?,
        };
        Ok((first..=n_max).map(|i| entry(i, table.get(i).expect("table covers n_max").to_string())).collect())
    };
    match args.kind {
        GenKind::Delannoy => integers(SequenceKind::Delannoy, 0),
        GenKind::LittleSchroder => integers(SequenceKind::LittleSchroder, 1),
        GenKind::LargeSchroder => integers(SequenceKind::LargeSchroder, 0),
        GenKind::DelannoyPoly => Ok((0..=n_max).map(|n| entry(n, delannoy_poly(n).to_string())).collect()),
        GenKind::LargeSchroderPoly => (0..=n_max).map(|n| Ok(entry(n, large_schroder_poly(n)?.to_string()))).collect(),
        GenKind::LittleSchroderPoly => {
            let table = little_schroder_poly_table(n_max)?;
            Ok((1..=n_max).map(|n| entry(n, table[n as usize].to_string())).collect())
        }
    }
}

fn run_gen(args: &GenArgs) -> Result<i32> {
    if args.nmax == 0 {
        return Err(Error::InvalidArgument("--nmax must be >= 1".into()));
    }
    let entries = gen_entries(args)?;
    let kind = args.kind.to_possible_value().expect("no skipped variants");
    let mut out = open_output(args.output.out.as_deref())?;
    match args.output.format {
        Format::Json => {
            let doc = GenDocument { command: "gen", kind: kind.get_name(), n_max: args.nmax, entries };
            serde_json::to_writer_pretty(&mut out, &doc)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            w.write_record(["index", "value"])?;
            for e in &entries {
                w.write_record([e.index.to_string(), e.value.clone()])?;
            }
            w.flush()?;
        }
        Format::Text => {
            for e in &entries {
                writeln!(out, "{}", e.value)?;
            }
        }
    }
    out.flush()?;
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn selection_follows_catalog_order() {
        let names = vec!["lem3.1".to_string(), "thm1.1".to_string(), "lem3.1".to_string()];
        let picked = select_claims(&names, &[]).unwrap();
        assert_eq!(picked, vec![ClaimId::Thm11, ClaimId::Lem31]);
        assert!(select_claims(&["nope".to_string()], &[]).unwrap_err().is_usage());
    }

    #[test]
    fn parse_errors_exit_2() {
        assert_eq!(main_with_args(["delannoy", "verify", "--format", "xml"]), 2);
        assert_eq!(main_with_args(["delannoy", "frobnicate"]), 2);
    }
}
