//! The `braidlink` command line.
//!
//! Reports go to stdout as JSON; failures write a JSON diagnostic to stderr
//! and exit with [`EXIT_VALIDATION`] or [`EXIT_CONVERGENCE`].

pub mod document;
pub mod report;
pub mod verify;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::braid::SphericalBraid;
use crate::error::{Error, Result};
use crate::integrate::{winding_discrete, Pole, QuadratureSettings};
use crate::invariants::{hopf_with_start, transform_table};
use crate::mobius::normalize;
use crate::realize::{realize_artin, realize_loop};
use crate::word::{parse_artin, parse_loop};

use document::{BraidDocument, PathDocument};
use report::{ErrorDocument, ReportDocument};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_CONVERGENCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "braidlink", version, about = "Linking numbers and the Hopf invariant of spherical 4-strand braids")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print Lk, Lk of the swapped braid, the Brunn gate and H as JSON.
    Invariants {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 1e-4)]
        tol: f64,
        /// Initial value of both winding-angle profiles, in turns.
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        start_lambda: f64,
    },
    /// Print the normalized strand-4 curve as a braid document.
    Normalize {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Run the seeded property sweeps.
    Verify {
        /// Random cases per suite.
        #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Tolerance of the convergence suite.
        #[arg(long, default_value_t = 1e-4)]
        tol: f64,
    },
    /// Print the linking transformation table over all 24 relabelings.
    Table {
        /// Random pure braids used for the fit.
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u64).range(4..))]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[value(alias = "word")]
    Loop,
    Artin,
    Json,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Input format; defaults to `loop` with `-e` and `json` otherwise.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Braid text given inline.
    #[arg(short = 'e', long = "expr", conflicts_with = "input")]
    pub expr: Option<String>,
    /// Read the braid from a file instead of stdin.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Samples per loop letter or Artin generator.
    #[arg(long, default_value_t = 512)]
    pub samples: usize,
}

impl InputArgs {
    fn load(&self, stdin: &mut dyn Read) -> Result<SphericalBraid> {
        let text = match (&self.expr, &self.input) {
            (Some(e), _) => e.clone(),
            (None, Some(path)) => std::fs::read_to_string(path)
                .map_err(|e| Error::Document(format!("{}: {e}", path.display())))?,
            (None, None) => {
                let mut s = String::new();
                stdin
                    .read_to_string(&mut s)
                    .map_err(|e| Error::Document(format!("stdin: {e}")))?;
                s
            }
        };
        let format = self
            .format
            .unwrap_or(if self.expr.is_some() { Format::Loop } else { Format::Json });
        match format {
            Format::Loop => realize_loop(&parse_loop(&text)?, self.samples),
            Format::Artin => realize_artin(&parse_artin(&text)?, self.samples),
            Format::Json => BraidDocument::parse(&text)?.to_braid(self.samples),
        }
    }
}

#[derive(Serialize)]
struct TableRow {
    sigma: String,
    row: Option<(i64, i64)>,
}

#[derive(Serialize)]
struct TableDocument {
    samples: usize,
    consistent: bool,
    multiplicative: bool,
    rows: Vec<TableRow>,
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_VALIDATION } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Invariants { input, tol, start_lambda } => {
            invariants(&input, tol, start_lambda, stdin).map(|s| emit(out, &s))
        }
        Command::Normalize { input } => normalize_cmd(&input, stdin).map(|s| emit(out, &s)),
        Command::Verify { count, seed, tol } => {
            return verify::run(count as usize, seed, tol, out, err);
        }
        Command::Table { count, seed } => table(count as usize, seed).map(|s| emit(out, &s)),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let doc = ErrorDocument::from_error(&e);
            let _ = writeln!(err, "{}", doc.to_json());
            doc.exit_code
        }
    }
}

fn emit(out: &mut dyn Write, line: &str) {
    let _ = writeln!(out, "{line}");
}

fn invariants(input: &InputArgs, tol: f64, start: f64, stdin: &mut dyn Read) -> Result<String> {
    if !start.is_finite() {
        return Err(Error::InvalidParameter(format!("start-lambda must be finite, got {start}")));
    }
    let f = input.load(stdin)?;
    let report = hopf_with_start(&f, &QuadratureSettings::with_tol(tol), start)?;
    Ok(ReportDocument::new(&report, start).to_json())
}

fn normalize_cmd(input: &InputArgs, stdin: &mut dyn Read) -> Result<String> {
    let f = input.load(stdin)?;
    let path = normalize(&f)?;
    let winding = [winding_discrete(&path, Pole::Zero)?, winding_discrete(&path, Pole::One)?];
    let doc = PathDocument::new(&path, winding, None);
    Ok(serde_json::to_string(&doc).expect("path document serializes"))
}

fn table(count: usize, seed: u64) -> Result<String> {
    let t = transform_table(count, seed)?;
    let doc = TableDocument {
        samples: t.samples(),
        consistent: t.is_consistent(),
        multiplicative: t.multiplicativity_violation().is_none(),
        rows: t
            .rows()
            .iter()
            .map(|(s, r)| TableRow {
                sigma: s.to_string(),
                row: *r,
            })
            .collect(),
    };
    Ok(serde_json::to_string(&doc).expect("table serializes"))
}
