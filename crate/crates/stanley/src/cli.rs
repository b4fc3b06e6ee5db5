//! The `stanley` command line.

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use stanley_core::bounds::bound_report;
use stanley_core::poset::{characteristic_poset, CellBox};
use stanley_core::stanley::{decomposition_from_partition, radical_transfer, StanleyDecomposition};
use stanley_core::{MonomialIdeal, QuotientModule};
use thiserror::Error;

use crate::experiment::{run_suite, Suite, SuiteReport};
use crate::format::{
    bound_table, describe_mismatch, read_decomposition, space_line, write_decomposition,
    BoundReportJson, DecompositionJson, MismatchJson, SdepthJson, SpaceJson,
};
use crate::parallel::{resolve_threads, sdepth_par};
use crate::parse::{parse_ideals, parse_module, print_ideal, print_module};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VIOLATION: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_TOO_LARGE: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "stanley", version, about = "Stanley depth of monomial ideals and quotients")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Worker threads for the partition search.
    #[arg(long, env = "STANLEY_THREADS", global = true)]
    pub threads: Option<usize>,
    /// Run instances above the size caps.
    #[arg(long, global = true)]
    pub force: bool,
    /// Largest ring size accepted without --force.
    #[arg(long, default_value_t = 10, global = true)]
    pub max_vars: usize,
    /// Largest characteristic poset accepted without --force.
    #[arg(long, default_value_t = 4096, global = true)]
    pub max_cells: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact Stanley depth of an ideal or quotient `J / I`.
    Sdepth {
        module: String,
        /// Also print an optimal Stanley decomposition.
        #[arg(long)]
        witness: bool,
        /// Search in the box `[0, g]` given as `g1,g2,...` instead of the tight box.
        #[arg(long = "box", value_delimiter = ',')]
        cbox: Option<Vec<u32>>,
    },
    /// Radical of an ideal, or `sqrt(J) / sqrt(I)` for a quotient.
    Radical { module: String },
    /// Intersection of two or more ideals.
    Intersect {
        #[arg(num_args = 2.., required = true)]
        ideals: Vec<String>,
    },
    /// Bounds on sdepth(Q ∩ Q') for primary Q, Q'.
    Bounds {
        q: String,
        q2: String,
        /// Also compute the exact value and check every bound against it.
        #[arg(long)]
        exact: bool,
    },
    /// An optimal Stanley decomposition in the decomposition file format.
    Decomp { module: String },
    /// Checks a decomposition file (`-` reads standard input).
    Verify { file: PathBuf },
    /// Pulls a decomposition back to the radical module along y_i -> x_i^a.
    Transfer {
        file: PathBuf,
        /// The power `a`; defaults to the largest exponent involved.
        #[arg(long)]
        power: Option<u32>,
    },
    /// Randomized property suites.
    Experiment {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Suites to run (all when omitted).
        #[arg(long, value_enum, value_delimiter = ',')]
        suite: Vec<Suite>,
        #[arg(long, default_value_t = 100)]
        cases: usize,
    },
}

impl Command {
    fn verb(&self) -> &'static str {
        match self {
            Command::Sdepth { .. } => "sdepth",
            Command::Radical { .. } => "radical",
            Command::Intersect { .. } => "intersect",
            Command::Bounds { .. } => "bounds",
            Command::Decomp { .. } => "decomp",
            Command::Verify { .. } => "verify",
            Command::Transfer { .. } => "transfer",
            Command::Experiment { .. } => "experiment",
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("instance too large: {0} (use --force to run it anyway)")]
    TooLarge(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::TooLarge(_) => EXIT_TOO_LARGE,
            CliError::Usage(_) | CliError::Io(_) => EXIT_USAGE,
        }
    }

    fn code_name(&self) -> &'static str {
        match self {
            CliError::TooLarge(_) => "too-large",
            CliError::Usage(_) => "usage",
            CliError::Io(_) => "io",
        }
    }
}

fn usage(e: impl ToString) -> CliError {
    CliError::Usage(e.to_string())
}

fn core_err(e: stanley_core::Error) -> CliError {
    match e {
        stanley_core::Error::TooLarge { .. } => CliError::TooLarge(e.to_string()),
        other => usage(other),
    }
}

fn parse_input(text: &str) -> Result<QuotientModule, CliError> {
    parse_module(text).map_err(|e| usage(format!("cannot parse {text:?}: {e}")))
}

fn parse_pair(texts: &[&str]) -> Result<Vec<MonomialIdeal>, CliError> {
    parse_ideals(texts).map_err(|(k, e)| usage(format!("cannot parse {:?}: {e}", texts[k])))
}

fn read_input(path: &PathBuf) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
    }
}

struct Ctx {
    format: Format,
    threads: usize,
    force: bool,
    max_vars: usize,
    max_cells: usize,
}

impl Ctx {
    fn check_vars(&self, n: usize) -> Result<(), CliError> {
        if !self.force && n > self.max_vars {
            return Err(CliError::TooLarge(format!(
                "{n} variables, the cap is {}",
                self.max_vars
            )));
        }
        Ok(())
    }

    /// Checks the caps for `m` in its tight box; returns the poset size.
    fn check_caps(&self, m: &QuotientModule) -> Result<usize, CliError> {
        self.check_vars(m.n())?;
        let poset = characteristic_poset(m, &CellBox::tight(m).map_err(core_err)?).map_err(core_err)?;
        if !self.force && poset.len() > self.max_cells {
            return Err(CliError::TooLarge(format!(
                "{} poset cells, the cap is {}",
                poset.len(),
                self.max_cells
            )));
        }
        Ok(poset.len())
    }

    /// Checks the caps, then solves in the tight (or given) box.
    fn solve(
        &self,
        m: &QuotientModule,
        cbox: Option<Vec<u32>>,
    ) -> Result<(stanley_core::poset::Witness, usize), CliError> {
        self.check_vars(m.n())?;
        let cbox = match cbox {
            Some(g) if g.len() != m.n() => {
                return Err(usage(format!(
                    "--box has {} entries for {} variables",
                    g.len(),
                    m.n()
                )))
            }
            Some(g) => CellBox::new(g).map_err(core_err)?,
            None => CellBox::tight(m).map_err(core_err)?,
        };
        let poset = characteristic_poset(m, &cbox).map_err(core_err)?;
        if !self.force && poset.len() > self.max_cells {
            return Err(CliError::TooLarge(format!(
                "{} poset cells, the cap is {}",
                poset.len(),
                self.max_cells
            )));
        }
        let w = sdepth_par(m, &cbox, self.threads).map_err(core_err)?;
        Ok((w, poset.len()))
    }

    fn emit<T: Serialize>(&self, out: &mut dyn Write, text: &str, value: &T) -> Result<(), CliError> {
        match self.format {
            Format::Text => out.write_all(text.as_bytes())?,
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, value).map_err(std::io::Error::from)?;
                writeln!(out)?;
            }
        }
        Ok(())
    }
}

fn decomposition_of(m: &QuotientModule, ctx: &Ctx) -> Result<(StanleyDecomposition, usize), CliError> {
    let (w, cells) = ctx.solve(m, None)?;
    let d = decomposition_from_partition(&w.partition, m).map_err(core_err)?;
    Ok((d, cells))
}

fn suite_text(r: &SuiteReport) -> String {
    let mut s = format!(
        "{}: {}/{} passed (seed {}, digest {})\n",
        r.suite, r.passed, r.cases, r.seed, r.digest
    );
    for f in &r.failures {
        s.push_str(&format!(
            "  FAIL case {}: {} [{}]\n",
            f.case,
            f.failure.as_deref().unwrap_or(""),
            f.input
        ));
    }
    s
}

/// Runs a parsed command, writing results to `out`. Returns the exit code
/// for successful runs (0, or 1 after reporting an invariant violation).
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<u8, CliError> {
    let ctx = Ctx {
        format: cli.format,
        threads: resolve_threads(cli.threads),
        force: cli.force,
        max_vars: cli.max_vars,
        max_cells: cli.max_cells,
    };
    match cli.command {
        Command::Sdepth {
            module,
            witness,
            cbox,
        } => {
            let m = parse_input(&module)?;
            let (w, cells) = ctx.solve(&m, cbox)?;
            let d = if witness {
                Some(decomposition_from_partition(&w.partition, &m).map_err(core_err)?)
            } else {
                None
            };
            let mut text = format!("{}\n", w.sdepth);
            if let Some(d) = &d {
                text.push_str(&write_decomposition(d));
            }
            ctx.emit(
                out,
                &text,
                &json!({
                    "verb": "sdepth",
                    "module": print_module(&m),
                    "sdepth": SdepthJson::from(w.sdepth),
                    "cells": cells,
                    "witness": d.as_ref().map(DecompositionJson::from),
                }),
            )?;
            Ok(EXIT_OK)
        }
        Command::Radical { module } => {
            let m = parse_input(&module)?;
            let r = m.radical();
            ctx.emit(
                out,
                &format!("{r}\n"),
                &json!({"verb": "radical", "input": print_module(&m), "radical": print_module(&r)}),
            )?;
            Ok(EXIT_OK)
        }
        Command::Intersect { ideals } => {
            let texts: Vec<&str> = ideals.iter().map(String::as_str).collect();
            let parsed = parse_pair(&texts)?;
            let mut acc = parsed[0].clone();
            for i in &parsed[1..] {
                acc = acc.intersect(i).map_err(core_err)?;
            }
            ctx.emit(
                out,
                &format!("{acc}\n"),
                &json!({
                    "verb": "intersect",
                    "inputs": parsed.iter().map(print_ideal).collect::<Vec<_>>(),
                    "intersection": print_ideal(&acc),
                    "generators": acc.len(),
                }),
            )?;
            Ok(EXIT_OK)
        }
        Command::Bounds { q, q2, exact } => {
            let pair = parse_pair(&[&q, &q2])?;
            let (q, q2) = (&pair[0], &pair[1]);
            for (i, text) in [(q, "Q"), (q2, "Q'")] {
                if !i.is_primary().unwrap_or(false) {
                    return Err(usage(format!("{text} = {i} is not a primary ideal")));
                }
            }
            if exact {
                let m = QuotientModule::ideal(q.intersect(q2).map_err(core_err)?);
                ctx.check_caps(&m)?;
                ctx.check_caps(&m.radical())?;
            }
            let report = bound_report(q, q2, exact).map_err(core_err)?;
            ctx.emit(
                out,
                &bound_table(&report),
                &json!({"verb": "bounds", "report": BoundReportJson::from(&report)}),
            )?;
            Ok(if report.violations().is_empty() {
                EXIT_OK
            } else {
                EXIT_VIOLATION
            })
        }
        Command::Decomp { module } => {
            let m = parse_input(&module)?;
            let (d, _) = decomposition_of(&m, &ctx)?;
            ctx.emit(
                out,
                &write_decomposition(&d),
                &json!({"verb": "decomp", "decomposition": DecompositionJson::from(&d)}),
            )?;
            Ok(EXIT_OK)
        }
        Command::Verify { file } => {
            let d = read_decomposition(&read_input(&file)?).map_err(usage)?;
            ctx.check_vars(d.module.n())?;
            let check = d.verify();
            let text = match &check {
                Ok(()) => format!(
                    "valid: {} spaces, sdepth {}\n",
                    d.spaces.len(),
                    d.sdepth()
                ),
                Err(m) => format!("invalid: {}\n", describe_mismatch(m)),
            };
            ctx.emit(
                out,
                &text,
                &json!({
                    "verb": "verify",
                    "module": print_module(&d.module),
                    "spaces": d.spaces.len(),
                    "valid": check.is_ok(),
                    "sdepth": SdepthJson::from(d.sdepth()),
                    "mismatch": check.as_ref().err().map(MismatchJson::from),
                }),
            )?;
            Ok(if check.is_ok() { EXIT_OK } else { EXIT_VIOLATION })
        }
        Command::Transfer { file, power } => {
            let d = read_decomposition(&read_input(&file)?).map_err(usage)?;
            ctx.check_vars(d.module.n())?;
            if let Err(m) = d.verify() {
                return Err(usage(format!(
                    "the input is not a Stanley decomposition: {}",
                    describe_mismatch(&m)
                )));
            }
            let largest = d
                .spaces
                .iter()
                .map(|s| s.generator.max_exp())
                .chain([d.module.max_exp()])
                .max()
                .unwrap_or(0);
            let a = power.unwrap_or(largest.max(1));
            let t = radical_transfer(&d, a).map_err(core_err)?;
            let check = t.decomposition.verify();
            let mut text = write_decomposition(&t.decomposition);
            text.push_str(&format!(
                "# power {a}; sdepth {} -> {}\n",
                d.sdepth(),
                t.decomposition.sdepth()
            ));
            if t.discarded.is_empty() {
                text.push_str("# discarded: none\n");
            }
            for s in &t.discarded {
                text.push_str(&format!("# discarded: {}\n", space_line(s)));
            }
            if let Err(m) = &check {
                text.push_str(&format!("# INVALID: {}\n", describe_mismatch(m)));
            }
            ctx.emit(
                out,
                &text,
                &json!({
                    "verb": "transfer",
                    "power": a,
                    "sdepthBefore": SdepthJson::from(d.sdepth()),
                    "sdepthAfter": SdepthJson::from(t.decomposition.sdepth()),
                    "valid": check.is_ok(),
                    "decomposition": DecompositionJson::from(&t.decomposition),
                    "discarded": t.discarded.iter().map(SpaceJson::from).collect::<Vec<_>>(),
                }),
            )?;
            Ok(if check.is_ok() { EXIT_OK } else { EXIT_VIOLATION })
        }
        Command::Experiment { seed, suite, cases } => {
            let suites = if suite.is_empty() {
                Suite::value_variants().to_vec()
            } else {
                suite
            };
            let reports: Vec<SuiteReport> = suites
                .iter()
                .map(|&s| run_suite(s, seed, cases, ctx.threads))
                .collect();
            let text: String = reports.iter().map(suite_text).collect();
            ctx.emit(out, &text, &json!({"verb": "experiment", "suites": reports}))?;
            Ok(if reports.iter().all(SuiteReport::ok) {
                EXIT_OK
            } else {
                EXIT_VIOLATION
            })
        }
    }
}

/// Parses `args`, runs the command and reports errors; returns the exit code.
pub fn main_with(args: impl IntoIterator<Item = std::ffi::OsString>, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
            } else {
                let _ = out.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    let format = cli.format;
    let verb = cli.command.verb();
    match run(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "stanley {verb}: {e}");
            if format == Format::Json {
                let doc = json!({"verb": verb, "error": {"code": e.code_name(), "message": e.to_string()}});
                let _ = serde_json::to_writer_pretty(&mut *out, &doc);
                let _ = writeln!(out);
            }
            e.exit_code()
        }
    }
}
