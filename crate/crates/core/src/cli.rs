//! Command-line front end.
//!
//! Every command writes its main result to `stdout` and progress or reports
//! to `stderr`. [`run`] takes both streams so the commands can be driven
//! in-process; the binary only maps a [`CliError`] to its exit code.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use thiserror::Error;

use crate::belief::{combine_dempster, MassFunction};
use crate::casebook::{case_names, run_case};
use crate::error::{CaseError, EstimateError, InputError, MassError, PopulationError, RelabelError};
use crate::estimate::{estimate_with_confidence, CountTable, Correction};
use crate::frame::DEFAULT_MAX_ATOMS;
use crate::io::{mass_from_json_str, mass_to_json_string, read_population_csv, FrameDecls, MassJson};
use crate::population::{freq_mass, Population};
use crate::relabel::{
    relabel_exact, relabel_simulate, LabelDistribution, SimulationConfig, SimulationReport,
};
use crate::scalar::Scalar;

/// Environment variable that overrides the maximum frame size.
pub const MAX_ATOMS_ENV: &str = "DSBELIEF_MAX_ATOMS";

#[derive(Debug, Parser)]
#[command(name = "dsbelief", version, about = "Belief functions over set-valued data")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the mass, belief and plausibility of every focal set of a data file.
    Table(TableArgs),
    /// Combine mass functions with Dempster's rule, left to right.
    Combine(CombineArgs),
    /// Relabel a population with a random label distribution.
    Relabel(RelabelArgs),
    /// Estimate a mass function from counts with confidence lower bounds.
    Estimate(EstimateArgs),
    /// Run worked examples and compare against their known values.
    Casebook(CasebookArgs),
}

/// How the attributes of a data file map to frames.
#[derive(Debug, Clone, Args)]
pub struct FrameArgs {
    /// Inline frame declaration `attribute=atom,atom,...`; repeat per attribute.
    #[arg(long = "frame", value_name = "DECL")]
    pub frames: Vec<String>,
    /// JSON file `{"attribute": ["atom", ...]}`.
    #[arg(long, value_name = "PATH")]
    pub frame_file: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Table,
    Json,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// Set-valued CSV.
    pub data: PathBuf,
    #[command(flatten)]
    pub frame: FrameArgs,
    #[arg(long, value_enum, default_value_t)]
    pub format: OutputFormat,
    /// Print exact fractions instead of decimals.
    #[arg(long)]
    pub rational: bool,
}

#[derive(Debug, Args)]
pub struct CombineArgs {
    /// Mass JSON files on a common frame.
    #[arg(required = true, num_args = 2..)]
    pub inputs: Vec<PathBuf>,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("mode").required(true).args(["exact", "simulate"])))]
pub struct RelabelArgs {
    /// Set-valued CSV.
    pub data: PathBuf,
    /// Mass JSON of the label distribution, on the data frame.
    pub labels: PathBuf,
    #[command(flatten)]
    pub frame: FrameArgs,
    /// Compute the relabeled mass function exactly.
    #[arg(long)]
    pub exact: bool,
    /// Simulate this many draws.
    #[arg(long, value_name = "N", requires = "seed")]
    pub simulate: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Independent RNG streams, each run on its own thread.
    #[arg(long, default_value_t = 1, requires = "simulate")]
    pub chunks: u32,
    /// Write the simulation report here instead of to stderr.
    #[arg(long, value_name = "PATH", requires = "simulate")]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EstimateArgs {
    /// Set-valued CSV.
    pub data: PathBuf,
    #[command(flatten)]
    pub frame: FrameArgs,
    /// One-sided error level of each lower bound, in (0, 1].
    #[arg(long, default_value_t = 0.05)]
    pub alpha: f64,
    /// Split alpha over all proper-subset cells.
    #[arg(long)]
    pub bonferroni: bool,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("which").required(true).args(["name", "all"])))]
pub struct CasebookArgs {
    pub name: Option<String>,
    #[arg(long)]
    pub all: bool,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(#[from] InputError),
    #[error("invalid {name}: {message}")]
    Config { name: String, message: String },
    #[error("{0}")]
    Mass(#[from] MassError),
    #[error("{0}")]
    Population(#[from] PopulationError),
    #[error("{0}")]
    Relabel(#[from] RelabelError),
    #[error("{0}")]
    Estimate(#[from] EstimateError),
    #[error("{0}")]
    Case(#[from] CaseError),
    #[error("casebook: {failed} of {total} cases failed")]
    CasebookFailed { failed: usize, total: usize },
    #[error("{path}: {source}")]
    File {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("output: {0}")]
    Output(#[from] io::Error),
}

impl CliError {
    /// 1 for domain failures (conflict, invalid labeling, failed cases), 2
    /// for anything wrong with the input.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Mass(MassError::TotalConflict) => 1,
            CliError::Mass(_) => 2,
            CliError::Population(_) | CliError::Relabel(_) => 1,
            CliError::Estimate(EstimateError::InvalidAlpha(_)) => 2,
            CliError::Estimate(_) => 1,
            CliError::Case(CaseError::UnknownCase { .. }) => 2,
            CliError::Case(_) | CliError::CasebookFailed { .. } => 1,
            CliError::Output(_) => 1,
            CliError::Input(_) | CliError::Config { .. } | CliError::File { .. } => 2,
        }
    }
}

/// Reads the frame-size limit from [`MAX_ATOMS_ENV`].
pub fn max_atoms_from_env() -> Result<usize, CliError> {
    match std::env::var(MAX_ATOMS_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| CliError::Config {
            name: MAX_ATOMS_ENV.into(),
            message: format!("{v:?} is not a frame size"),
        }),
        Err(_) => Ok(DEFAULT_MAX_ATOMS),
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let max_atoms = max_atoms_from_env()?;
    match &cli.command {
        Command::Table(a) => cmd_table(a, max_atoms, out),
        Command::Combine(a) => cmd_combine(a, max_atoms, out, err),
        Command::Relabel(a) => cmd_relabel(a, max_atoms, out, err),
        Command::Estimate(a) => cmd_estimate(a, max_atoms, out),
        Command::Casebook(a) => cmd_casebook(a, out),
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::File {
        path: path.to_path_buf(),
        source,
    })
}

fn load_population(
    data: &Path,
    frame: &FrameArgs,
    max_atoms: usize,
) -> Result<Population, CliError> {
    let mut decls = match &frame.frame_file {
        Some(p) => FrameDecls::from_json(&read_file(p)?, max_atoms)?,
        None => FrameDecls::new(),
    };
    for d in &frame.frames {
        decls.parse_inline(d, max_atoms)?;
    }
    let text = read_file(data)?;
    Ok(read_population_csv(text.as_bytes(), &decls, max_atoms)?)
}

fn render(v: &Scalar, rational: bool) -> String {
    if rational {
        v.to_string()
    } else {
        format!("{:.6}", v.to_f64())
    }
}

pub fn cmd_table(a: &TableArgs, max_atoms: usize, out: &mut dyn Write) -> Result<(), CliError> {
    let p = load_population(&a.data, &a.frame, max_atoms)?;
    let m = freq_mass(&p);
    let frame = m.frame();
    let rows: Vec<(String, Vec<&str>, [Scalar; 3])> = m
        .focal()
        .map(|(s, v)| {
            (
                frame.format_set(s),
                frame.decode(s),
                [v.clone(), m.bel_set(s), m.pl_set(s)],
            )
        })
        .collect();
    match a.format {
        OutputFormat::Json => {
            let value = |v: &Scalar| {
                if a.rational {
                    json!(v.to_exact_string())
                } else {
                    json!(v.to_f64())
                }
            };
            let rows: Vec<_> = rows
                .iter()
                .map(|(_, names, [mv, bel, pl])| {
                    json!({ "set": names, "m": value(mv), "bel": value(bel), "pl": value(pl) })
                })
                .collect();
            let doc = json!({ "frame": frame.atoms(), "total": p.total_weight(), "rows": rows });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json values"))?;
        }
        OutputFormat::Table => {
            let cells: Vec<[String; 4]> = rows
                .iter()
                .map(|(set, _, [mv, bel, pl])| {
                    [
                        set.clone(),
                        render(mv, a.rational),
                        render(bel, a.rational),
                        render(pl, a.rational),
                    ]
                })
                .collect();
            let header = ["set".to_string(), "m".into(), "Bel".into(), "Pl".into()];
            let mut widths = header.clone().map(|h| h.chars().count());
            for row in &cells {
                for (w, c) in widths.iter_mut().zip(row) {
                    *w = (*w).max(c.chars().count());
                }
            }
            for row in std::iter::once(&header).chain(&cells) {
                let line = format!(
                    "{:<w0$}  {:>w1$}  {:>w2$}  {:>w3$}",
                    row[0],
                    row[1],
                    row[2],
                    row[3],
                    w0 = widths[0],
                    w1 = widths[1],
                    w2 = widths[2],
                    w3 = widths[3]
                );
                writeln!(out, "{}", line.trim_end())?;
            }
        }
    }
    Ok(())
}

pub fn cmd_combine(
    a: &CombineArgs,
    max_atoms: usize,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), CliError> {
    let mut masses = Vec::with_capacity(a.inputs.len());
    for path in &a.inputs {
        masses.push(mass_from_json_str(&read_file(path)?, max_atoms)?);
    }
    let mut acc: MassFunction = masses[0].clone();
    for (i, m) in masses.iter().enumerate().skip(1) {
        let report = match combine_dempster(&acc, m) {
            Ok(r) => r,
            Err(e) => {
                writeln!(err, "step {i}: {}: {e}", a.inputs[i].display())?;
                return Err(e.into());
            }
        };
        writeln!(
            err,
            "step {i}: {} conflict {}",
            a.inputs[i].display(),
            report.conflict_mass
        )?;
        acc = report.result;
    }
    writeln!(out, "{}", mass_to_json_string(&acc))?;
    Ok(())
}

fn report_json(r: &SimulationReport) -> serde_json::Value {
    json!({
        "empirical": MassJson::from_mass(&r.empirical),
        "draws_attempted": r.draws_attempted,
        "draws_discarded": r.draws_discarded,
        "discard_fraction": r.discard_fraction(),
        "seed": r.seed,
        "chunks": r.chunks,
        "rng": r.rng,
    })
}

pub fn cmd_relabel(
    a: &RelabelArgs,
    max_atoms: usize,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), CliError> {
    let p = load_population(&a.data, &a.frame, max_atoms)?;
    let label_json: MassJson = serde_json::from_str(&read_file(&a.labels)?).map_err(InputError::from)?;
    let labels = LabelDistribution::new(label_json.to_mass_on(p.frame())?);
    let result = match (a.exact, a.simulate, a.seed) {
        (true, _, _) => relabel_exact(&freq_mass(&p), &labels)?,
        (false, Some(n), Some(seed)) => {
            let config = SimulationConfig::new(n, seed).with_chunks(a.chunks);
            let report = relabel_simulate(&p, &labels, config)?;
            let text = serde_json::to_string_pretty(&report_json(&report)).expect("json values");
            match &a.report {
                Some(path) => fs::write(path, text + "\n").map_err(|source| CliError::File {
                    path: path.clone(),
                    source,
                })?,
                None => writeln!(err, "{text}")?,
            }
            report.empirical
        }
        _ => {
            return Err(CliError::Config {
                name: "relabel mode".into(),
                message: "use --exact or --simulate N --seed S".into(),
            })
        }
    };
    writeln!(out, "{}", mass_to_json_string(&result))?;
    Ok(())
}

pub fn cmd_estimate(a: &EstimateArgs, max_atoms: usize, out: &mut dyn Write) -> Result<(), CliError> {
    let p = load_population(&a.data, &a.frame, max_atoms)?;
    let correction = if a.bonferroni {
        Correction::Bonferroni
    } else {
        Correction::None
    };
    let m = estimate_with_confidence(&CountTable::from_population(&p), a.alpha, correction)?;
    writeln!(out, "{}", mass_to_json_string(&m))?;
    Ok(())
}

pub fn cmd_casebook(a: &CasebookArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let names: Vec<String> = match (&a.name, a.all) {
        (_, true) => case_names().into_iter().map(String::from).collect(),
        (Some(n), false) => vec![n.clone()],
        (None, false) => unreachable!("clap requires a name or --all"),
    };
    let mut failed = 0;
    for name in &names {
        let report = run_case(name)?;
        write!(out, "{report}")?;
        if !report.passed() {
            failed += 1;
        }
    }
    if failed > 0 {
        return Err(CliError::CasebookFailed {
            failed,
            total: names.len(),
        });
    }
    writeln!(out, "all {} case(s) passed", names.len())?;
    Ok(())
}
