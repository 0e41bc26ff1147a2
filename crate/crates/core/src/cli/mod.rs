//! Batch front end: load an instance file, run one checker or theorem, and
//! render a deterministic report with an exit status.
//!
//! Exit status: 0 verified, 1 a check failed, 2 inconclusive within the
//! budget, 3 input error.

mod commands;
pub mod document;

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Debug, Clone, Parser)]
#[command(
    name = "magmoid",
    version,
    about = "Finite-instance verifier for magmoidal fixed-point theorems"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Largest hom-set enumerated before giving up.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: Option<u64>,
    /// Reduction steps, and joinability depth per side.
    #[arg(long, global = true, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
    pub fuel: u64,
    /// Frontier cap for joinability search.
    #[arg(long, global = true, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub width: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Probe objects for representability: `all`, or object ids separated
    /// by commas.
    #[arg(long = "probe-set", global = true, default_value = "all")]
    pub probe_set: ProbeSet,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Axiom suites: hom closure, bifunctoriality, naturality, projections, flat laws.
    Check { file: PathBuf },
    /// The t-points of every object.
    Points { file: PathBuf },
    /// The extensional quotient by t-points.
    Quotient { file: PathBuf },
    /// Diagonal argument for roles A, C, F, sigma (and p, s).
    Diagonal { file: PathBuf },
    /// Fixed point for roles A, C, F, sigma, a0 (or p, a).
    Fixpoint {
        file: PathBuf,
        /// Search the t-points of A for an index instead of reading a0.
        #[arg(long)]
        search: bool,
    },
    /// Fixed point from a regular epi t' → 1 and right projections.
    FixpointRegular { file: PathBuf },
    /// Certifies the internal hom Y^X for roles X, Y.
    HomCheck { file: PathBuf },
    /// Uniform fixed point ♭(C^C) → C.
    UniformFix { file: PathBuf },
    /// Fixed-point map C^C → C from a split epi A → C^A.
    FixSplitEpi { file: PathBuf },
    /// Combinator terms.
    #[command(subcommand)]
    Comb(CombCommand),
}

#[derive(Debug, Clone, Subcommand)]
pub enum CombCommand {
    /// Leftmost-outermost reduction up to the fuel.
    Reduce { term: String },
    /// Searches for a common reduct.
    Join { left: String, right: String },
    /// Checks that `f x` and `x (f x)` are joinable.
    Fpc { term: String },
    /// The constants used and the logic they fall in.
    Basis { term: String },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Check { .. } => "check",
            Command::Points { .. } => "points",
            Command::Quotient { .. } => "quotient",
            Command::Diagonal { .. } => "diagonal",
            Command::Fixpoint { .. } => "fixpoint",
            Command::FixpointRegular { .. } => "fixpoint-regular",
            Command::HomCheck { .. } => "hom-check",
            Command::UniformFix { .. } => "uniform-fix",
            Command::FixSplitEpi { .. } => "fix-split-epi",
            Command::Comb(CombCommand::Reduce { .. }) => "comb reduce",
            Command::Comb(CombCommand::Join { .. }) => "comb join",
            Command::Comb(CombCommand::Fpc { .. }) => "comb fpc",
            Command::Comb(CombCommand::Basis { .. }) => "comb basis",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProbeSet {
    All,
    List(Vec<String>),
}

impl FromStr for ProbeSet {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "all" {
            return Ok(ProbeSet::All);
        }
        let ids: Vec<String> = s.split(',').map(|p| p.trim().to_string()).collect();
        if ids.iter().any(String::is_empty) {
            return Err(format!("bad probe list `{s}`"));
        }
        Ok(ProbeSet::List(ids))
    }
}

/// A malformed or inconsistent input file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError {
    pub path: PathBuf,
    pub at: Option<(usize, usize)>,
    pub message: String,
}

impl InputError {
    pub fn new(path: &Path, at: Option<(usize, usize)>, message: String) -> Self {
        InputError {
            path: path.to_path_buf(),
            at,
            message,
        }
    }
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.path.display())?;
        if let Some((line, col)) = self.at {
            write!(f, ":{line}:{col}")?;
        }
        write!(f, ": {}", self.message)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Verified,
    Failed,
    Inconclusive,
    InputError,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Verified => 0,
            Verdict::Failed => 1,
            Verdict::Inconclusive => 2,
            Verdict::InputError => 3,
        }
    }

    fn label(self) -> &'static str {
        match self {
            Verdict::Verified => "Verified",
            Verdict::Failed => "Failed",
            Verdict::Inconclusive => "Inconclusive",
            Verdict::InputError => "InputError",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    /// The result the command instantiates.
    pub theorem: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instance: Option<String>,
    pub verdict: Verdict,
    #[serde(skip)]
    pub lines: Vec<String>,
    pub details: serde_json::Value,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Structured => {
                let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
                s.push('\n');
                s
            }
            Format::Text => {
                let mut s = format!("{}: {}\n", self.command, self.theorem);
                if let Some(i) = &self.instance {
                    s.push_str(&format!("instance: {i}\n"));
                }
                for l in &self.lines {
                    s.push_str(l);
                    s.push('\n');
                }
                s.push_str(self.verdict.label());
                s.push('\n');
                s
            }
        }
    }
}

/// What a run produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub exit_code: i32,
    pub output: String,
}

pub fn run(config: &RunConfig) -> Outcome {
    let report = commands::dispatch(config);
    Outcome {
        exit_code: report.verdict.exit_code(),
        output: report.render(config.format),
    }
}
