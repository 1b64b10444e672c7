//! Command-line front end. `parse_args` validates argv, `run` executes a
//! command and writes its report; `main` only maps errors to exit codes.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use vclab_core::gadgets::{self, GadgetSpec};
use vclab_core::heuristics::{self, Choice};
use vclab_core::io::{parse_graph, write_graph};
use vclab_core::reductions::{self, ReductionArtifacts};
use vclab_core::{exact, ratio, Algorithm, Budget, Graph, Policy, Ratio};

pub mod batch;
pub mod verify;

pub const EXIT_USAGE: u8 = 1;
pub const EXIT_TOO_LARGE: u8 = 2;
pub const EXIT_VERIFY: u8 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Input {
        path: String,
        source: vclab_core::Error,
    },
    #[error(transparent)]
    Library(#[from] vclab_core::Error),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("write failed: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv output failed: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Library(vclab_core::Error::InstanceTooLarge { .. })
            | CliError::Input {
                source: vclab_core::Error::InstanceTooLarge { .. },
                ..
            } => EXIT_TOO_LARGE,
            CliError::Verification(_) => EXIT_VERIFY,
            _ => EXIT_USAGE,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(
    name = "vclab",
    version,
    about = "Vertex-cover heuristics, exact oracles and gadget reductions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlgArg {
    Ed,
    Mdg,
}

impl From<AlgArg> for Algorithm {
    fn from(a: AlgArg) -> Algorithm {
        match a {
            AlgArg::Ed => Algorithm::Ed,
            AlgArg::Mdg => Algorithm::Mdg,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PolicyArg {
    First,
    Random,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ClassArg {
    Sed,
    Smdg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Ged,
    Gmdg,
    Hath,
    Hatg,
    Hatgr,
}

#[derive(Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Minimum vertex cover.
    Solve {
        file: PathBuf,
        /// Also print an optimal cover.
        #[arg(long)]
        witness: bool,
    },
    /// Run ED or MDG once, or compute its best possible outcome.
    Heuristic {
        file: PathBuf,
        #[arg(long, value_enum)]
        alg: AlgArg,
        #[arg(long, value_enum, default_value = "first", conflicts_with = "min")]
        policy: PolicyArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Minimum output size over all choice sequences.
        #[arg(long)]
        min: bool,
    },
    /// Decide membership of a graph in S^ED_r or S^MDG_r.
    Member {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "sed")]
        class: ClassArg,
        #[arg(long)]
        ratio: Ratio,
    },
    /// Apply a reduction; prints the output graph with role and constant comments.
    Reduce {
        #[arg(required = true, num_args = 1..=2)]
        files: Vec<PathBuf>,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        ratio: Option<Ratio>,
    },
    /// Staged bipartite gadget generation and checks.
    Gen {
        #[command(subcommand)]
        what: GenCommand,
    },
    /// Run a verification suite and report each check.
    Verify {
        #[arg(value_enum)]
        suite: verify::Suite,
        /// Wall-clock budget in seconds; checks left when it runs out are
        /// reported as not run.
        #[arg(long, default_value_t = 600)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// One CSV row per (file, operation).
    Batch {
        files: Vec<PathBuf>,
        #[arg(long = "ops", value_enum, value_delimiter = ',', default_value = "mvc")]
        operations: Vec<batch::Operation>,
    },
}

#[derive(Debug, PartialEq, Eq, clap::Args)]
pub struct GadgetArgs {
    #[arg(long)]
    pub n1: usize,
    #[arg(long)]
    pub n2: usize,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub delta: u64,
    /// Defaults to the smallest mu meeting the logarithmic condition.
    #[arg(long)]
    pub mu: Option<usize>,
}

impl GadgetArgs {
    pub fn spec(&self) -> GadgetSpec {
        let delta = self.delta as usize;
        match self.mu {
            Some(mu) => GadgetSpec {
                n1: self.n1,
                n2: self.n2,
                delta,
                mu,
            },
            None => GadgetSpec::with_min_mu(self.n1, self.n2, delta),
        }
    }
}

#[derive(Debug, PartialEq, Eq, Subcommand)]
pub enum GenCommand {
    /// Write the gadget graph with "c part V|Vt <id>" comments.
    Lemma4 {
        #[command(flatten)]
        spec: GadgetArgs,
    },
    /// Feasibility and forcing checks for a spec.
    Check {
        #[command(flatten)]
        spec: GadgetArgs,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Parses argv (including the program name).
pub fn parse_args<I, T>(argv: I) -> Result<Cli, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    Cli::try_parse_from(argv)
}

pub fn read_graph(path: &Path) -> CliResult<Graph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    parse_graph(&text).map_err(|source| CliError::Input {
        path: path.display().to_string(),
        source,
    })
}

fn ids(vs: impl IntoIterator<Item = usize>) -> String {
    vs.into_iter()
        .map(|v| (v + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> CliResult<()> {
    match &cli.command {
        Command::Solve { file, witness } => {
            let g = read_graph(file)?;
            let cover = exact::mvc_with(&g, &Budget::default())?;
            writeln!(out, "mvc {}", cover.size)?;
            if *witness {
                writeln!(out, "cover {}", ids(cover.cover.iter()))?;
            }
        }
        Command::Heuristic {
            file,
            alg,
            policy,
            seed,
            min,
        } => {
            let g = read_graph(file)?;
            let algorithm = Algorithm::from(*alg);
            if *min {
                let t = match algorithm {
                    Algorithm::Ed => heuristics::min_ed_with(&g, &Budget::default())?,
                    Algorithm::Mdg => heuristics::min_mdg_with(&g, &Budget::default())?,
                };
                writeln!(out, "min-{algorithm} {}", t.size())?;
            } else {
                let policy = match policy {
                    PolicyArg::First => Policy::First,
                    PolicyArg::Random => Policy::Random(*seed),
                };
                let t = heuristics::run(&g, algorithm, policy)?;
                for c in &t.choices {
                    match *c {
                        Choice::Edge(u, v) => writeln!(out, "edge {} {}", u + 1, v + 1)?,
                        Choice::Vertex(v) => writeln!(out, "vertex {}", v + 1)?,
                    }
                }
                writeln!(out, "cover {}", ids(t.cover.iter()))?;
                writeln!(out, "size {}", t.size())?;
            }
        }
        Command::Member { file, class, ratio } => {
            let g = read_graph(file)?;
            let algorithm = match class {
                ClassArg::Sed => Algorithm::Ed,
                ClassArg::Smdg => Algorithm::Mdg,
            };
            let m = ratio::member(&g, *ratio, algorithm, &Budget::default())?;
            writeln!(out, "member {}", m.member)?;
            writeln!(out, "min-{algorithm} {}", m.heuristic_min)?;
            writeln!(out, "mvc {}", m.mvc)?;
            writeln!(out, "ratio {ratio}")?;
        }
        Command::Reduce { files, kind, ratio } => {
            let art = reduce(files, *kind, *ratio)?;
            out.write_all(write_graph(&art.output, &art.trailer()).as_bytes())?;
        }
        Command::Gen { what } => gen(what, out)?,
        Command::Verify {
            suite,
            budget,
            seed,
        } => {
            let report = verify::run_verify(*suite, std::time::Duration::from_secs(*budget), *seed);
            out.write_all(report.render().as_bytes())?;
            if !report.passed() {
                return Err(CliError::Verification(report.summary()));
            }
        }
        Command::Batch { files, operations } => {
            batch::batch_report(files, operations, out)?;
        }
    }
    Ok(())
}

fn reduce(files: &[PathBuf], kind: KindArg, ratio: Option<Ratio>) -> CliResult<ReductionArtifacts> {
    let graphs = files
        .iter()
        .map(|f| read_graph(f))
        .collect::<CliResult<Vec<_>>>()?;
    let need = match kind {
        KindArg::Ged | KindArg::Gmdg => 1,
        _ => 2,
    };
    if graphs.len() != need {
        return Err(CliError::Usage(format!(
            "--kind {kind:?} takes {need} input file(s), got {}",
            graphs.len()
        )));
    }
    let ratio = || ratio.ok_or_else(|| CliError::Usage(format!("--kind {kind:?} needs --ratio")));
    Ok(match kind {
        KindArg::Ged => reductions::g_ed(&graphs[0]),
        KindArg::Gmdg => reductions::g_mdg(&graphs[0]),
        KindArg::Hath => {
            let (h1, h2) = reductions::pad_to_equal(&graphs[0], &graphs[1]);
            reductions::build_hat_h(&h1, &h2, ratio()?)?
        }
        KindArg::Hatg => reductions::build_hat_g(&graphs[0], &graphs[1])?,
        KindArg::Hatgr => reductions::build_hat_g_r(&graphs[0], &graphs[1], ratio()?)?,
    })
}

fn gen(what: &GenCommand, out: &mut dyn Write) -> CliResult<()> {
    match what {
        GenCommand::Lemma4 { spec } => {
            let spec = spec.spec();
            let (g, layout) = gadgets::lemma4_graph(&spec)?;
            let mut trailer: Vec<String> = layout
                .v_part
                .iter()
                .map(|v| format!("part V {}", v + 1))
                .chain(
                    layout
                        .vtilde_part
                        .iter()
                        .map(|v| format!("part Vt {}", v + 1)),
                )
                .collect();
            for (name, value) in [
                ("n1", spec.n1),
                ("n2", spec.n2),
                ("delta", spec.delta),
                ("mu", spec.mu),
            ] {
                trailer.push(format!("const {name} {value}"));
            }
            out.write_all(write_graph(&g, &trailer).as_bytes())?;
        }
        GenCommand::Check {
            spec,
            samples,
            seed,
        } => {
            let spec = spec.spec();
            let mut report = String::new();
            let feasible = gadgets::gadget_feasible(&spec);
            let log_ok = spec.satisfies_log_condition();
            writeln!(
                report,
                "spec n1={} n2={} delta={} mu={}",
                spec.n1, spec.n2, spec.delta, spec.mu
            )
            .unwrap();
            writeln!(report, "feasible {feasible}").unwrap();
            writeln!(report, "log-condition {log_ok}").unwrap();
            let mut ok = feasible;
            if feasible {
                let (g, layout) = gadgets::lemma4_graph(&spec)?;
                let structure = gadgets::verify_structure(&g, &layout);
                let forcing = gadgets::verify_property4(&g, &layout, *samples, *seed)?;
                writeln!(report, "structure {structure}").unwrap();
                writeln!(report, "property4 {forcing} ({samples} samples)").unwrap();
                ok = structure && forcing;
            }
            out.write_all(report.as_bytes())?;
            if !ok {
                return Err(CliError::Verification(format!(
                    "gadget checks failed for {spec:?}"
                )));
            }
        }
    }
    Ok(())
}
