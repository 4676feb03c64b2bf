//! Command-line front end: parameter enumeration, supports, Hecke
//! descriptors, specialized tables and verification reports, all as JSON.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use hecke_atlas::corpus::{
    discrete_corpus, normed_corpus, standard_inventory, supercuspidal_corpus, unitary_inventory,
};
use hecke_atlas::hecke::{
    hecke_descriptor, specialize, unipotent_reduction, Kind, OrbitFactor, Reduction,
};
use hecke_atlas::params::{count_supercuspidals, parameter_from_file, ParameterFile};
use hecke_atlas::support::{cuspidal_pairs, supports, SupportDatum};
use hecke_atlas::verify::{run_suite, Suite};
use hecke_atlas::{DualGroup, Family, Inventory, LDParameter, Sign};
use serde::Serialize;

/// Environment variable fixing the number of worker threads.
pub const THREADS_ENV: &str = "HECKE_ATLAS_THREADS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURES: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser)]
#[command(
    name = "hecke-atlas",
    version,
    about = "Parameters, supercuspidal supports and Hecke algebra descriptors for classical groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Group {
    /// `Sp_{2N}`, dual `SO_{2N+1}` seen in `GL_{2N+1}`.
    Sp,
    /// `SO_{2N+1}`, dual `Sp_{2N}`.
    SoOdd,
    /// Even orthogonal, dual `O_{2N}`.
    OEven,
    /// Unramified unitary `U_N`.
    U,
}

impl Group {
    fn ambient(self, rank: u32) -> hecke_atlas::Result<DualGroup> {
        match self {
            Group::Sp => DualGroup::new(Family::Orthogonal, 2 * rank + 1),
            Group::SoOdd => DualGroup::new(Family::Symplectic, 2 * rank),
            Group::OEven => DualGroup::new(Family::Orthogonal, 2 * rank),
            Group::U => DualGroup::new(Family::UnitaryL, rank),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// List parameters of a group over an inventory of inertial classes.
    Enumerate {
        #[arg(long, value_enum)]
        group: Group,
        #[arg(long)]
        rank: u32,
        /// Inventory JSON: a list of class specifications.
        #[arg(long)]
        classes: Option<PathBuf>,
        /// Discrete parameters instead of normed ones.
        #[arg(long, conflicts_with = "cuspidal")]
        discrete: bool,
        /// Parameters of supercuspidal shape, with their counts.
        #[arg(long)]
        cuspidal: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Supercuspidal supports and cuspidal pairs of a normed parameter.
    Supports {
        #[arg(long)]
        param: PathBuf,
        #[arg(long)]
        classes: Option<PathBuf>,
    },
    /// Hecke algebra descriptors of every support of a normed parameter.
    Hecke {
        #[arg(long)]
        param: PathBuf,
        #[arg(long)]
        classes: Option<PathBuf>,
    },
    /// The closed-form table of a trivial-inertia setting.
    Specialize {
        #[arg(long, value_parser = parse_kind)]
        kind: Kind,
        #[arg(long)]
        rank: u32,
    },
    /// Run a verification suite and report every case.
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        #[arg(long)]
        max_rank: Option<u32>,
        /// Write the report here instead of standard output.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Exit 0 when the only non-passing cases are flagged.
        #[arg(long)]
        allow_flagged: bool,
    },
}

fn parse_kind(s: &str) -> Result<Kind, String> {
    s.parse().map_err(|e: hecke_atlas::Error| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: hecke_atlas::Error| e.to_string())
}

/// Runs the command line and returns the process exit code: 0 when
/// everything passes, 1 when a verification has failures, 2 on input
/// errors.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_INPUT;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
    };
    if let Err(e) = configure_threads() {
        let _ = writeln!(err, "error: {e:#}");
        return EXIT_INPUT;
    }
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_INPUT
        }
    }
}

fn configure_threads() -> anyhow::Result<()> {
    let Ok(value) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = value
        .trim()
        .parse()
        .with_context(|| format!("{THREADS_ENV}={value:?} is not a thread count"))?;
    if n == 0 {
        bail!("{THREADS_ENV} must be positive");
    }
    // a second call in the same process keeps the first pool
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global();
    Ok(())
}

fn emit(value: &impl Serialize, path: Option<&Path>, out: &mut dyn Write) -> anyhow::Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display()))?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn default_inventory(family: Family) -> Inventory {
    match family {
        Family::UnitaryL => unitary_inventory(),
        _ => standard_inventory(),
    }
}

fn read_inventory(path: &Path) -> anyhow::Result<Inventory> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Inventory::from_json(&text).with_context(|| format!("inventory {}", path.display()))
}

/// The inventory comes from `--classes`, else from the parameter file,
/// else the default for the ambient family.
fn read_parameter(path: &Path, classes: Option<&Path>) -> anyhow::Result<(Inventory, LDParameter)> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let file: ParameterFile =
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    let inv = match (classes, &file.classes) {
        (Some(p), _) => read_inventory(p)?,
        (None, Some(specs)) => Inventory::new(specs)?,
        (None, None) => default_inventory(file.ambient.family),
    };
    let phi = parameter_from_file(&file, &inv)
        .with_context(|| format!("parameter {}", path.display()))?;
    Ok((inv, phi))
}

#[derive(Serialize)]
struct Enumeration {
    ambient: DualGroup,
    mode: &'static str,
    count: usize,
    parameters: Vec<EnumeratedParameter>,
}

#[derive(Serialize)]
struct EnumeratedParameter {
    parameter: LDParameter,
    /// Supercuspidal counts for the two pure inner forms.
    #[serde(skip_serializing_if = "Option::is_none")]
    supercuspidals: Option<FormCounts>,
}

#[derive(Serialize)]
struct FormCounts {
    plus: u64,
    minus: u64,
}

#[derive(Serialize)]
struct SupportDescriptor {
    #[serde(rename = "S")]
    s: SupportDatum,
    factors: Vec<OrbitFactor>,
}

#[derive(Serialize)]
struct HeckeOutput {
    parameter: LDParameter,
    supports: Vec<SupportDescriptor>,
    reduction: Vec<Reduction>,
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> anyhow::Result<i32> {
    match command {
        Command::Enumerate {
            group,
            rank,
            classes,
            discrete,
            cuspidal,
            out: path,
        } => {
            if rank == 0 {
                bail!("rank must be positive");
            }
            let ambient = group.ambient(rank)?;
            let inv = match classes {
                Some(p) => read_inventory(&p)?,
                None => default_inventory(ambient.family),
            };
            let (mode, params) = if cuspidal {
                ("cuspidal", supercuspidal_corpus(&inv, &ambient))
            } else if discrete {
                ("discrete", discrete_corpus(&inv, &ambient))
            } else {
                ("normed", normed_corpus(&inv, &ambient))
            };
            let parameters = params
                .into_iter()
                .map(|parameter| {
                    let supercuspidals = if cuspidal {
                        Some(FormCounts {
                            plus: count_supercuspidals(&inv, &parameter, Sign::Plus)?,
                            minus: count_supercuspidals(&inv, &parameter, Sign::Minus)?,
                        })
                    } else {
                        None
                    };
                    Ok(EnumeratedParameter {
                        parameter,
                        supercuspidals,
                    })
                })
                .collect::<hecke_atlas::Result<Vec<_>>>()?;
            emit(
                &Enumeration {
                    ambient,
                    mode,
                    count: parameters.len(),
                    parameters,
                },
                path.as_deref(),
                out,
            )?;
            Ok(EXIT_OK)
        }
        Command::Supports { param, classes } => {
            let (inv, phi0) = read_parameter(&param, classes.as_deref())?;
            emit(&cuspidal_pairs(&inv, &phi0)?, None, out)?;
            Ok(EXIT_OK)
        }
        Command::Hecke { param, classes } => {
            let (inv, phi0) = read_parameter(&param, classes.as_deref())?;
            let supports = supports(&inv, &phi0)?
                .into_iter()
                .map(|s| {
                    Ok(SupportDescriptor {
                        factors: hecke_descriptor(&inv, &phi0, &s)?,
                        s,
                    })
                })
                .collect::<hecke_atlas::Result<Vec<_>>>()?;
            let reduction = unipotent_reduction(&inv, &phi0)?;
            emit(
                &HeckeOutput {
                    parameter: phi0,
                    supports,
                    reduction,
                },
                None,
                out,
            )?;
            Ok(EXIT_OK)
        }
        Command::Specialize { kind, rank } => {
            emit(&specialize(kind, rank)?, None, out)?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            suite,
            max_rank,
            report,
            allow_flagged,
        } => {
            let r = run_suite(suite, max_rank)?;
            emit(&r, report.as_deref(), out)?;
            writeln!(
                err,
                "{}: {} passed, {} failed, {} flagged",
                r.suite, r.passed, r.failed, r.flagged
            )?;
            Ok(if r.is_green(allow_flagged) {
                EXIT_OK
            } else {
                EXIT_FAILURES
            })
        }
    }
}
