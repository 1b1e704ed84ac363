//! Command-line driver. Every command is described by a [`JobSpec`], which is
//! what the argument parser produces and what `--config` files contain.

mod tables;
mod verify;

use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::affine_weyl::AffineWeyl;
use crate::bset::{enumerate_bset, enumerate_indec};
use crate::error::{Error, Result};
use crate::reduction::{Reducer, Strategy, DEFAULT_BUDGET};
use crate::root_datum::{CartanType, RootDatum, Twist};

pub use tables::{golden_rows, table_rows, Series, TableRow, GOLDEN_CSV};
pub use verify::Target;

pub const EXIT_OK: u8 = 0;
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_RESOURCE: u8 = 2;
pub const EXIT_USAGE: u8 = 3;

/// Exit code for an error that ends a command.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Contract(_) | Error::Parse { .. } => EXIT_USAGE,
        Error::Resource(_) => EXIT_RESOURCE,
        Error::Violation(_) | Error::Internal(_) => EXIT_MISMATCH,
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "adlv",
    version,
    about = "Kottwitz sets, reduction trees and class polynomials"
)]
pub struct Cli {
    #[command(flatten)]
    pub options: Options,
    /// Read the job from a JSON file instead of the command line.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Print the job as JSON and exit.
    #[arg(long, global = true)]
    pub print_config: bool,
    #[command(subcommand)]
    pub command: Option<Job>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
    Dot,
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StrategyKind {
    /// First reduction move found in node order.
    #[default]
    First,
    /// Node order and move choice drawn from `--seed`.
    Seeded,
}

#[derive(Args, Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct Options {
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub format: Option<Format>,
    /// Seed for the seeded strategy and for random instances.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Visited-node budget per conjugation-orbit search.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: usize,
    /// Worker threads; defaults to the number of cores.
    #[arg(long, global = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub jobs: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = StrategyKind::First)]
    pub strategy: StrategyKind,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            format: None,
            seed: 0,
            budget: DEFAULT_BUDGET,
            jobs: None,
            strategy: StrategyKind::First,
        }
    }
}

impl Options {
    pub fn reduction_strategy(&self) -> Strategy {
        match self.strategy {
            StrategyKind::First => Strategy::FirstFound,
            StrategyKind::Seeded => Strategy::Seeded(self.seed),
        }
    }
}

/// A root datum named on the command line.
#[derive(Args, Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DatumArgs {
    /// Cartan type with rank, such as A2 or E8.
    #[arg(long = "type")]
    #[serde(rename = "type")]
    pub ty: String,
    /// Diagram automorphism: none, flip or triality.
    #[arg(long, default_value = "none")]
    #[serde(default = "no_twist")]
    pub twist: String,
}

fn no_twist() -> String {
    "none".into()
}

impl DatumArgs {
    pub fn build(&self) -> Result<Arc<RootDatum>> {
        let ty = CartanType::parse(&self.ty)?;
        Ok(Arc::new(RootDatum::with_twist(
            ty,
            Twist::parse(&self.twist)?,
        )?))
    }
}

#[derive(Subcommand, Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Job {
    /// Indecomposable counts for the non-minuscule fundamental coweights of type E.
    Tables {
        #[arg(value_enum, default_value_t = Series::All)]
        #[serde(default)]
        series: Series,
    },
    /// Run a verification target and stream one report per instance.
    Verify {
        #[command(subcommand)]
        #[serde(flatten)]
        target: Target,
    },
    /// Reduction tree of an element, such as "s1 s0 s1" or "t[1,1]*s1 s2".
    Tree {
        element: String,
        #[command(flatten)]
        #[serde(flatten)]
        datum: DatumArgs,
    },
    /// The Kottwitz set of a dominant coweight.
    Bset {
        #[command(flatten)]
        #[serde(flatten)]
        datum: DatumArgs,
        /// `w4` for a fundamental coweight, or fundamental coordinates `0,1,0`.
        #[arg(long)]
        coweight: String,
        /// Keep only the Hodge-Newton indecomposable classes.
        #[arg(long)]
        #[serde(default)]
        indec: bool,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JobSpec {
    #[serde(flatten)]
    pub job: Job,
    #[serde(flatten)]
    pub options: Options,
}

impl JobSpec {
    pub fn from_json(text: &str) -> Result<JobSpec> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            pos: e.column(),
            msg: e.to_string(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("job specs serialize")
    }
}

/// Parses a coweight argument against a datum of the given rank.
pub fn parse_coweight(text: &str, rank: usize) -> Result<Vec<i64>> {
    let text = text.trim();
    if let Some(idx) = text.strip_prefix('w') {
        let i: usize = idx.parse().map_err(|_| Error::Parse {
            pos: 1,
            msg: format!("bad coweight index {idx:?}"),
        })?;
        if i == 0 || i > rank {
            return Err(Error::Parse {
                pos: 1,
                msg: format!("coweight index {i} outside 1..={rank}"),
            });
        }
        let mut mu = vec![0; rank];
        mu[i - 1] = 1;
        return Ok(mu);
    }
    let mut out = Vec::new();
    let mut pos = 0;
    for part in text.split(',') {
        out.push(part.trim().parse().map_err(|_| Error::Parse {
            pos,
            msg: format!("bad coordinate {part:?}"),
        })?);
        pos += part.len() + 1;
    }
    if out.len() != rank {
        return Err(Error::Parse {
            pos: 0,
            msg: format!("expected {rank} coordinates, got {}", out.len()),
        });
    }
    Ok(out)
}

/// Parses the process arguments and runs the job, returning the exit code.
pub fn main_with_args(
    args: impl IntoIterator<Item = String>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> u8 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let spec = match (&cli.config, cli.command) {
        (Some(path), None) => match std::fs::read_to_string(path) {
            Ok(text) => match JobSpec::from_json(&text) {
                Ok(s) => s,
                Err(e) => return report_error(&e, err),
            },
            Err(e) => {
                let _ = writeln!(err, "cannot read {}: {e}", path.display());
                return EXIT_USAGE;
            }
        },
        (Some(_), Some(_)) => {
            let _ = writeln!(err, "--config cannot be combined with a command");
            return EXIT_USAGE;
        }
        (None, Some(job)) => JobSpec {
            job,
            options: cli.options,
        },
        (None, None) => {
            let _ = writeln!(err, "no command given; see --help");
            return EXIT_USAGE;
        }
    };
    if cli.print_config {
        let _ = writeln!(out, "{}", spec.to_json());
        return EXIT_OK;
    }
    run(&spec, out, err)
}

fn report_error(e: &Error, err: &mut dyn Write) -> u8 {
    let _ = writeln!(err, "error: {e}");
    exit_code(e)
}

/// Runs a job, writing results to `out` and diagnostics to `err`.
pub fn run(spec: &JobSpec, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(spec.options.jobs.unwrap_or(0))
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "cannot start worker pool: {e}");
            return EXIT_RESOURCE;
        }
    };
    let (mut o, mut e) = (Vec::new(), Vec::new());
    let result = pool.install(|| match &spec.job {
        Job::Tables { series } => tables::run(*series, &spec.options, &mut o, &mut e),
        Job::Verify { target } => verify::run(target, &spec.options, &mut o),
        Job::Tree { element, datum } => run_tree(element, datum, &spec.options, &mut o),
        Job::Bset {
            datum,
            coweight,
            indec,
        } => run_bset(datum, coweight, *indec, &spec.options, &mut o),
    });
    if out.write_all(&o).and_then(|_| err.write_all(&e)).is_err() {
        return EXIT_RESOURCE;
    }
    match result {
        Ok(code) => code,
        Err(e) => report_error(&e, err),
    }
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes())
        .map_err(|e| Error::Resource(format!("write failed: {e}")))
}

fn run_tree(element: &str, datum: &DatumArgs, opts: &Options, out: &mut dyn Write) -> Result<u8> {
    let aw = AffineWeyl::new(datum.build()?);
    let w = aw.parse(element)?;
    let r = Reducer::new(&aw, opts.reduction_strategy(), opts.budget);
    let tree = r.build_tree(&w)?;
    let polys = r.class_polynomials(&w)?;
    match opts.format.unwrap_or(Format::Json) {
        Format::Json => {
            let mut v = tree.to_json(&r)?;
            let list: Vec<_> = polys
                .iter()
                .map(|(b, f)| serde_json::json!({"b": b, "F": f.poly.to_string(), "paths": f.paths.iter().map(|p| p.count).sum::<u64>()}))
                .collect();
            v["class_polynomials"] = list.into();
            write_out(
                out,
                &format!("{}\n", serde_json::to_string_pretty(&v).expect("json")),
            )?;
        }
        Format::Dot => {
            let mut s = tree.to_dot(&r);
            for (b, f) in &polys {
                s.push_str(&format!(
                    "// F[{}; {}] = {}\n",
                    b.newton, b.kottwitz, f.poly
                ));
            }
            write_out(out, &s)?;
        }
        Format::Csv => return Err(Error::Contract("trees are exported as json or dot".into())),
    }
    Ok(EXIT_OK)
}

fn run_bset(
    datum: &DatumArgs,
    coweight: &str,
    indec: bool,
    opts: &Options,
    out: &mut dyn Write,
) -> Result<u8> {
    let d = datum.build()?;
    let mu = parse_coweight(coweight, d.rank())?;
    let b = if indec {
        enumerate_indec(&d, &mu)?
    } else {
        enumerate_bset(&d, &mu)?
    };
    match opts.format.unwrap_or(Format::Json) {
        Format::Json => write_out(
            out,
            &format!(
                "{}\n",
                serde_json::to_string_pretty(&b.records()).expect("json")
            ),
        )?,
        Format::Csv => {
            let mut s = String::from("newton,kottwitz,I_nu,chai_length,defect\n");
            for r in b.records() {
                let join = |xs: Vec<String>| xs.join(";");
                s.push_str(&format!(
                    "{},{},{},{},{}\n",
                    join(r.newton.to_strings()),
                    r.kottwitz,
                    join(r.i_nu.labels().iter().map(|i| i.to_string()).collect()),
                    r.chai_length,
                    r.defect
                ));
            }
            write_out(out, &s)?;
        }
        Format::Dot => {
            return Err(Error::Contract(
                "Kottwitz sets are exported as json or csv".into(),
            ))
        }
    }
    Ok(EXIT_OK)
}
