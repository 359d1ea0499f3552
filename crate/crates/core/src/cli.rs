//! Command-line front end: argument parsing, dispatch and exit codes.
//!
//! Exit codes: 0 success or pass, 1 a verifier or scan found a counterexample,
//! 2 usage or validation error, 3 budget exceeded.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::cayley::{normalize_connection_set, CayleyGraph};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupDescriptor};
use crate::isoperimetry::{classify, fragment_report, kappa, SearchBudget, SCHEMA_VERSION};
use crate::relation::Relation;
use crate::set::{parse_indices, ElementSet};
use crate::theorems::{scan, GroupContext, ScanConfig, TheoremId, Verdict};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "vosper", version, about = "Exact connectivities, atoms and structure checks for Cayley graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Worker threads for the searches and scans (default: all cores).
    #[arg(long, global = true, env = "VOSPER_THREADS")]
    pub threads: Option<usize>,

    /// Largest vertex count for full fragment enumeration.
    #[arg(long, global = true, env = "VOSPER_MAX_FRAGMENT_VERTICES", default_value_t = 24)]
    pub max_fragment_vertices: usize,

    /// Largest vertex count for connectivity-only searches.
    #[arg(long, global = true, env = "VOSPER_MAX_KAPPA_VERTICES", default_value_t = 32)]
    pub max_kappa_vertices: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The k-th connectivity of a Cayley graph or relation.
    Kappa {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
    },
    /// κ_k with the k-atoms and k-super-fragments.
    Atoms {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
    },
    /// Not separable, non-Cauchy, degenerate or Vosper.
    Classify {
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// The product A₁A₂⋯ of the given sets.
    Product {
        #[arg(long)]
        group: String,
        /// Repeat once per factor.
        #[arg(long = "set", required = true)]
        sets: Vec<String>,
    },
    /// Runs one verifier on one instance.
    Verify {
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        group: String,
        #[arg(long)]
        set: String,
    },
    /// Runs one verifier over a group roster.
    Scan {
        #[arg(long)]
        theorem: String,
        /// Restrict to one family: cyclic, dihedral, quaternion, symmetric, product.
        #[arg(long)]
        family: Option<String>,
        #[arg(long, default_value_t = 12)]
        max_order: usize,
        /// Include connection sets that do not generate the group.
        #[arg(long)]
        all_sets: bool,
        /// Visit every set instead of one per orbit.
        #[arg(long)]
        no_orbit_reduction: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    /// Group descriptor, e.g. `cyclic:7`, `D8`, `Z2xZ4` or `@group.json`.
    #[arg(long, required_unless_present = "relation")]
    pub group: Option<String>,
    /// Connection set, e.g. `0,1,3`; must contain 0 unless `--normalize` is given.
    #[arg(long, requires = "group")]
    pub set: Option<String>,
    /// A relation `{"n":..,"rows":[[..],..]}`, inline or as `@file.json`.
    #[arg(long, conflicts_with_all = ["group", "set"])]
    pub relation: Option<String>,
    /// Shift the connection set by its least element so that it contains 0.
    #[arg(long)]
    pub normalize: bool,
    /// Use the reverse graph.
    #[arg(long)]
    pub reverse: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Summary as one JSON document.
    Json,
    /// Summary as CSV.
    Csv,
    /// One record per line followed by the summary.
    Jsonl,
}

/// What a run produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Response {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Response {
    fn ok(code: i32, stdout: String) -> Self {
        Response {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(e: &Error) -> Self {
        let code = match e {
            Error::BudgetExceeded { .. } => EXIT_BUDGET,
            _ => EXIT_USAGE,
        };
        Response {
            code,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        }
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct KappaReport {
    schema_version: u32,
    vertices: usize,
    k: usize,
    kappa: usize,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct ProductReport {
    schema_version: u32,
    group: String,
    factors: Vec<ElementSet>,
    product: ElementSet,
    size: usize,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from<I, T>(args: I) -> Response
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Response {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                // --help and --version
                Response::ok(EXIT_OK, text)
            }
        }
    }
}

/// Runs a parsed command, on a dedicated pool when `--threads` is set.
pub fn run(cli: &Cli) -> Response {
    let result = match cli.threads {
        Some(0) => Err(Error::Invalid("--threads must be at least 1".into())),
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| Error::Invalid(format!("cannot start {t} threads: {e}")))
            .and_then(|pool| pool.install(|| dispatch(cli))),
        None => dispatch(cli),
    };
    let response = match result {
        Ok((code, text)) => Response::ok(code, text),
        Err(e) => return Response::error(&e),
    };
    match &cli.output {
        Some(path) => match std::fs::write(path, &response.stdout) {
            Ok(()) => Response::ok(response.code, String::new()),
            Err(e) => Response::error(&Error::Invalid(format!("cannot write {}: {e}", path.display()))),
        },
        None => response,
    }
}

fn budget(cli: &Cli) -> SearchBudget {
    SearchBudget {
        max_fragment_vertices: cli.max_fragment_vertices,
        max_kappa_vertices: cli.max_kappa_vertices,
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("reports serialize");
    text.push('\n');
    text
}

fn dispatch(cli: &Cli) -> Result<(i32, String)> {
    let budget = budget(cli);
    match &cli.command {
        Command::Kappa { graph, k } => {
            let rel = graph.relation()?;
            let k = *k as usize;
            let value = kappa(&rel, k, &budget)?;
            Ok((
                EXIT_OK,
                to_json(&KappaReport {
                    schema_version: SCHEMA_VERSION,
                    vertices: rel.vertex_count(),
                    k,
                    kappa: value,
                }),
            ))
        }
        Command::Atoms { graph, k } => {
            let rel = graph.relation()?;
            let report = fragment_report(&rel, *k as usize, &budget)?;
            Ok((EXIT_OK, to_json(&report.summary())))
        }
        Command::Classify { graph } => {
            let rel = graph.relation()?;
            Ok((EXIT_OK, to_json(&classify(&rel, &budget)?)))
        }
        Command::Product { group, sets } => {
            let descriptor = GroupDescriptor::parse(group)?;
            let g = descriptor.build()?;
            let factors = sets.iter().map(|s| parse_set(&g, s)).collect::<Result<Vec<_>>>()?;
            let product = g.product_of(&factors);
            Ok((
                EXIT_OK,
                to_json(&ProductReport {
                    schema_version: SCHEMA_VERSION,
                    group: descriptor.to_string(),
                    factors,
                    product,
                    size: product.len(),
                }),
            ))
        }
        Command::Verify { theorem, group, set } => {
            let theorem: TheoremId = theorem.parse()?;
            let ctx = GroupContext::new(&GroupDescriptor::parse(group)?)?;
            let set = parse_set(ctx.group(), set)?;
            let record = theorem.verify(&ctx, set, &budget)?;
            Ok((exit_code(record.verdict == Verdict::Fail), to_json(&record)))
        }
        Command::Scan {
            theorem,
            family,
            max_order,
            all_sets,
            no_orbit_reduction,
            format,
        } => {
            let theorem: TheoremId = theorem.parse()?;
            let mut config = ScanConfig {
                max_order: *max_order,
                generating_only: !all_sets,
                orbit_reduced: !no_orbit_reduction,
                budget,
                ..ScanConfig::default()
            };
            if let Some(f) = family {
                config = config.with_family(f)?;
            }
            let out = scan(&config, theorem)?;
            let code = exit_code(out.summary.fail > 0);
            let text = match format {
                Format::Json => to_json(&out.summary),
                Format::Csv => out.summary.to_csv(),
                Format::Jsonl => {
                    let mut t = out.to_jsonl();
                    t.push_str(&serde_json::to_string(&out.summary).expect("summary serializes"));
                    t.push('\n');
                    t
                }
            };
            Ok((code, text))
        }
    }
}

fn exit_code(counterexample: bool) -> i32 {
    if counterexample {
        EXIT_COUNTEREXAMPLE
    } else {
        EXIT_OK
    }
}

fn parse_set(g: &FiniteGroup, text: &str) -> Result<ElementSet> {
    ElementSet::from_indices(g.order(), parse_indices(text)?)
}

fn read_inline_or_file(text: &str) -> Result<String> {
    match text.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Error::Invalid(format!("cannot read relation file {path}: {e}"))),
        None => Ok(text.to_string()),
    }
}

impl GraphArgs {
    /// The relation the flags describe.
    pub fn relation(&self) -> Result<Relation> {
        let rel = if let Some(text) = &self.relation {
            let raw = read_inline_or_file(text)?;
            serde_json::from_str::<Relation>(&raw).map_err(|e| Error::Invalid(format!("bad relation: {e}")))?
        } else {
            let group = self
                .group
                .as_deref()
                .ok_or_else(|| Error::Invalid("--group or --relation is required".into()))?;
            let g = GroupDescriptor::parse(group)?.build()?;
            let set = self
                .set
                .as_deref()
                .ok_or_else(|| Error::Invalid("--set is required with --group".into()))?;
            let mut s = parse_set(&g, set)?;
            if self.normalize {
                s = normalize_connection_set(&g, s)?.0;
            } else if !s.contains(g.identity()) {
                return Err(Error::Invalid(
                    "connection set must contain the identity 0; pass --normalize to shift it".into(),
                ));
            }
            CayleyGraph::new(&g, s)?.into_relation()
        };
        Ok(if self.reverse { rel.reverse() } else { rel })
    }
}
