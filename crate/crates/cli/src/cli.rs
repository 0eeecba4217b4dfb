//! Command-line surface. [`Cli`] is the clap parser, [`RunConfig`] the
//! validated configuration and [`run`] executes it.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use betti_cone_core::betti::hk_vector;
use betti_cone_core::cone::{formula_report, hk_subspace_report, witnesses_cn, witnesses_cnh, EnumerationOptions};
use betti_cone_core::{ConeReport, FieldSpec, Graph};

use crate::cache::Cache;
use crate::document::{diagram_to_string, parse_field, report_to_string};
use crate::error::{exit, AppError};
use crate::formats::{inline_edge_list, parse_edge_list, parse_graph6, OutputFormat};
use crate::parallel::{enumerate_parallel, hochster_parallel, Workers};
use crate::render::{diagram_csv, diagram_table, hk_table, report_csv, report_table};
use crate::verify::{render, run_suite, SuiteOptions};

#[derive(Debug, Parser)]
#[command(name = "betti-cone", version, about = "Graded Betti diagrams of edge ideals and the cones they span")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Betti diagram of the edge ideal of a graph.
    Betti {
        #[command(flatten)]
        source: GraphSource,
        #[command(flatten)]
        common: Common,
    },
    /// Dimension of the cone of Betti diagrams on n vertices.
    ConeDim {
        #[arg(short = 'n')]
        n: usize,
        /// Restrict to graphs of this height (minimum vertex cover size).
        #[arg(long)]
        height: Option<usize>,
        #[arg(long, value_enum, default_value_t = MethodArg::Formula)]
        method: MethodArg,
        /// Skip rank reduction for repeated diagrams.
        #[arg(long)]
        dedupe: bool,
        /// Stop enumerating once the upper bound is reached.
        #[arg(long)]
        early_stop: bool,
        #[arg(long)]
        cache_dir: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Run the verification suite.
    Verify {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long)]
        dedupe: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Herzog–Kühl functionals of a graph's diagram.
    Hk {
        #[command(flatten)]
        source: GraphSource,
        /// Largest j; defaults to the vertex count.
        #[arg(long)]
        max_j: Option<u32>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GraphSource {
    /// Inline edge list, e.g. "3;1 2;2 3;1 3".
    #[arg(long)]
    graph: Option<String>,
    /// graph6 string.
    #[arg(long)]
    g6: Option<String>,
    /// File holding an edge list, or graph6 if the name ends in .g6.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Common {
    /// q for the rationals, or a prime p.
    #[arg(long, default_value = "q")]
    field: String,
    /// table, csv or st (structured text).
    #[arg(long, default_value = "table")]
    out: String,
    #[arg(long)]
    workers: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Formula,
    Witnesses,
    Enumerate,
    HkSubspace,
}

/// What to run, after validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Task {
    Betti { graph: Graph },
    ConeDim { n: usize, h: Option<usize>, method: MethodArg },
    Verify { max_n: usize },
    Hk { graph: Graph, max_j: Option<u32> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub task: Task,
    pub field: FieldSpec,
    pub out: OutputFormat,
    pub workers: usize,
    pub cache_dir: Option<PathBuf>,
    pub early_stop: bool,
    pub dedupe: bool,
}

/// Text to print and the exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub code: i32,
}

fn read_graph(src: GraphSource) -> Result<Graph, AppError> {
    if let Some(text) = src.graph {
        return Ok(parse_edge_list(&text)?);
    }
    if let Some(text) = src.g6 {
        return Ok(parse_graph6(&text)?);
    }
    let path = src.file.ok_or_else(|| AppError::InvalidArgument("no graph given".into()))?;
    let text = std::fs::read_to_string(&path)?;
    if path.extension().is_some_and(|e| e == "g6") {
        Ok(parse_graph6(&text)?)
    } else {
        Ok(parse_edge_list(&text)?)
    }
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<RunConfig, AppError> {
        let (task, common, cache_dir, early_stop, dedupe) = match cli.command {
            Command::Betti { source, common } => (Task::Betti { graph: read_graph(source)? }, common, None, false, false),
            Command::ConeDim {
                n,
                height,
                method,
                dedupe,
                early_stop,
                cache_dir,
                common,
            } => (Task::ConeDim { n, h: height, method }, common, cache_dir, early_stop, dedupe),
            Command::Verify { max_n, dedupe, common } => (Task::Verify { max_n }, common, None, false, dedupe),
            Command::Hk { source, max_j, common } => (
                Task::Hk {
                    graph: read_graph(source)?,
                    max_j,
                },
                common,
                None,
                false,
                false,
            ),
        };
        let workers = common
            .workers
            .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
        let config = RunConfig {
            task,
            field: parse_field(&common.field)?,
            out: common.out.parse().map_err(AppError::InvalidArgument)?,
            workers,
            cache_dir,
            early_stop,
            dedupe,
        };
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<(), AppError> {
        let bad = |m: String| Err(AppError::InvalidArgument(m));
        if self.workers == 0 {
            return bad("--workers must be at least 1".into());
        }
        match &self.task {
            Task::ConeDim { n, h, method } => {
                if *n == 0 {
                    return bad("-n must be at least 1".into());
                }
                if *h == Some(0) {
                    return bad("--height 0 is not supported: edgeless graphs only give the zero diagram, \
                        while h(n-h-1)+1 evaluates to 1 at h = 0"
                        .into());
                }
                if let Some(h) = h {
                    if h >= n {
                        return bad(format!("--height must be below n, got {h} with n = {n}"));
                    }
                }
                if (self.early_stop || self.dedupe) && *method != MethodArg::Enumerate {
                    return bad("--early-stop and --dedupe only apply to --method enumerate".into());
                }
            }
            Task::Verify { max_n } => {
                if !(2..=7).contains(max_n) {
                    return bad(format!("--max-n must lie in 2..=7, got {max_n}"));
                }
            }
            _ => {}
        }
        Ok(())
    }
}

fn render_report(r: &ConeReport, out: OutputFormat) -> Result<String, AppError> {
    match out {
        OutputFormat::Table => Ok(report_table(r)),
        OutputFormat::Csv => Ok(report_csv(r)),
        OutputFormat::StructuredText => report_to_string(r),
    }
}

fn cone_dim(config: &RunConfig, workers: &Workers, n: usize, h: Option<usize>, method: MethodArg) -> Result<ConeReport, AppError> {
    let field = config.field;
    let mut oracle = |g: &Graph| hochster_parallel(g, field, workers);
    let mut report = match method {
        MethodArg::Formula => formula_report(n, h)?,
        MethodArg::HkSubspace => {
            let h = h.ok_or_else(|| AppError::InvalidArgument("--method hk-subspace needs --height".into()))?;
            hk_subspace_report(n, h)?
        }
        MethodArg::Witnesses => match h {
            None => witnesses_cn(n, &mut oracle)?,
            Some(h) => witnesses_cnh(n, h, &mut oracle)?,
        },
        MethodArg::Enumerate => {
            let opts = EnumerationOptions {
                dedupe: config.dedupe,
                early_stop: config.early_stop,
                field,
                ..EnumerationOptions::new(n, h)
            };
            if let Err(e @ betti_cone_core::Error::Capacity { .. }) = opts.graph_count() {
                return Err(AppError::Capacity(format!(
                    "{e}; use --method witnesses for a certified lower bound, or --early-stop (n <= 11)"
                )));
            }
            let cache = Cache::resolve(config.cache_dir.as_deref());
            if let Some(hit) = cache.as_ref().map(|c| c.load(n, h, field)).transpose()?.flatten() {
                return Ok(hit);
            }
            let report = enumerate_parallel(&opts, workers)?;
            if let Some(c) = &cache {
                c.store(&report)?;
            }
            report
        }
    };
    report.field = field;
    Ok(report)
}

/// Runs a validated configuration.
pub fn run(config: &RunConfig) -> Result<Outcome, AppError> {
    let workers = Workers::new(config.workers)?;
    let ok = |text: String| Ok(Outcome { text, code: exit::SUCCESS });
    match &config.task {
        Task::Betti { graph } => {
            let b = hochster_parallel(graph, config.field, &workers)?;
            match config.out {
                OutputFormat::Table => ok(format!(
                    "graph: {}\nfield: {}\n{}canonical: {}\n",
                    inline_edge_list(graph),
                    config.field,
                    diagram_table(&b, graph.n()),
                    b.canonical_string()
                )),
                OutputFormat::Csv => ok(diagram_csv(&b)),
                OutputFormat::StructuredText => ok(diagram_to_string(graph, &b, config.field)?),
            }
        }
        Task::ConeDim { n, h, method } => {
            let report = cone_dim(config, &workers, *n, *h, *method)?;
            ok(render_report(&report, config.out)?)
        }
        Task::Verify { max_n } => {
            let opts = SuiteOptions {
                max_n: *max_n,
                dedupe: config.dedupe,
                field: config.field,
            };
            let checks = run_suite(&opts, &workers);
            let code = if checks.iter().all(|c| c.passed) { exit::SUCCESS } else { exit::VERIFICATION };
            Ok(Outcome { text: render(&checks), code })
        }
        Task::Hk { graph, max_j } => {
            let b = hochster_parallel(graph, config.field, &workers)?;
            let hk = hk_vector(&b, max_j.unwrap_or(graph.n() as u32))?;
            ok(hk_table(graph, graph.height(), &hk.values))
        }
    }
}
