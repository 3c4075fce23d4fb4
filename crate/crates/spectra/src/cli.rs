//! Argument parsing and command dispatch for the `spectra` binary.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use spectra_core::error::VerifyError;
use spectra_core::families::{
    attach_leaf, attach_path, complete_multipartite, construction_h, cycle_graph, path_graph, theta_graph,
};
use spectra_core::mis::{m_class_with_cap, spectrum_with_cap};
use spectra_core::search::SearchLimits;
use spectra_core::verify::{
    check_construction_h, check_cycle_plus_leaf, check_large_girth_witness, check_leftover,
    check_leftover_components_with, check_path_cycle_spectra, CheckReport, ComponentPlacement,
};
use spectra_core::{graph6, Graph, VertexSet};

use crate::io::read_graph6_file;
use crate::parallel::{default_workers, Engine};
use crate::report::{self, ClassRow, ConstructDoc, Format, HuntDoc, SpectrumRow};

#[derive(Debug, Parser)]
#[command(name = "spectra", version, about = "Independence spectra of small graphs")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads for searches.
    #[arg(long, global = true, env = "SPECTRA_WORKERS", value_parser = clap::value_parser!(u64).range(1..))]
    pub workers: Option<u64>,
    /// Generation node budget per order.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_nodes: Option<u64>,
    /// Maximal independent set budget per graph.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_mis: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the spectrum and its size.
    Spectrum(GraphInput),
    /// Print the full classification of a graph.
    Classify(GraphInput),
    /// Build a graph and print it as graph6.
    Construct(ConstructArgs),
    /// Run a verification check.
    Verify {
        #[command(subcommand)]
        check: VerifyCommand,
    },
    /// Exhaustive searches over generated or supplied graphs.
    Search {
        #[command(subcommand)]
        task: SearchCommand,
    },
}

#[derive(Debug, Args)]
pub struct GraphInput {
    #[command(flatten)]
    pub source: GraphSource,
    /// Stop at the first malformed line of --file.
    #[arg(long)]
    pub strict: bool,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GraphSource {
    #[arg(long, value_name = "N")]
    pub cycle: Option<usize>,
    #[arg(long, value_name = "N")]
    pub path: Option<usize>,
    /// Part sizes, comma separated.
    #[arg(long, value_delimiter = ',', value_name = "A,B,..")]
    pub multipartite: Option<Vec<usize>>,
    #[arg(long, value_name = "STRING")]
    pub graph6: Option<String>,
    /// graph6 file, one graph per line.
    #[arg(long, value_name = "PATH")]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Family {
    /// Cycle with a leaf on every vertex and a pendant path with leaves.
    #[value(name = "H", alias = "h")]
    H,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[command(flatten)]
    pub shape: Shape,
    /// Girth of the construction.
    #[arg(long, requires = "family")]
    pub g: Option<usize>,
    /// Spectrum size of the construction.
    #[arg(long, requires = "family")]
    pub t: Option<usize>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Shape {
    #[arg(long, value_enum, requires_all = ["g", "t"])]
    pub family: Option<Family>,
    #[arg(long, value_name = "N")]
    pub cycle_plus_leaf: Option<usize>,
    /// Cycle order and pendant path order.
    #[arg(long, value_delimiter = ',', num_args = 1, value_name = "N,K")]
    pub cycle_plus_path: Option<Vec<usize>>,
}

/// An inclusive range written `A` or `A-B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span(pub usize, pub usize);

fn parse_span(s: &str) -> Result<Span, String> {
    let num = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("{x:?}: {e}"));
    let span = match s.split_once('-') {
        Some((a, b)) => Span(num(a)?, num(b)?),
        None => {
            let a = num(s)?;
            Span(a, a)
        }
    };
    if span.0 > span.1 {
        return Err(format!("empty range {s}"));
    }
    Ok(span)
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// Spectra of cycles and paths against their closed forms.
    #[command(visible_alias = "prop1")]
    PathCycle {
        #[arg(long, default_value_t = 30)]
        n_max: usize,
    },
    /// Spectrum of a cycle with one leaf.
    CycleLeaf {
        /// Cycle orders, `N` or `A-B`.
        #[arg(long, value_parser = parse_span, default_value = "3-24")]
        n: Span,
    },
    /// Order, girth and spectrum of the leafy construction.
    Construction {
        #[arg(long, value_parser = parse_span, default_value = "3-8")]
        g: Span,
        #[arg(long, value_parser = parse_span, default_value = "2-4")]
        t: Span,
    },
    /// Spectra of the fixed leftover components.
    Components {
        #[arg(long, default_value_t = 6)]
        twelve_distance: usize,
        #[arg(long, default_value_t = 9)]
        nineteen_distance: usize,
    },
    /// Classes of the components left after removing N[I].
    Leftover {
        #[arg(long)]
        graph6: String,
        /// Members of I, comma separated.
        #[arg(long, value_delimiter = ',', default_value = "")]
        set: Vec<String>,
    },
    /// Independent set and leftover path for a large-girth leafless graph.
    Witness {
        #[arg(long)]
        t: usize,
        #[command(flatten)]
        host: WitnessHost,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct WitnessHost {
    #[arg(long, value_name = "N")]
    pub cycle: Option<usize>,
    /// Arm lengths of a theta graph.
    #[arg(long, value_delimiter = ',', num_args = 1, value_name = "A,B,C")]
    pub theta: Option<Vec<usize>>,
    #[arg(long, value_name = "STRING")]
    pub graph6: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum SearchCommand {
    /// Leafless connected members of M_t with exactly the given girth.
    TableCell {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        girth: usize,
        #[arg(long)]
        n_max: usize,
        /// Classify graphs from this graph6 file instead of generating.
        #[arg(long, value_name = "PATH")]
        input: Option<PathBuf>,
        #[arg(long)]
        strict: bool,
    },
    /// Non-cycle leafless members of M_t with exactly the given girth.
    HuntDelta {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        girth: usize,
        #[arg(long)]
        n_max: usize,
    },
}

enum Outcome {
    Pass,
    Fail,
}

/// Messages for exit status 2.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

/// Runs one invocation. Returns the process exit status: 0 on success, 1
/// when a check fails, 2 on usage or input errors.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                2
            } else {
                let _ = write!(out, "{}", e.render());
                0
            };
            return code;
        }
    };
    match dispatch(&cli, out, err) {
        Ok(Outcome::Pass) => 0,
        Ok(Outcome::Fail) => 1,
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn limits(cli: &Cli) -> SearchLimits {
    let d = SearchLimits::default();
    SearchLimits {
        max_nodes: cli.max_nodes.unwrap_or(d.max_nodes),
        max_mis: cli.max_mis.unwrap_or(d.max_mis),
    }
}

fn engine(cli: &Cli) -> Result<Engine, Failure> {
    let workers = cli.workers.map_or_else(default_workers, |w| w as usize);
    Ok(Engine::new(workers, limits(cli))?)
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<Outcome, Failure> {
    let text = match &cli.command {
        Command::Spectrum(input) => {
            let (graphs, labelled) = load_graphs(input, err)?;
            let cap = limits(cli).max_mis;
            let specs = engine(cli)?.install(|| {
                graphs
                    .par_iter()
                    .map(|g| spectrum_with_cap(g, cap))
                    .collect::<Result<Vec<_>, _>>()
            })?;
            let rows = graphs
                .iter()
                .zip(specs)
                .map(|(g, s)| SpectrumRow {
                    graph6: graph6::encode(g),
                    t: s.class_size(),
                    spectrum: s,
                })
                .collect();
            report::spectra(cli.format, rows, labelled)
        }
        Command::Classify(input) => {
            let (graphs, _) = load_graphs(input, err)?;
            let cap = limits(cli).max_mis;
            let reports = engine(cli)?.install(|| {
                graphs
                    .par_iter()
                    .map(|g| m_class_with_cap(g, cap))
                    .collect::<Result<Vec<_>, _>>()
            })?;
            let rows = graphs
                .iter()
                .zip(reports)
                .map(|(g, report)| ClassRow {
                    graph6: graph6::encode(g),
                    report,
                })
                .collect();
            report::classes(cli.format, rows)
        }
        Command::Construct(args) => {
            let g = construct(args)?;
            report::construct(
                cli.format,
                &ConstructDoc {
                    graph6: graph6::encode(&g),
                    order: g.order(),
                    size: g.size(),
                },
            )
        }
        Command::Verify { check } => {
            let (name, reports) = verify(check)?;
            let pass = reports.iter().all(|r| r.pass);
            out.write_all(report::checks(cli.format, name, &reports).as_bytes())?;
            return Ok(if pass { Outcome::Pass } else { Outcome::Fail });
        }
        Command::Search { task } => match task {
            SearchCommand::TableCell {
                t,
                girth,
                n_max,
                input,
                strict,
            } => {
                let engine = engine(cli)?;
                let cell = match input {
                    None => engine.table_cell(*t, *girth, *n_max, None)?,
                    Some(path) => {
                        let graphs = read_file(path, *strict, err)?;
                        engine.table_cell(*t, *girth, *n_max, Some(&graphs))?
                    }
                };
                out.write_all(report::table_cell(cli.format, &cell).as_bytes())?;
                return Ok(if cell.consistent { Outcome::Pass } else { Outcome::Fail });
            }
            SearchCommand::HuntDelta { t, girth, n_max } => {
                let found = engine(cli)?.hunt_delta(*t, *girth, *n_max)?;
                report::hunt(
                    cli.format,
                    &HuntDoc {
                        t: *t,
                        girth: *girth,
                        n_max: *n_max,
                        found,
                    },
                )
            }
        },
    };
    out.write_all(text.as_bytes())?;
    Ok(Outcome::Pass)
}

fn read_file(path: &Path, strict: bool, err: &mut dyn Write) -> Result<Vec<Graph>, Failure> {
    let batch = read_graph6_file(path, strict).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    for e in &batch.errors {
        writeln!(err, "warning: {}: skipped {e}", path.display())?;
    }
    Ok(batch.graphs)
}

/// The requested graphs, and whether they came from a file.
fn load_graphs(input: &GraphInput, err: &mut dyn Write) -> Result<(Vec<Graph>, bool), Failure> {
    let s = &input.source;
    let g = if let Some(n) = s.cycle {
        cycle_graph(n)?
    } else if let Some(n) = s.path {
        path_graph(n)?
    } else if let Some(parts) = &s.multipartite {
        complete_multipartite(parts)?
    } else if let Some(text) = &s.graph6 {
        graph6::decode(text)?
    } else if let Some(path) = &s.file {
        return Ok((read_file(path, input.strict, err)?, true));
    } else {
        unreachable!("clap requires one source")
    };
    Ok((vec![g], false))
}

fn construct(args: &ConstructArgs) -> Result<Graph, Failure> {
    if args.shape.family.is_some() {
        let (g, t) = (args.g.expect("required by clap"), args.t.expect("required by clap"));
        return Ok(construction_h(g, t)?);
    }
    if let Some(n) = args.shape.cycle_plus_leaf {
        return Ok(attach_leaf(&cycle_graph(n)?, 0)?);
    }
    match args.shape.cycle_plus_path.as_deref() {
        Some(&[n, k]) => Ok(attach_path(&cycle_graph(n)?, 0, k)?),
        Some(_) => Err(Failure("--cycle-plus-path takes N,K".into())),
        None => unreachable!("clap requires one shape"),
    }
}

fn verify(check: &VerifyCommand) -> Result<(&'static str, Vec<CheckReport>), Failure> {
    Ok(match check {
        VerifyCommand::PathCycle { n_max } => ("path-cycle", check_path_cycle_spectra(*n_max)?),
        VerifyCommand::CycleLeaf { n } => {
            let reports = (n.0..=n.1).map(check_cycle_plus_leaf).collect::<Result<_, _>>()?;
            ("cycle-leaf", reports)
        }
        VerifyCommand::Construction { g, t } => {
            let mut reports = Vec::new();
            for gi in g.0..=g.1 {
                for ti in t.0..=t.1 {
                    reports.push(check_construction_h(gi, ti)?);
                }
            }
            ("construction", reports)
        }
        VerifyCommand::Components {
            twelve_distance,
            nineteen_distance,
        } => {
            let place = ComponentPlacement {
                twelve_cycle: *twelve_distance,
                nineteen_cycle: *nineteen_distance,
            };
            ("components", check_leftover_components_with(place)?)
        }
        VerifyCommand::Leftover { graph6: text, set } => {
            let g = graph6::decode(text)?;
            let members = set
                .iter()
                .filter(|s| !s.trim().is_empty())
                .map(|s| s.trim().parse::<usize>())
                .collect::<Result<Vec<_>, _>>()?;
            let set = VertexSet::from_vertices(g.order(), members)?;
            ("leftover", vec![check_leftover(&g, &set)?])
        }
        VerifyCommand::Witness { t, host } => {
            let g = if let Some(n) = host.cycle {
                cycle_graph(n)?
            } else if let Some(arms) = &host.theta {
                let arms: [usize; 3] = arms
                    .as_slice()
                    .try_into()
                    .map_err(|_| Failure("--theta takes three arm lengths".into()))?;
                theta_graph(arms)?
            } else if let Some(text) = &host.graph6 {
                graph6::decode(text)?
            } else {
                unreachable!("clap requires one host")
            };
            let report = match check_large_girth_witness(&g, *t) {
                Ok(r) => r,
                Err(VerifyError::WitnessFailure(why)) => CheckReport::compare(
                    "witness",
                    format!("t={t} graph6={}", graph6::encode(&g)),
                    format!("path class >= {}", t + 1),
                    format!("no witness: {why}"),
                ),
                Err(e) => return Err(e.into()),
            };
            ("witness", vec![report])
        }
    })
}
