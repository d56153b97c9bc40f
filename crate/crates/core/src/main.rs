use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use aec_core::bench;
use aec_core::color::PartialEdgeColoring;
use aec_core::driver::{color_connected_6_with, color_graph_7_with, DriverOptions};
use aec_core::error::Error;
use aec_core::extend::AssertLevel;
use aec_core::gen::{generate, GeneratorSpec};
use aec_core::graph::{parse_edge_list, write_edge_list, Graph};
use aec_core::oracle;
use aec_core::trace;

const EXIT_FAIL: u8 = 1;
const EXIT_PRECONDITION: u8 = 2;
const EXIT_INTERNAL: u8 = 3;
const EXIT_USAGE: u8 = 64;
const EXIT_DATA: u8 = 65;
const EXIT_IO: u8 = 66;

/// Acyclic edge coloring for graphs of maximum degree 4.
#[derive(Parser)]
#[command(name = "aec", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Color an edge list and write `u v color` lines.
    Color {
        file: PathBuf,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u8).range(6..=7))]
        palette: u8,
        /// Write the move trace here.
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Re-verify acyclicity after every move.
        #[arg(long)]
        debug_asserts: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that a coloring is total, proper and acyclic.
    Verify { graph: PathBuf, coloring: PathBuf },
    /// Exact acyclic chromatic index of a small graph, as JSON.
    Exact {
        file: PathBuf,
        #[arg(long, default_value_t = 7)]
        kmax: u8,
        /// Refuse graphs with more edges than this.
        #[arg(long, default_value_t = oracle::DEFAULT_EDGE_LIMIT)]
        limit: usize,
    },
    /// Generate a graph, e.g. `random_valid(100,199,7)`.
    Gen {
        spec: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-apply a trace and verify the result.
    Replay {
        graph: PathBuf,
        trace: PathBuf,
        /// Also require the result to equal this coloring.
        #[arg(long)]
        expect: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Color a grid of generated instances and print CSV.
    Bench {
        /// Comma-separated family names.
        #[arg(long, value_delimiter = ',', default_value = "random_valid")]
        families: Vec<String>,
        /// Comma-separated vertex counts.
        #[arg(long, value_delimiter = ',', default_value = "100,1000,10000")]
        sizes: Vec<usize>,
        /// Comma-separated seeds, or a range `a..b`.
        #[arg(long, default_value = "0..3")]
        seeds: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// A failure with its exit code.
struct Fail(u8, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::DegreeViolation(_)
            | Error::Disconnected
            | Error::PreconditionViolated(_)
            | Error::TooLarge { .. }
            | Error::InfeasibleSpec(_) => EXIT_PRECONDITION,
            Error::Parse { .. }
            | Error::DuplicateEdge(..)
            | Error::SelfLoop(_)
            | Error::UnknownEdge(_)
            | Error::UnknownVertex(_) => EXIT_DATA,
            Error::Replay { .. } | Error::Infeasible(_) => EXIT_FAIL,
            _ => EXIT_INTERNAL,
        };
        Fail(code, e.to_string())
    }
}

type Res<T = ()> = Result<T, Fail>;

fn read(path: &Path) -> Res<String> {
    fs::read_to_string(path).map_err(|e| Fail(EXIT_IO, format!("{}: {e}", path.display())))
}

fn write_or_print(path: Option<&Path>, text: &str) -> Res {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Fail(EXIT_IO, format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_graph(path: &Path) -> Res<Graph> {
    let text = read(path)?;
    parse_edge_list(&text).map_err(|e| {
        let Fail(code, msg) = Fail::from(e);
        Fail(code, format!("{}: {msg}", path.display()))
    })
}

fn load_coloring(g: &Graph, path: &Path) -> Res<PartialEdgeColoring> {
    let text = read(path)?;
    PartialEdgeColoring::parse_text(g, &text)
        .map_err(|e| Fail(EXIT_DATA, format!("{}: {e}", path.display())))
}

fn parse_seeds(s: &str) -> Res<Vec<u64>> {
    let bad = || Fail(EXIT_USAGE, format!("bad --seeds {s:?}"));
    if let Some((a, b)) = s.split_once("..") {
        let a: u64 = a.trim().parse().map_err(|_| bad())?;
        let b: u64 = b.trim().parse().map_err(|_| bad())?;
        return Ok((a..b).collect());
    }
    s.split(',')
        .map(|t| t.trim().parse().map_err(|_| bad()))
        .collect()
}

#[derive(Serialize)]
struct ExactJson {
    n: usize,
    m: usize,
    a_prime: Option<u8>,
    nodes: u64,
}

fn run(cmd: Cmd) -> Res {
    match cmd {
        Cmd::Color {
            file,
            palette,
            trace,
            debug_asserts,
            out,
        } => {
            let g = load_graph(&file)?;
            let mut opts = DriverOptions {
                trace: trace.is_some(),
                ..DriverOptions::default()
            };
            if debug_asserts {
                opts.extend.assert_level = AssertLevel::Debug;
            }
            let report = if palette == 6 {
                color_connected_6_with(&g, &opts)?
            } else {
                color_graph_7_with(&g, &opts)?
            };
            if let Err(v) = report.coloring.verify_acyclic(&g) {
                return Err(Fail(
                    EXIT_INTERNAL,
                    format!("output failed verification: {v}"),
                ));
            }
            if let Some(p) = &trace {
                let mut text = report.trace.join("\n");
                text.push('\n');
                write_or_print(Some(p), &text)?;
            }
            write_or_print(out.as_deref(), &report.coloring.to_text(&g))?;
            let s = &report.stats;
            eprintln!(
                "colored {} edges with {} colors ({} direct, {} extensions, {} moves)",
                g.edge_count(),
                report.coloring.colors_used(&g).len(),
                s.direct,
                s.extensions,
                s.moves
            );
        }
        Cmd::Verify { graph, coloring } => {
            let g = load_graph(&graph)?;
            let c = load_coloring(&g, &coloring)?;
            if let Some(e) = g.edges().find(|&e| c.get(e).is_none()) {
                let (u, v) = g.endpoints(e);
                return Err(Fail(EXIT_FAIL, format!("edge {u}-{v} is uncolored")));
            }
            c.verify_acyclic(&g)
                .map_err(|v| Fail(EXIT_FAIL, v.to_string()))?;
            println!("ok: {} colors", c.colors_used(&g).len());
        }
        Cmd::Exact { file, kmax, limit } => {
            let g = load_graph(&file)?;
            let (a_prime, nodes) = match oracle::exact_index_limited(&g, kmax, limit) {
                Ok(r) => (Some(r.exact_index), r.nodes_explored),
                Err(Error::Infeasible(_)) => (None, 0),
                Err(e) => return Err(e.into()),
            };
            let json = ExactJson {
                n: g.vertex_count(),
                m: g.edge_count(),
                a_prime,
                nodes,
            };
            println!("{}", serde_json::to_string(&json).expect("plain struct"));
            if a_prime.is_none() {
                return Err(Fail(
                    EXIT_FAIL,
                    format!("no acyclic coloring with {kmax} colors"),
                ));
            }
        }
        Cmd::Gen { spec, out } => {
            let spec: GeneratorSpec = spec.parse()?;
            let g = generate(&spec)?;
            write_or_print(out.as_deref(), &write_edge_list(&g))?;
        }
        Cmd::Replay {
            graph,
            trace: trace_path,
            expect,
            out,
        } => {
            let g = load_graph(&graph)?;
            let text = read(&trace_path)?;
            let c = trace::replay(&g, &text)?;
            if let Some(p) = expect {
                let want = load_coloring(&g, &p)?;
                if want != c {
                    return Err(Fail(EXIT_FAIL, "replayed coloring differs".into()));
                }
            }
            if out.is_some() {
                write_or_print(out.as_deref(), &c.to_text(&g))?;
            }
            eprintln!("ok: {} colors", c.colors_used(&g).len());
        }
        Cmd::Bench {
            families,
            sizes,
            seeds,
            out,
        } => {
            let seeds = parse_seeds(&seeds)?;
            let rows = bench::run(&families, &sizes, &seeds)?;
            write_or_print(out.as_deref(), &bench::to_csv(&rows))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail(code, msg)) => {
            eprintln!("aec: {msg}");
            ExitCode::from(code)
        }
    }
}
