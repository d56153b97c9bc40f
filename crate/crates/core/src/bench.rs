//! Benchmark harness: colors a grid of generated instances in parallel and
//! reports one CSV row per instance.

use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;

use crate::driver::{color_connected_6_with, color_graph_7_with, DriverOptions};
use crate::error::{Error, Result};
use crate::gen::{generate, GeneratorSpec};
use crate::graph::Graph;
use crate::oracle;

pub const CSV_HEADER: &str = "family,n,m,colors,moves,nodes,ms";

/// Instances with at most this many edges also get an exact oracle run.
pub const ORACLE_EDGES: usize = 16;

pub const FAMILIES: &[&str] = &[
    "random_valid",
    "subcubic_random",
    "random_4regular",
    "cycle",
    "circulant",
];

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub family: String,
    pub n: usize,
    pub m: usize,
    pub colors: usize,
    pub moves: usize,
    /// Oracle search nodes, for instances small enough to solve exactly.
    pub nodes: Option<u64>,
    pub ms: f64,
}

/// Maps a family name and size to a concrete spec. Random families use the
/// densest edge count the main bound allows.
pub fn family_spec(family: &str, n: usize, seed: u64) -> Result<GeneratorSpec> {
    Ok(match family {
        "random_valid" => GeneratorSpec::RandomValid {
            n,
            m: (2 * n).saturating_sub(1),
            seed,
        },
        "subcubic_random" => GeneratorSpec::SubcubicRandom {
            n,
            m: n + n / 4,
            seed,
        },
        "random_4regular" => GeneratorSpec::Random4Regular { n, seed },
        "cycle" => GeneratorSpec::Cycle(n),
        "circulant" => GeneratorSpec::Circulant(n, vec![1, 2]),
        _ => {
            return Err(Error::InfeasibleSpec(format!(
                "unknown bench family {family:?}"
            )))
        }
    })
}

/// Six colors when the six-color bound applies, otherwise seven.
pub fn color_auto(g: &Graph, opts: &DriverOptions) -> Result<crate::driver::DriverReport> {
    if g.is_connected() && g.edge_count() < 2 * g.vertex_count() {
        color_connected_6_with(g, opts)
    } else {
        color_graph_7_with(g, opts)
    }
}

fn run_one(family: &str, n: usize, seed: u64) -> Result<BenchRow> {
    let g = generate(&family_spec(family, n, seed)?)?;
    let start = Instant::now();
    let report = color_auto(&g, &DriverOptions::default())?;
    let ms = start.elapsed().as_secs_f64() * 1e3;
    report
        .coloring
        .verify_acyclic(&g)
        .map_err(|v| Error::internal("bench", v.to_string()))?;
    let nodes = if g.edge_count() <= ORACLE_EDGES {
        Some(oracle::exact_index(&g, 7)?.nodes_explored)
    } else {
        None
    };
    Ok(BenchRow {
        family: family.to_string(),
        n: g.vertex_count(),
        m: g.edge_count(),
        colors: report.coloring.colors_used(&g).len(),
        moves: report.stats.moves,
        nodes,
        ms,
    })
}

/// Runs every (family, size, seed) combination, one instance per rayon
/// task. Rows come back in input order.
pub fn run(families: &[String], sizes: &[usize], seeds: &[u64]) -> Result<Vec<BenchRow>> {
    let jobs: Vec<(&str, usize, u64)> = families
        .iter()
        .flat_map(|f| {
            sizes
                .iter()
                .flat_map(move |&n| seeds.iter().map(move |&s| (f.as_str(), n, s)))
        })
        .collect();
    jobs.par_iter().map(|&(f, n, s)| run_one(f, n, s)).collect()
}

pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut out = String::new();
    writeln!(out, "{CSV_HEADER}").unwrap();
    for r in rows {
        let nodes = r.nodes.map(|k| k.to_string()).unwrap_or_default();
        writeln!(
            out,
            "{},{},{},{},{},{},{:.3}",
            r.family, r.n, r.m, r.colors, r.moves, nodes, r.ms
        )
        .unwrap();
    }
    out
}
