//! Replaying driver traces.
//!
//! A trace is a line log, one step per line, with an optional `# tag`:
//!
//! ```text
//! PALETTE k              first line; k is 6 or 7
//! REMOVE e               edge left out until the end (4-regular components)
//! BLOCK k                start block k; ids below refer to its own graph,
//!                        which starts with all its edges removed
//! ASSIGN e c             color an edge, restoring it first if removed
//! PAD u p e              pendant vertex p joined to u by edge e
//! STRIP                  delete the pendants of the last PAD group
//! RECOLOR e old new
//! EXCHANGE u i j         swap the colors of ui and uj
//! MERGE k c1 .. c6       rename block k's colors and copy them over
//! ASSIGN e c             after the merges: color a removed edge
//! ```
//!
//! Blocks are numbered as by [`blocks_of_forest`] on the graph without the
//! removed edges, and a block graph is built with [`Graph::subgraph`].

use crate::color::{Color, ColorMap, PartialEdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{blocks_of_forest, BlockDecomposition, EdgeId, Graph, VertexId};
use crate::moves::{Move, MoveKind};

struct Block {
    graph: Graph,
    edges: Vec<EdgeId>,
    coloring: PartialEdgeColoring,
    pads: Vec<(VertexId, EdgeId)>,
}

enum Stage {
    Header,
    Removing,
    Blocks,
    Merging,
}

struct Replay<'a> {
    g: &'a Graph,
    h: Graph,
    palette: u8,
    out: PartialEdgeColoring,
    stage: Stage,
    dec: Option<BlockDecomposition>,
    blocks: Vec<Block>,
    merged: Vec<bool>,
}

fn fail(line: usize, msg: impl Into<String>) -> Error {
    Error::Replay {
        line,
        msg: msg.into(),
    }
}

fn nums<const N: usize>(line: usize, args: &[&str]) -> Result<[u32; N]> {
    if args.len() != N {
        return Err(fail(
            line,
            format!("expected {N} arguments, got {}", args.len()),
        ));
    }
    let mut out = [0u32; N];
    for (slot, a) in out.iter_mut().zip(args) {
        *slot = a
            .parse()
            .map_err(|_| fail(line, format!("not a number: {a:?}")))?;
    }
    Ok(out)
}

fn color(line: usize, v: u32, palette: u8) -> Result<Color> {
    u8::try_from(v)
        .ok()
        .filter(|&k| k <= palette)
        .and_then(Color::new)
        .ok_or_else(|| fail(line, format!("color {v} outside the palette")))
}

impl Replay<'_> {
    fn block(&mut self, line: usize) -> Result<&mut Block> {
        match self.stage {
            Stage::Blocks => self
                .blocks
                .last_mut()
                .ok_or_else(|| fail(line, "no open block")),
            _ => Err(fail(line, "step outside a block")),
        }
    }

    fn step(&mut self, line: usize, op: &str, args: &[&str]) -> Result<()> {
        let wrap = |e: Error| fail(line, e.to_string());
        match (op, &self.stage) {
            ("PALETTE", Stage::Header) => {
                let [k] = nums::<1>(line, args)?;
                self.palette = k as u8;
                self.out = PartialEdgeColoring::new(self.palette).map_err(wrap)?;
                self.stage = Stage::Removing;
            }
            (_, Stage::Header) => return Err(fail(line, "trace must start with PALETTE")),
            ("REMOVE", Stage::Removing) => {
                let [e] = nums::<1>(line, args)?;
                self.h.remove_edge(EdgeId(e)).map_err(wrap)?;
            }
            ("BLOCK", Stage::Removing | Stage::Blocks) => {
                let [k] = nums::<1>(line, args)?;
                self.finish_block(line)?;
                let dec = self.dec.get_or_insert_with(|| blocks_of_forest(&self.h));
                if k as usize != self.blocks.len() || k as usize >= dec.blocks.len() {
                    return Err(fail(line, format!("unexpected block {k}")));
                }
                let (mut graph, _, edges) = self.h.subgraph(&dec.blocks[k as usize]);
                let all: Vec<EdgeId> = graph.edges().collect();
                for e in all {
                    graph.remove_edge(e).map_err(wrap)?;
                }
                self.blocks.push(Block {
                    graph,
                    edges,
                    coloring: PartialEdgeColoring::new(6).map_err(wrap)?,
                    pads: Vec::new(),
                });
                self.stage = Stage::Blocks;
            }
            ("ASSIGN", Stage::Blocks) => {
                let [e, k] = nums::<2>(line, args)?;
                let k = color(line, k, 6)?;
                let b = self.block(line)?;
                let e = EdgeId(e);
                if !b.graph.contains_edge(e) {
                    b.graph.restore_edge(e).map_err(wrap)?;
                }
                b.coloring.assign(&b.graph, e, k).map_err(wrap)?;
            }
            ("PAD", Stage::Blocks) => {
                let [u, p, e] = nums::<3>(line, args)?;
                let b = self.block(line)?;
                let got_p = b.graph.add_vertex();
                let got_e = b.graph.add_edge(VertexId(u), got_p).map_err(wrap)?;
                if (got_p, got_e) != (VertexId(p), EdgeId(e)) {
                    return Err(fail(line, format!("pendant ids are {got_p} {got_e}")));
                }
                b.pads.push((got_p, got_e));
            }
            ("STRIP", Stage::Blocks) => {
                let b = self.block(line)?;
                while let Some((p, e)) = b.pads.pop() {
                    b.coloring.set_unchecked(e, None);
                    b.graph.delete_edge(e).map_err(wrap)?;
                    b.graph.remove_vertex(p).map_err(wrap)?;
                }
            }
            ("RECOLOR", Stage::Blocks) => {
                let [e, old, new] = nums::<3>(line, args)?;
                let kind = MoveKind::Recolor {
                    edge: EdgeId(e),
                    old: color(line, old, 6)?,
                    new: color(line, new, 6)?,
                };
                let b = self.block(line)?;
                Move::new(kind, "")
                    .apply(&b.graph, &mut b.coloring)
                    .map_err(wrap)?;
            }
            ("EXCHANGE", Stage::Blocks) => {
                let [u, i, j] = nums::<3>(line, args)?;
                let b = self.block(line)?;
                let mv = Move::exchange_from_live(
                    &b.graph,
                    &b.coloring,
                    VertexId(u),
                    VertexId(i),
                    VertexId(j),
                    "",
                )
                .map_err(wrap)?;
                mv.apply(&b.graph, &mut b.coloring).map_err(wrap)?;
            }
            ("MERGE", Stage::Blocks | Stage::Merging) => {
                if let Stage::Blocks = self.stage {
                    self.finish_block(line)?;
                    let total = self.dec.as_ref().map_or(0, |d| d.blocks.len());
                    if self.blocks.len() != total {
                        return Err(fail(line, format!("{total} blocks expected")));
                    }
                    self.merged = vec![false; total];
                    self.stage = Stage::Merging;
                }
                let (k, rest) = args
                    .split_first()
                    .ok_or_else(|| fail(line, "missing block index"))?;
                let [k] = nums::<1>(line, &[k])?;
                let images = nums::<6>(line, rest)?;
                let images: Vec<u8> = images.iter().map(|&v| v as u8).collect();
                let map = ColorMap::from_images(&images)
                    .ok_or_else(|| fail(line, "not a permutation of 1..6"))?;
                let k = k as usize;
                if self.merged.get(k) != Some(&false) {
                    return Err(fail(line, format!("block {k} merged twice or unknown")));
                }
                self.merged[k] = true;
                let b = &self.blocks[k];
                for (i, &ge) in b.edges.iter().enumerate() {
                    let local = b
                        .coloring
                        .get(EdgeId(i as u32))
                        .ok_or_else(|| fail(line, format!("block {k} edge {i} uncolored")))?;
                    self.out
                        .assign(&self.h, ge, map.apply(local))
                        .map_err(wrap)?;
                }
            }
            ("ASSIGN", Stage::Removing | Stage::Merging) => {
                let [e, k] = nums::<2>(line, args)?;
                let k = color(line, k, self.palette)?;
                let e = EdgeId(e);
                if self.h.contains_edge(e) {
                    return Err(fail(line, format!("{e} was not removed")));
                }
                self.out.assign(self.g, e, k).map_err(wrap)?;
            }
            _ => return Err(fail(line, format!("unexpected {op}"))),
        }
        Ok(())
    }

    fn finish_block(&self, line: usize) -> Result<()> {
        if let Some(b) = self.blocks.last() {
            if !b.pads.is_empty() {
                return Err(fail(line, "block closed with pendants in place"));
            }
            if b.graph.edge_count() != b.edges.len() || !b.coloring.is_total(&b.graph) {
                return Err(fail(line, "block closed before all its edges were colored"));
            }
        }
        Ok(())
    }
}

/// Rebuilds the final coloring of `g` from a trace, checking every step,
/// and verifies that it is total and acyclic.
pub fn replay(g: &Graph, text: &str) -> Result<PartialEdgeColoring> {
    let mut r = Replay {
        g,
        h: g.clone(),
        palette: 6,
        out: PartialEdgeColoring::new(6)?,
        stage: Stage::Header,
        dec: None,
        blocks: Vec::new(),
        merged: Vec::new(),
    };
    let mut last = 0;
    for (i, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        last = i + 1;
        let mut words = body.split_whitespace();
        let op = words.next().expect("non-empty line");
        let args: Vec<&str> = words.collect();
        r.step(last, op, &args)?;
    }
    if let Stage::Blocks = r.stage {
        return Err(fail(last, "trace ends before the merges"));
    }
    if r.merged.iter().any(|m| !m) {
        return Err(fail(last, "some block was never merged"));
    }
    if !r.out.is_total(g) {
        return Err(fail(last, "final coloring is not total"));
    }
    r.out
        .verify_acyclic(g)
        .map_err(|v| fail(last, format!("final coloring: {v}")))?;
    Ok(r.out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::driver::{color_connected_6_with, color_graph_7_with, DriverOptions};
    use crate::gen::{generate, GeneratorSpec};

    fn traced() -> DriverOptions {
        DriverOptions {
            trace: true,
            ..DriverOptions::default()
        }
    }

    #[test]
    fn replays_driver_output() {
        for spec in [
            "cycle(4)",
            "complete_minus_edge(5)",
            "random_valid(40,79,7)",
        ] {
            let g = generate(&spec.parse::<GeneratorSpec>().unwrap()).unwrap();
            let r = color_connected_6_with(&g, &traced()).unwrap();
            let text = r.trace.join("\n");
            assert_eq!(replay(&g, &text).unwrap(), r.coloring, "{spec}");
        }
    }

    #[test]
    fn replays_seven_color_runs() {
        let g = generate(&GeneratorSpec::Complete(5)).unwrap();
        let r = color_graph_7_with(&g, &traced()).unwrap();
        assert!(r.trace.iter().any(|l| l.starts_with("REMOVE")));
        assert_eq!(replay(&g, &r.trace.join("\n")).unwrap(), r.coloring);
    }

    #[test]
    fn tampering_is_caught() {
        let g = generate(&GeneratorSpec::Cycle(4)).unwrap();
        let r = color_connected_6_with(&g, &traced()).unwrap();
        let first = r
            .trace
            .iter()
            .position(|l| l.starts_with("ASSIGN"))
            .unwrap();
        let mut doubled = r.trace.clone();
        doubled.insert(first, r.trace[first].clone());
        assert!(replay(&g, &doubled.join("\n")).is_err());
        let truncated: Vec<&str> = r.trace.iter().map(String::as_str).take(3).collect();
        assert!(matches!(
            replay(&g, &truncated.join("\n")),
            Err(Error::Replay { .. })
        ));
        assert!(replay(&g, "BLOCK 0").is_err());
    }
}
