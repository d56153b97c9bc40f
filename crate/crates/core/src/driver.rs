//! Whole-graph coloring: split into blocks, strip each block edge by edge
//! from a vertex of smallest degree, then put the edges back in reverse
//! order, calling the extension engine whenever no color is directly valid.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::color::{Color, ColorMap, ColorSet, PartialEdgeColoring};
use crate::error::{Error, Result};
use crate::extend::{extend, AssertLevel, ExtendOptions};
use crate::graph::{
    blocks_of_forest, pad_for_extension, unpad, BlockDecomposition, EdgeId, Graph, VertexId,
};
use crate::paths::{cycle_through_edge, valid_between};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DriverOptions {
    pub extend: ExtendOptions,
    /// Collect trace lines in the report.
    pub trace: bool,
    /// Pad and run the extension engine for every edge, even when a color
    /// is valid straight away.
    pub always_extend: bool,
}

impl DriverOptions {
    pub fn debug() -> Self {
        DriverOptions {
            extend: ExtendOptions {
                assert_level: AssertLevel::Debug,
                ..ExtendOptions::default()
            },
            ..DriverOptions::default()
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DriverStats {
    /// Edges that had a valid color straight away.
    pub direct: usize,
    /// Edges that needed the extension engine.
    pub extensions: usize,
    pub moves: usize,
    pub max_moves: usize,
    /// Extension calls per case id (re-entries counted separately).
    pub cases: BTreeMap<&'static str, usize>,
    /// How often each engine step fired.
    pub steps: BTreeMap<&'static str, usize>,
}

#[derive(Debug, Clone)]
pub struct DriverReport {
    pub coloring: PartialEdgeColoring,
    pub trace: Vec<String>,
    pub stats: DriverStats,
}

/// Colors of one block, keyed by the edge ids of the whole graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockColoring {
    pub block: usize,
    pub colors: Vec<(EdgeId, Color)>,
}

/// Acyclic 6-coloring of a connected graph with `m <= 2n - 1`.
pub fn color_connected_6(g: &Graph) -> Result<PartialEdgeColoring> {
    Ok(color_connected_6_with(g, &DriverOptions::default())?.coloring)
}

pub fn color_connected_6_with(g: &Graph, opts: &DriverOptions) -> Result<DriverReport> {
    check_degree(g)?;
    if !g.is_connected() {
        return Err(Error::precondition("graph is not connected"));
    }
    let (n, m) = (g.vertex_count(), g.edge_count());
    if n > 0 && m > 2 * n - 1 {
        return Err(Error::precondition(format!(
            "m = {m} exceeds 2n - 1 = {}",
            2 * n - 1
        )));
    }
    let mut run = Run::new(*opts);
    run.line(|| "PALETTE 6".into());
    let coloring = run.color_forest(g)?;
    Ok(run.finish(coloring))
}

/// Acyclic coloring of any graph with maximum degree 4 using at most 7
/// colors. One edge of every 4-regular component gets color 7.
pub fn color_graph_7(g: &Graph) -> Result<PartialEdgeColoring> {
    Ok(color_graph_7_with(g, &DriverOptions::default())?.coloring)
}

pub fn color_graph_7_with(g: &Graph, opts: &DriverOptions) -> Result<DriverReport> {
    check_degree(g)?;
    let mut run = Run::new(*opts);
    run.line(|| "PALETTE 7".into());
    let mut h = g.clone();
    let mut removed = Vec::new();
    for comp in g.components() {
        let m: usize = comp.iter().map(|&v| g.degree(v)).sum::<usize>() / 2;
        if m == 2 * comp.len() {
            let e = g.incident_edges(comp[0])[0];
            h.remove_edge(e)?;
            removed.push(e);
            run.line(|| format!("REMOVE {}", e.0));
        }
    }
    let six = run.color_forest(&h)?;
    let mut c = PartialEdgeColoring::new(7)?;
    for e in h.edges() {
        c.set_unchecked(e, six.get(e));
    }
    let seven = Color::of(7);
    for &e in &removed {
        c.assign(g, e, seven)
            .map_err(|err| Error::internal("seventh-color", err.to_string()))?;
        run.line(|| format!("ASSIGN {} 7 # removed", e.0));
    }
    if opts.extend.assert_level == AssertLevel::Debug {
        c.verify_acyclic(g)
            .map_err(|v| Error::internal("seventh-color", v.to_string()))?;
    }
    Ok(run.finish(c))
}

fn check_degree(g: &Graph) -> Result<()> {
    // the graph type already caps degrees; this guards future relaxations
    match g.vertices().find(|&v| g.degree(v) > 4) {
        Some(v) => Err(Error::DegreeViolation(v)),
        None => Ok(()),
    }
}

/// Removes every edge of `g`, each time at a vertex of smallest positive
/// degree `x` towards its neighbor `y` of smallest degree (ties by id).
/// Returns `(edge, x, y)` in removal order.
pub fn elimination_order(g: &mut Graph) -> Result<Vec<(EdgeId, VertexId, VertexId)>> {
    let mut queue: BTreeSet<(usize, VertexId)> = g
        .vertices()
        .filter(|&v| g.degree(v) > 0)
        .map(|v| (g.degree(v), v))
        .collect();
    let mut order = Vec::with_capacity(g.edge_count());
    while let Some(&(d, x)) = queue.first() {
        if d > 3 {
            return Err(Error::precondition(
                "every remaining vertex has degree 4 (a component has m = 2n)",
            ));
        }
        let (y, e) = g
            .neighbors(x)
            .min_by_key(|&(y, _)| (g.degree(y), y))
            .expect("positive degree");
        let dy = g.degree(y);
        queue.remove(&(d, x));
        queue.remove(&(dy, y));
        g.remove_edge(e)?;
        if d > 1 {
            queue.insert((d - 1, x));
        }
        if dy > 1 {
            queue.insert((dy - 1, y));
        }
        order.push((e, x, y));
    }
    Ok(order)
}

struct Run {
    opts: DriverOptions,
    trace: Vec<String>,
    stats: DriverStats,
}

impl Run {
    fn new(opts: DriverOptions) -> Self {
        Run {
            opts,
            trace: Vec::new(),
            stats: DriverStats::default(),
        }
    }

    fn line(&mut self, f: impl FnOnce() -> String) {
        if self.opts.trace {
            self.trace.push(f());
        }
    }

    fn debug(&self) -> bool {
        self.opts.extend.assert_level == AssertLevel::Debug
    }

    fn finish(self, coloring: PartialEdgeColoring) -> DriverReport {
        DriverReport {
            coloring,
            trace: self.trace,
            stats: self.stats,
        }
    }

    fn color_forest(&mut self, h: &Graph) -> Result<PartialEdgeColoring> {
        let dec = blocks_of_forest(h);
        let mut parts = Vec::with_capacity(dec.blocks.len());
        for (k, block) in dec.blocks.iter().enumerate() {
            self.line(|| format!("BLOCK {k}"));
            let (mut sub, _, emap) = h.subgraph(block);
            let local = self.color_block(&mut sub)?;
            let colors = emap
                .iter()
                .enumerate()
                .map(|(i, &e)| {
                    local
                        .get(EdgeId(i as u32))
                        .map(|c| (e, c))
                        .ok_or_else(|| Error::internal("block", "edge left uncolored"))
                })
                .collect::<Result<Vec<_>>>()?;
            parts.push(BlockColoring { block: k, colors });
        }
        let (c, maps) = merge_blocks(h, &dec, &parts)?;
        for (k, map) in maps {
            self.line(|| {
                let images: Vec<String> = map.images(6).iter().map(u8::to_string).collect();
                format!("MERGE {k} {}", images.join(" "))
            });
        }
        if self.debug() {
            c.verify_acyclic(h)
                .map_err(|v| Error::internal("merge", v.to_string()))?;
        }
        Ok(c)
    }

    /// Colors a block (given as its own graph) and returns the coloring in
    /// the block's edge ids.
    fn color_block(&mut self, g: &mut Graph) -> Result<PartialEdgeColoring> {
        let order = elimination_order(g)?;
        let mut c = PartialEdgeColoring::new(6)?;
        for &(e, x, y) in order.iter().rev() {
            self.insert(g, &mut c, e, x, y)?;
        }
        Ok(c)
    }

    fn insert(
        &mut self,
        g: &mut Graph,
        c: &mut PartialEdgeColoring,
        e: EdgeId,
        x: VertexId,
        y: VertexId,
    ) -> Result<()> {
        let direct = if self.opts.always_extend {
            None
        } else {
            valid_between(g, c, x, y)?.min()
        };
        if let Some(k) = direct {
            g.restore_edge(e)?;
            c.assign(g, e, k)
                .map_err(|err| Error::internal("direct", err.to_string()))?;
            self.stats.direct += 1;
            self.line(|| format!("ASSIGN {} {k} # direct", e.0));
            return Ok(());
        }

        let rec = pad_for_extension(g, x, y)?;
        for &(anchor, p, pe) in &rec.pendants {
            self.line(|| format!("PAD {} {} {}", anchor.0, p.0, pe.0));
        }
        for &(_, _, pe) in &rec.pendants {
            // pendants lie on no cycle, so any proper color will do
            let k = c
                .candidates(g, pe)
                .min()
                .ok_or_else(|| Error::internal("pad", "no free color for a pendant"))?;
            c.assign(g, pe, k)?;
            self.line(|| format!("ASSIGN {} {k} # pad", pe.0));
        }

        let out = extend(g, c, x, y, &self.opts.extend)?;
        for mv in &out.moves {
            self.line(|| mv.to_string());
        }
        self.stats.extensions += 1;
        self.stats.moves += out.moves.len();
        self.stats.max_moves = self.stats.max_moves.max(out.moves.len());
        for case in &out.cases {
            *self.stats.cases.entry(case.id()).or_default() += 1;
        }
        for step in &out.steps {
            *self.stats.steps.entry(step).or_default() += 1;
        }

        for pe in rec.added_edges() {
            c.set_unchecked(pe, None);
        }
        unpad(g, &rec)?;
        self.line(|| "STRIP".into());

        g.restore_edge(e)?;
        c.assign(g, e, out.color)
            .map_err(|err| Error::internal("extend-assign", err.to_string()))?;
        if let Some((p, q)) = cycle_through_edge(g, c, e) {
            return Err(Error::internal(
                "extend-assign",
                format!("color {} closes a ({p},{q}) cycle", out.color),
            ));
        }
        self.line(|| format!("ASSIGN {} {} # extend", e.0, out.color));
        if self.debug() {
            c.verify_acyclic(g)
                .map_err(|v| Error::internal("extend-assign", v.to_string()))?;
        }
        Ok(())
    }
}

/// Permutation sending `at` (colors of the new block at a cut vertex) into
/// the colors not in `taken`, fixing as much as possible.
fn merge_map(at: ColorSet, taken: ColorSet) -> Option<ColorMap> {
    if at.intersection(taken).is_empty() {
        return Some(ColorMap::identity());
    }
    let palette = ColorSet::palette(6);
    let free = palette.difference(taken);
    if free.len() < at.len() {
        return None;
    }
    let mut images = [0u8; 6];
    let mut used = ColorSet::EMPTY;
    for (s, t) in at.iter().zip(free.iter()) {
        images[s.get() as usize - 1] = t.get();
        used.insert(t);
    }
    let mut rest = palette.difference(used).iter();
    for s in palette.difference(at).iter() {
        images[s.get() as usize - 1] = rest.next().expect("bijection").get();
    }
    ColorMap::from_images(&images)
}

/// Joins separately colored blocks into one coloring of `g`. The block-cut
/// tree is walked breadth-first from each component's first block; every
/// new block is renamed so that its colors at the shared cut vertex avoid
/// the colors already there. Returns the renaming applied to each block,
/// in the order blocks were placed.
pub fn merge_blocks(
    g: &Graph,
    dec: &BlockDecomposition,
    parts: &[BlockColoring],
) -> Result<(PartialEdgeColoring, Vec<(usize, ColorMap)>)> {
    let nb = dec.blocks.len();
    if parts.len() != nb {
        return Err(Error::precondition("one coloring per block expected"));
    }
    let mut cuts_of: Vec<Vec<VertexId>> = vec![Vec::new(); nb];
    let mut blocks_at: BTreeMap<VertexId, Vec<usize>> = BTreeMap::new();
    for &(b, v) in &dec.tree {
        cuts_of[b].push(v);
        blocks_at.entry(v).or_default().push(b);
    }

    let mut c = PartialEdgeColoring::new(6)?;
    let mut placed = vec![false; nb];
    let mut maps = Vec::with_capacity(nb);
    let mut queue = VecDeque::new();
    for root in 0..nb {
        if placed[root] {
            continue;
        }
        placed[root] = true;
        queue.push_back(root);
        while let Some(b) = queue.pop_front() {
            let part = &parts[b];
            let mut map = ColorMap::identity();
            let mut anchored = false;
            for &v in &cuts_of[b] {
                let taken = c.present(g, v);
                if taken.is_empty() {
                    continue;
                }
                if anchored {
                    return Err(Error::internal("merge", "block touches two colored cuts"));
                }
                anchored = true;
                let at: ColorSet = part
                    .colors
                    .iter()
                    .filter(|&&(e, _)| {
                        let (p, q) = g.endpoints(e);
                        p == v || q == v
                    })
                    .map(|&(_, k)| k)
                    .collect();
                map = merge_map(at, taken)
                    .ok_or_else(|| Error::internal("merge", format!("no room at {v}")))?;
            }
            for &(e, k) in &part.colors {
                c.assign(g, e, map.apply(k))
                    .map_err(|err| Error::internal("merge", err.to_string()))?;
            }
            maps.push((b, map));
            for &v in &cuts_of[b] {
                for &nbk in &blocks_at[&v] {
                    if !placed[nbk] {
                        placed[nbk] = true;
                        queue.push_back(nbk);
                    }
                }
            }
        }
    }
    Ok((c, maps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{generate, GeneratorSpec};
    use crate::graph::blocks;

    fn build(n: usize, edges: &[(u32, u32)]) -> Graph {
        let mut g = Graph::with_vertices(n);
        for &(a, b) in edges {
            g.add_edge(VertexId(a), VertexId(b)).unwrap();
        }
        g
    }

    fn check(g: &Graph, c: &PartialEdgeColoring, max: usize) {
        assert!(c.is_total(g));
        c.verify_acyclic(g).unwrap();
        assert!(c.colors_used(g).len() <= max);
    }

    #[test]
    fn single_edge_gets_color_one() {
        let g = build(2, &[(0, 1)]);
        let c = color_connected_6(&g).unwrap();
        assert_eq!(c.get(EdgeId(0)), Some(Color::of(1)));
    }

    #[test]
    fn four_cycle_uses_three_colors() {
        let g = build(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let c = color_connected_6(&g).unwrap();
        check(&g, &c, 3);
        assert_eq!(c.colors_used(&g).len(), 3);
    }

    #[test]
    fn k5_minus_edge_within_six() {
        let g = generate(&"complete_minus_edge(5)".parse::<GeneratorSpec>().unwrap()).unwrap();
        let r = color_connected_6_with(&g, &DriverOptions::debug()).unwrap();
        check(&g, &r.coloring, 6);
    }

    #[test]
    fn rejects_bad_inputs() {
        let two_c4 = build(
            8,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (4, 5),
                (5, 6),
                (6, 7),
                (7, 4),
            ],
        );
        assert!(matches!(
            color_connected_6(&two_c4),
            Err(Error::PreconditionViolated(_))
        ));
        let k5 = generate(&GeneratorSpec::Complete(5)).unwrap();
        assert!(matches!(
            color_connected_6(&k5),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn seven_colors_for_regular_graphs() {
        for spec in ["complete(5)", "circulant(8,{1,2})", "circulant(11,{2,3})"] {
            let g = generate(&spec.parse::<GeneratorSpec>().unwrap()).unwrap();
            let c = color_graph_7_with(&g, &DriverOptions::debug())
                .unwrap()
                .coloring;
            check(&g, &c, 7);
        }
        let two_c4 = build(
            8,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (4, 5),
                (5, 6),
                (6, 7),
                (7, 4),
            ],
        );
        check(&two_c4, &color_graph_7(&two_c4).unwrap(), 3);
    }

    #[test]
    fn bowtie_merge_moves_second_block() {
        let g = build(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]);
        let dec = blocks(&g).unwrap();
        let parts: Vec<BlockColoring> = dec
            .blocks
            .iter()
            .enumerate()
            .map(|(k, b)| BlockColoring {
                block: k,
                colors: b.iter().zip(1..).map(|(&e, i)| (e, Color::of(i))).collect(),
            })
            .collect();
        let (c, maps) = merge_blocks(&g, &dec, &parts).unwrap();
        check(&g, &c, 6);
        assert_eq!(maps[0].1, ColorMap::identity());
        let at_cut = c.present(&g, VertexId(2));
        assert_eq!(at_cut.len(), 4);
    }

    #[test]
    fn path_of_bridges_merges() {
        let g = build(4, &[(0, 1), (1, 2), (2, 3)]);
        let c = color_connected_6(&g).unwrap();
        check(&g, &c, 2);
    }

    #[test]
    fn elimination_never_stalls_below_two_n() {
        let g0 = generate(&"random_valid(60,119,3)".parse::<GeneratorSpec>().unwrap()).unwrap();
        let mut g = g0.clone();
        let order = elimination_order(&mut g).unwrap();
        assert_eq!(order.len(), g0.edge_count());
        assert_eq!(g.edge_count(), 0);
    }
}
