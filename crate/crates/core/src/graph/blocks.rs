use super::{EdgeId, Graph, VertexId};
use crate::error::{Error, Result};

/// Biconnected components (blocks) of a graph.
///
/// Every edge belongs to exactly one block; each block is either 2-connected
/// or a single bridge. `tree` lists the incidences of the block-cut tree as
/// `(block index, cut vertex)` pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<Vec<EdgeId>>,
    pub cut_vertices: Vec<VertexId>,
    pub tree: Vec<(usize, VertexId)>,
}

impl BlockDecomposition {
    pub fn block_vertices(&self, g: &Graph, block: usize) -> Vec<VertexId> {
        let mut vs: Vec<VertexId> = self.blocks[block]
            .iter()
            .flat_map(|&e| {
                let (u, v) = g.endpoints(e);
                [u, v]
            })
            .collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    pub fn blocks_at(&self, v: VertexId) -> impl Iterator<Item = usize> + '_ {
        self.tree
            .iter()
            .filter(move |&&(_, c)| c == v)
            .map(|&(b, _)| b)
    }

    pub fn cuts_of(&self, block: usize) -> impl Iterator<Item = VertexId> + '_ {
        self.tree
            .iter()
            .filter(move |&&(b, _)| b == block)
            .map(|&(_, c)| c)
    }
}

/// Block decomposition of a connected graph.
pub fn blocks(g: &Graph) -> Result<BlockDecomposition> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(blocks_of_forest(g))
}

/// Block decomposition of every component of `g`.
///
/// Iterative low-point traversal with an explicit edge stack.
pub fn blocks_of_forest(g: &Graph) -> BlockDecomposition {
    const UNSEEN: u32 = u32::MAX;
    let n = g.vertex_bound();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0u32; n];
    let mut timer = 0u32;
    let mut edge_stack: Vec<EdgeId> = Vec::new();
    let mut blocks: Vec<Vec<EdgeId>> = Vec::new();
    // (vertex, edge to parent, next incidence slot)
    let mut frames: Vec<(VertexId, Option<EdgeId>, usize)> = Vec::new();

    for root in g.vertices() {
        if disc[root.index()] != UNSEEN || g.degree(root) == 0 {
            continue;
        }
        disc[root.index()] = timer;
        low[root.index()] = timer;
        timer += 1;
        frames.push((root, None, 0));
        while let Some(top) = frames.last_mut() {
            let (v, parent_edge, slot) = *top;
            if slot < g.degree(v) {
                top.2 += 1;
                let e = g.incident_edges(v)[slot];
                if Some(e) == parent_edge {
                    continue;
                }
                let w = g.other_end(e, v);
                if disc[w.index()] == UNSEEN {
                    edge_stack.push(e);
                    disc[w.index()] = timer;
                    low[w.index()] = timer;
                    timer += 1;
                    frames.push((w, Some(e), 0));
                } else if disc[w.index()] < disc[v.index()] {
                    edge_stack.push(e);
                    low[v.index()] = low[v.index()].min(disc[w.index()]);
                }
            } else {
                frames.pop();
                let Some(&(p, _, _)) = frames.last() else {
                    continue;
                };
                low[p.index()] = low[p.index()].min(low[v.index()]);
                if low[v.index()] >= disc[p.index()] {
                    let tree_edge = parent_edge.expect("non-root frame has a parent edge");
                    let mut block = Vec::new();
                    loop {
                        let e = edge_stack.pop().expect("edge stack underflow");
                        block.push(e);
                        if e == tree_edge {
                            break;
                        }
                    }
                    block.sort_unstable();
                    blocks.push(block);
                }
            }
        }
    }
    debug_assert!(edge_stack.is_empty());
    blocks.sort_unstable_by_key(|b| b[0]);

    let mut count = vec![0u8; n];
    let mut seen_in = vec![usize::MAX; n];
    for (i, block) in blocks.iter().enumerate() {
        for &e in block {
            let (a, b) = g.endpoints(e);
            for w in [a, b] {
                if seen_in[w.index()] != i {
                    seen_in[w.index()] = i;
                    count[w.index()] += 1;
                }
            }
        }
    }
    let cut_vertices: Vec<VertexId> = (0..n)
        .filter(|&i| count[i] >= 2)
        .map(|i| VertexId(i as u32))
        .collect();
    let mut tree = Vec::new();
    let mut is_cut = vec![false; n];
    for c in &cut_vertices {
        is_cut[c.index()] = true;
    }
    for (i, block) in blocks.iter().enumerate() {
        let mut cuts: Vec<VertexId> = block
            .iter()
            .flat_map(|&e| {
                let (a, b) = g.endpoints(e);
                [a, b]
            })
            .filter(|w| is_cut[w.index()])
            .collect();
        cuts.sort_unstable();
        cuts.dedup();
        tree.extend(cuts.into_iter().map(|c| (i, c)));
    }

    BlockDecomposition {
        blocks,
        cut_vertices,
        tree,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(n: usize, edges: &[(u32, u32)]) -> Graph {
        let mut g = Graph::with_vertices(n);
        for &(a, b) in edges {
            g.add_edge(VertexId(a), VertexId(b)).unwrap();
        }
        g
    }

    /// Brute force: a graph with at least 3 vertices is 2-connected when it is
    /// connected and stays connected after deleting any single vertex.
    fn two_connected(g: &Graph, edges: &[EdgeId]) -> bool {
        let (sub, verts, _) = g.subgraph(edges);
        if edges.len() == 1 {
            return true;
        }
        if !sub.is_connected() {
            return false;
        }
        (0..verts.len()).all(|drop| {
            let mut h = sub.clone();
            let inc: Vec<EdgeId> = h.incident_edges(VertexId(drop as u32)).to_vec();
            for e in inc {
                h.remove_edge(e).unwrap();
            }
            h.remove_vertex(VertexId(drop as u32)).unwrap();
            h.is_connected()
        })
    }

    #[test]
    fn cycle_is_one_block() {
        let g = build(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let d = blocks(&g).unwrap();
        assert_eq!(d.blocks.len(), 1);
        assert!(d.cut_vertices.is_empty());
    }

    #[test]
    fn bowtie_has_two_blocks() {
        let g = build(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]);
        let d = blocks(&g).unwrap();
        assert_eq!(d.blocks.len(), 2);
        assert_eq!(d.cut_vertices, vec![VertexId(2)]);
        assert_eq!(d.tree, vec![(0, VertexId(2)), (1, VertexId(2))]);
    }

    #[test]
    fn path_has_bridge_blocks() {
        let g = build(4, &[(0, 1), (1, 2), (2, 3)]);
        let d = blocks(&g).unwrap();
        assert_eq!(d.blocks.len(), 3);
        assert_eq!(d.cut_vertices, vec![VertexId(1), VertexId(2)]);
    }

    #[test]
    fn disconnected_rejected() {
        let g = build(4, &[(0, 1), (2, 3)]);
        assert_eq!(blocks(&g), Err(Error::Disconnected));
        assert_eq!(blocks_of_forest(&g).blocks.len(), 2);
    }

    #[test]
    fn random_graphs_partition_into_two_connected_blocks() {
        use crate::gen::{random_graph, SeededRng};
        for seed in 0..300u64 {
            let mut rng = SeededRng::new(seed);
            let n = 2 + rng.below(11) as usize;
            let g = random_graph(n, 2 * n, 4, &mut rng);
            let d = blocks_of_forest(&g);
            let mut all: Vec<EdgeId> = d.blocks.iter().flatten().copied().collect();
            all.sort_unstable();
            assert_eq!(all, g.edges().collect::<Vec<_>>(), "seed {seed}");
            for (i, b) in d.blocks.iter().enumerate() {
                assert!(two_connected(&g, b), "seed {seed} block {b:?}");
                if d.cuts_of(i).next().is_some() {
                    let nv = d.block_vertices(&g, i).len();
                    assert!(b.len() < 2 * nv, "seed {seed}: block too dense");
                }
            }
        }
    }

    #[test]
    fn no_cycle_crosses_blocks() {
        // Removing all edges of one block never disconnects vertices that
        // were joined by a path avoiding it, i.e. blocks meet only at cut
        // vertices. Checked via: distinct blocks share at most one vertex.
        use crate::gen::{random_graph, SeededRng};
        for seed in 0..100u64 {
            let mut rng = SeededRng::new(seed);
            let g = random_graph(12, 16, 4, &mut rng);
            let d = blocks_of_forest(&g);
            for i in 0..d.blocks.len() {
                for j in i + 1..d.blocks.len() {
                    let a = d.block_vertices(&g, i);
                    let b = d.block_vertices(&g, j);
                    let shared = a.iter().filter(|v| b.contains(v)).count();
                    assert!(shared <= 1, "seed {seed}");
                }
            }
        }
    }
}
