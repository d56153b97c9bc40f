//! Exact acyclic chromatic index of small graphs by backtracking.

use std::collections::VecDeque;

use crate::color::{ColorSet, PartialEdgeColoring, MAX_COLORS};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::paths::cycle_through_edge;

pub const DEFAULT_EDGE_LIMIT: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub exact_index: u8,
    pub witness: PartialEdgeColoring,
    /// Color assignments tried over all probes.
    pub nodes_explored: u64,
}

/// Outcome of a single `k` probe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Probe {
    pub witness: Option<PartialEdgeColoring>,
    pub nodes: u64,
}

/// Edges in breadth-first order, each component started at a vertex of
/// largest degree.
fn edge_order(g: &Graph) -> Vec<EdgeId> {
    let mut seen_v = vec![false; g.vertex_bound()];
    let mut seen_e = vec![false; g.edge_bound()];
    let mut order = Vec::with_capacity(g.edge_count());
    let mut starts: Vec<VertexId> = g.vertices().collect();
    starts.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut queue = VecDeque::new();
    for s in starts {
        if seen_v[s.index()] {
            continue;
        }
        seen_v[s.index()] = true;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for (w, e) in g.neighbors(v) {
                if !seen_e[e.index()] {
                    seen_e[e.index()] = true;
                    order.push(e);
                }
                if !seen_v[w.index()] {
                    seen_v[w.index()] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

struct Search<'a> {
    g: &'a Graph,
    order: Vec<EdgeId>,
    allowed: ColorSet,
    c: PartialEdgeColoring,
    nodes: u64,
}

impl Search<'_> {
    fn run(&mut self, i: usize, used: u8) -> bool {
        let Some(&e) = self.order.get(i) else {
            return true;
        };
        // colors are introduced in increasing order
        let fresh = ColorSet::palette((used + 1).min(MAX_COLORS));
        let choices = self
            .c
            .candidates(self.g, e)
            .intersection(self.allowed)
            .intersection(fresh);
        for k in choices.iter() {
            self.nodes += 1;
            self.c.set_unchecked(e, Some(k));
            if cycle_through_edge(self.g, &self.c, e).is_none()
                && self.run(i + 1, used.max(k.get()))
            {
                return true;
            }
            self.c.set_unchecked(e, None);
        }
        false
    }
}

fn check_size(g: &Graph, limit: usize) -> Result<()> {
    if g.edge_count() > limit {
        return Err(Error::TooLarge {
            edges: g.edge_count(),
            limit,
        });
    }
    Ok(())
}

/// Looks for an acyclic coloring with colors `1..=k`.
pub fn probe(g: &Graph, k: u8, limit: usize) -> Result<Probe> {
    check_size(g, limit)?;
    if k > MAX_COLORS {
        return Err(Error::precondition(format!(
            "at most {MAX_COLORS} colors are supported"
        )));
    }
    let mut s = Search {
        g,
        order: edge_order(g),
        allowed: ColorSet::palette(k),
        c: PartialEdgeColoring::new(MAX_COLORS)?,
        nodes: 0,
    };
    let found = s.run(0, 0);
    Ok(Probe {
        witness: found.then_some(s.c),
        nodes: s.nodes,
    })
}

pub fn is_k_feasible(g: &Graph, k: u8) -> Result<Option<PartialEdgeColoring>> {
    Ok(probe(g, k, DEFAULT_EDGE_LIMIT)?.witness)
}

pub fn exact_index(g: &Graph, k_max: u8) -> Result<OracleResult> {
    exact_index_limited(g, k_max, DEFAULT_EDGE_LIMIT)
}

/// Tries `k = Δ, Δ + 1, ..., k_max` and returns the first feasible one.
pub fn exact_index_limited(g: &Graph, k_max: u8, limit: usize) -> Result<OracleResult> {
    check_size(g, limit)?;
    let mut nodes = 0;
    for k in g.max_degree() as u8..=k_max {
        let p = probe(g, k, limit)?;
        nodes += p.nodes;
        if let Some(witness) = p.witness {
            return Ok(OracleResult {
                exact_index: k,
                witness,
                nodes_explored: nodes,
            });
        }
    }
    Err(Error::Infeasible(k_max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{generate, GeneratorSpec};

    fn spec(s: &str) -> Graph {
        generate(&s.parse::<GeneratorSpec>().unwrap()).unwrap()
    }

    #[test]
    fn four_cycle_needs_three() {
        let g = spec("cycle(4)");
        assert!(is_k_feasible(&g, 2).unwrap().is_none());
        let w = is_k_feasible(&g, 3).unwrap().unwrap();
        w.verify_acyclic(&g).unwrap();
        let r = exact_index(&g, 7).unwrap();
        assert_eq!(r.exact_index, 3);
        assert_eq!(r.witness.colors_used(&g).len(), 3);
    }

    #[test]
    fn trees_need_max_degree() {
        let mut g = Graph::with_vertices(6);
        for (a, b) in [(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)] {
            g.add_edge(VertexId(a), VertexId(b)).unwrap();
        }
        assert_eq!(exact_index(&g, 7).unwrap().exact_index, 3);
    }

    #[test]
    fn complete_graphs() {
        assert!(
            exact_index(&spec("complete_minus_edge(5)"), 7)
                .unwrap()
                .exact_index
                >= 5
        );
        let k5 = exact_index(&spec("complete(5)"), 7).unwrap();
        assert!((5..=7).contains(&k5.exact_index));
        k5.witness.verify_acyclic(&spec("complete(5)")).unwrap();
    }

    #[test]
    fn limits() {
        let g = spec("random_valid(20,39,1)");
        assert!(matches!(
            exact_index(&g, 7),
            Err(Error::TooLarge {
                edges: 39,
                limit: 24
            })
        ));
        assert!(matches!(
            exact_index(&spec("cycle(4)"), 2),
            Err(Error::Infeasible(2))
        ));
    }

    #[test]
    fn empty_graph_has_index_zero() {
        let r = exact_index(&Graph::with_vertices(3), 7).unwrap();
        assert_eq!(r.exact_index, 0);
    }
}
