//! Undirected simple graphs with maximum degree 4.
//!
//! Vertex and edge ids are dense integers. Removing an edge keeps its id and
//! endpoints so it can be restored later. Slots of deleted vertices and of
//! edges dropped with [`Graph::delete_edge`] are recycled by later
//! insertions.

mod blocks;
mod io;
mod padding;

use std::fmt;

use arrayvec::ArrayVec;

use crate::error::{Error, Result};

pub use blocks::{blocks, blocks_of_forest, BlockDecomposition};
pub use io::{parse_edge_list, write_edge_list};
pub use padding::{pad_for_extension, unpad, PaddingRecord};

pub const MAX_DEGREE: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub u32);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl EdgeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

#[derive(Debug, Clone)]
struct EdgeSlot {
    ends: [VertexId; 2],
    live: bool,
    freed: bool,
}

/// Incidence lists are kept sorted by edge id, so any sequence of removals
/// and restorations that returns to the same edge set yields identical
/// adjacency.
#[derive(Debug, Clone, Default)]
pub struct Graph {
    incident: Vec<ArrayVec<EdgeId, MAX_DEGREE>>,
    vertex_live: Vec<bool>,
    edges: Vec<EdgeSlot>,
    live_vertices: usize,
    live_edges: usize,
    free_vertices: Vec<VertexId>,
    free_edges: Vec<EdgeId>,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_vertices(n: usize) -> Self {
        let mut g = Self::new();
        for _ in 0..n {
            g.add_vertex();
        }
        g
    }

    pub fn add_vertex(&mut self) -> VertexId {
        if let Some(id) = self.free_vertices.pop() {
            self.vertex_live[id.index()] = true;
            self.live_vertices += 1;
            return id;
        }
        let id = VertexId(self.incident.len() as u32);
        self.incident.push(ArrayVec::new());
        self.vertex_live.push(true);
        self.live_vertices += 1;
        id
    }

    /// Deletes an isolated vertex.
    pub fn remove_vertex(&mut self, v: VertexId) -> Result<()> {
        self.check_vertex(v)?;
        if !self.incident[v.index()].is_empty() {
            return Err(Error::precondition(format!(
                "vertex {v} still has incident edges"
            )));
        }
        self.vertex_live[v.index()] = false;
        self.live_vertices -= 1;
        self.free_vertices.push(v);
        Ok(())
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId> {
        self.check_insertable(u, v)?;
        let slot = EdgeSlot {
            ends: [u, v],
            live: true,
            freed: false,
        };
        let id = match self.free_edges.pop() {
            Some(id) => {
                self.edges[id.index()] = slot;
                id
            }
            None => {
                self.edges.push(slot);
                EdgeId(self.edges.len() as u32 - 1)
            }
        };
        self.link(id);
        Ok(id)
    }

    /// Removes `e` for good; its id may be handed out again.
    pub fn delete_edge(&mut self, e: EdgeId) -> Result<()> {
        match self.edges.get(e.index()) {
            Some(slot) if !slot.freed => {}
            _ => return Err(Error::UnknownEdge(e)),
        }
        if self.edges[e.index()].live {
            self.remove_edge(e)?;
        }
        self.edges[e.index()].freed = true;
        self.free_edges.push(e);
        Ok(())
    }

    pub fn remove_edge(&mut self, e: EdgeId) -> Result<()> {
        match self.edges.get(e.index()) {
            Some(slot) if slot.live => {}
            _ => return Err(Error::UnknownEdge(e)),
        }
        let [u, v] = self.edges[e.index()].ends;
        for w in [u, v] {
            let list = &mut self.incident[w.index()];
            let pos = list
                .iter()
                .position(|&f| f == e)
                .expect("incidence out of sync");
            list.remove(pos);
        }
        self.edges[e.index()].live = false;
        self.live_edges -= 1;
        Ok(())
    }

    pub fn restore_edge(&mut self, e: EdgeId) -> Result<()> {
        match self.edges.get(e.index()) {
            Some(slot) if !slot.live && !slot.freed => {}
            _ => return Err(Error::UnknownEdge(e)),
        }
        let [u, v] = self.edges[e.index()].ends;
        self.check_insertable(u, v)?;
        self.edges[e.index()].live = true;
        self.link(e);
        Ok(())
    }

    fn link(&mut self, e: EdgeId) {
        let [u, v] = self.edges[e.index()].ends;
        for w in [u, v] {
            let list = &mut self.incident[w.index()];
            let pos = list.iter().position(|&f| f > e).unwrap_or(list.len());
            list.insert(pos, e);
        }
        self.live_edges += 1;
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        match self.vertex_live.get(v.index()) {
            Some(true) => Ok(()),
            _ => Err(Error::UnknownVertex(v)),
        }
    }

    fn check_insertable(&self, u: VertexId, v: VertexId) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.edge_between(u, v).is_some() {
            return Err(Error::DuplicateEdge(u, v));
        }
        for w in [u, v] {
            if self.degree(w) >= MAX_DEGREE {
                return Err(Error::DegreeViolation(w));
            }
        }
        Ok(())
    }

    /// Number of vertex slots ever allocated (live or not).
    pub fn vertex_bound(&self) -> usize {
        self.incident.len()
    }

    /// Number of edge slots ever allocated (live or removed).
    pub fn edge_bound(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.live_vertices
    }

    pub fn edge_count(&self) -> usize {
        self.live_edges
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertex_live.get(v.index()).copied().unwrap_or(false)
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.edges.get(e.index()).is_some_and(|s| s.live)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertex_live
            .iter()
            .enumerate()
            .filter(|(_, &live)| live)
            .map(|(i, _)| VertexId(i as u32))
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, s)| s.live)
            .map(|(i, _)| EdgeId(i as u32))
    }

    /// Endpoints of an edge, live or removed.
    #[inline]
    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        let [u, v] = self.edges[e.index()].ends;
        (u, v)
    }

    #[inline]
    pub fn other_end(&self, e: EdgeId, u: VertexId) -> VertexId {
        let [a, b] = self.edges[e.index()].ends;
        if a == u {
            b
        } else {
            debug_assert_eq!(b, u);
            a
        }
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.incident[v.index()].len()
    }

    #[inline]
    pub fn incident_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.incident[v.index()]
    }

    /// `(neighbor, connecting edge)` pairs in edge-id order.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = (VertexId, EdgeId)> + '_ {
        self.incident[v.index()]
            .iter()
            .map(move |&e| (self.other_end(e, v), e))
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.incident
            .get(u.index())?
            .iter()
            .copied()
            .find(|&e| self.other_end(e, u) == v)
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Connected components over live vertices, each sorted, ordered by
    /// smallest member.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.vertex_bound()];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for s in self.vertices() {
            if seen[s.index()] {
                continue;
            }
            seen[s.index()] = true;
            stack.push(s);
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for (w, _) in self.neighbors(v) {
                    if !seen[w.index()] {
                        seen[w.index()] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Copies the given edges into a fresh graph. Returns the graph together
    /// with the local-to-global vertex and edge maps. Local vertex ids follow
    /// ascending global id; local edge ids follow the order of `edges`.
    pub fn subgraph(&self, edges: &[EdgeId]) -> (Graph, Vec<VertexId>, Vec<EdgeId>) {
        let mut verts: Vec<VertexId> = edges
            .iter()
            .flat_map(|&e| {
                let (u, v) = self.endpoints(e);
                [u, v]
            })
            .collect();
        verts.sort_unstable();
        verts.dedup();
        let mut local = vec![u32::MAX; self.vertex_bound()];
        for (i, v) in verts.iter().enumerate() {
            local[v.index()] = i as u32;
        }
        let mut g = Graph::with_vertices(verts.len());
        for &e in edges {
            let (u, v) = self.endpoints(e);
            g.add_edge(VertexId(local[u.index()]), VertexId(local[v.index()]))
                .expect("subgraph of a valid graph is valid");
        }
        (g, verts, edges.to_vec())
    }

    /// Live structure only: sorted live vertices and their incidence lists.
    fn live_shape(&self) -> (Vec<VertexId>, Vec<(EdgeId, VertexId, VertexId)>) {
        let verts = self.vertices().collect();
        let edges = self
            .edges()
            .map(|e| {
                let (u, v) = self.endpoints(e);
                (e, u, v)
            })
            .collect();
        (verts, edges)
    }
}

/// Two graphs are equal when their live vertices, live edges (with ids and
/// endpoints) and incidence lists agree. Dead slots are ignored.
impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.live_shape() == other.live_shape()
            && self
                .vertices()
                .all(|v| self.incident_edges(v) == other.incident_edges(v))
    }
}

impl Eq for Graph {}
