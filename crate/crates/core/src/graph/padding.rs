use super::{EdgeId, Graph, VertexId, MAX_DEGREE};
use crate::error::{Error, Result};

/// Pendant vertices added around a removed edge `xy` so that `x` has degree
/// 2, `y` has degree 3, and every neighbor of either has degree 4.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PaddingRecord {
    /// `(anchor, pendant vertex, pendant edge)` in creation order.
    pub pendants: Vec<(VertexId, VertexId, EdgeId)>,
    /// Degree each padded vertex was raised to.
    pub targets: Vec<(VertexId, usize)>,
}

impl PaddingRecord {
    pub fn is_empty(&self) -> bool {
        self.pendants.is_empty()
    }

    pub fn added_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.pendants.iter().map(|&(_, p, _)| p)
    }

    pub fn added_edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.pendants.iter().map(|&(_, _, e)| e)
    }
}

fn raise(g: &mut Graph, rec: &mut PaddingRecord, v: VertexId, target: usize) {
    if g.degree(v) >= target {
        return;
    }
    while g.degree(v) < target {
        let p = g.add_vertex();
        let e = g.add_edge(v, p).expect("pendant edge is always insertable");
        rec.pendants.push((v, p, e));
    }
    rec.targets.push((v, target));
}

/// Pads `g` (the graph with `xy` already removed) in two passes: first `x`
/// and `y`, then every neighbor of `x` or `y`, fresh pendants included.
pub fn pad_for_extension(g: &mut Graph, x: VertexId, y: VertexId) -> Result<PaddingRecord> {
    if !g.contains_vertex(x) {
        return Err(Error::UnknownVertex(x));
    }
    if !g.contains_vertex(y) {
        return Err(Error::UnknownVertex(y));
    }
    if x == y || g.edge_between(x, y).is_some() {
        return Err(Error::precondition(
            "x and y must be distinct and non-adjacent",
        ));
    }
    if g.degree(x) > 2 || g.degree(y) > 3 {
        return Err(Error::precondition(format!(
            "degree(x)={} must be <= 2 and degree(y)={} must be <= 3",
            g.degree(x),
            g.degree(y)
        )));
    }
    let mut rec = PaddingRecord::default();
    raise(g, &mut rec, x, 2);
    raise(g, &mut rec, y, 3);
    let mut around: Vec<VertexId> = g
        .neighbors(x)
        .chain(g.neighbors(y))
        .map(|(z, _)| z)
        .collect();
    let mut seen = Vec::with_capacity(around.len());
    around.retain(|z| {
        if seen.contains(z) {
            false
        } else {
            seen.push(*z);
            true
        }
    });
    for z in around {
        raise(g, &mut rec, z, MAX_DEGREE);
    }
    Ok(rec)
}

/// Removes everything `pad_for_extension` added.
pub fn unpad(g: &mut Graph, rec: &PaddingRecord) -> Result<()> {
    for &(_, p, e) in rec.pendants.iter().rev() {
        g.delete_edge(e)?;
        g.remove_vertex(p)?;
    }
    Ok(())
}
