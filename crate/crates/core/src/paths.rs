//! Maximal bichromatic paths, critical paths and candidate classification.

use std::fmt;

use crate::color::{Color, ColorSet, PartialEdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};

/// An alternating `(alpha, beta)` path. `vertices[0]` is the starting
/// vertex; the first edge has color `first_color`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BichromaticPath {
    pub alpha: Color,
    pub beta: Color,
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
    pub first_color: Color,
    pub last_color: Color,
}

impl BichromaticPath {
    pub fn start(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn end(&self) -> VertexId {
        *self.vertices.last().expect("paths have at least one edge")
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    /// Vertices strictly between the two ends.
    pub fn interior(&self) -> &[VertexId] {
        &self.vertices[1..self.vertices.len() - 1]
    }
}

impl fmt::Display for BichromaticPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}: {}", self.alpha, self.beta, self.vertices[0])?;
        for (e, v) in self.edges.iter().zip(&self.vertices[1..]) {
            write!(f, " -{e}- {v}")?;
        }
        Ok(())
    }
}

fn check_pair(alpha: Color, beta: Color) -> Result<()> {
    if alpha == beta {
        Err(Error::InvalidPair(alpha, beta))
    } else {
        Ok(())
    }
}

#[inline]
fn edge_with_skip(
    g: &Graph,
    c: &PartialEdgeColoring,
    u: VertexId,
    col: Color,
    skip: Option<EdgeId>,
) -> Option<(VertexId, EdgeId)> {
    g.incident_edges(u)
        .iter()
        .find(|&&e| Some(e) != skip && c.get(e) == Some(col))
        .map(|&e| (g.other_end(e, u), e))
}

/// Walks from `v` along its `start`-colored edge, alternating colors, until
/// the walk cannot continue. `skip` is treated as uncolored.
fn walk(
    g: &Graph,
    c: &PartialEdgeColoring,
    alpha: Color,
    beta: Color,
    v: VertexId,
    start: Color,
    skip: Option<EdgeId>,
) -> Result<Option<BichromaticPath>> {
    check_pair(alpha, beta)?;
    if start != alpha && start != beta {
        return Err(Error::InvalidPair(alpha, start));
    }
    let Some((mut at, e0)) = edge_with_skip(g, c, v, start, skip) else {
        return Ok(None);
    };
    let mut vertices = vec![v, at];
    let mut edges = vec![e0];
    let mut want = if start == alpha { beta } else { alpha };
    let mut last = start;
    while let Some((next, e)) = edge_with_skip(g, c, at, want, skip) {
        if next == v {
            return Err(Error::OnCycle {
                vertex: v,
                alpha,
                beta,
            });
        }
        vertices.push(next);
        edges.push(e);
        last = want;
        at = next;
        want = if want == alpha { beta } else { alpha };
    }
    Ok(Some(BichromaticPath {
        alpha,
        beta,
        vertices,
        edges,
        first_color: start,
        last_color: last,
    }))
}

/// The alternating path leaving `v` through its `start`-colored edge. When
/// `v` is an end of its `(alpha, beta)` component this is the whole maximal
/// path; otherwise it is the part on the `start` side.
pub fn maximal_path(
    g: &Graph,
    c: &PartialEdgeColoring,
    alpha: Color,
    beta: Color,
    v: VertexId,
    start: Color,
) -> Result<Option<BichromaticPath>> {
    walk(g, c, alpha, beta, v, start, None)
}

/// The whole maximal `(alpha, beta)` path containing `v`, oriented from the
/// end reached by leaving `v` through its `beta` edge. `None` if `v` has
/// neither color.
pub fn path_through(
    g: &Graph,
    c: &PartialEdgeColoring,
    alpha: Color,
    beta: Color,
    v: VertexId,
) -> Result<Option<BichromaticPath>> {
    let fwd = walk(g, c, alpha, beta, v, alpha, None)?;
    let back = walk(g, c, alpha, beta, v, beta, None)?;
    Ok(match (back, fwd) {
        (None, None) => None,
        (Some(p), None) | (None, Some(p)) => {
            let end = p.end();
            let last = p.last_color;
            walk(g, c, alpha, beta, end, last, None)?
        }
        (Some(b), Some(f)) => {
            let mut vertices: Vec<VertexId> = b.vertices.iter().rev().copied().collect();
            vertices.extend_from_slice(&f.vertices[1..]);
            let mut edges: Vec<EdgeId> = b.edges.iter().rev().copied().collect();
            edges.extend_from_slice(&f.edges);
            BichromaticPath {
                alpha,
                beta,
                vertices,
                edges,
                first_color: b.last_color,
                last_color: f.last_color,
            }
            .into()
        }
    })
}

fn critical_skip(
    g: &Graph,
    c: &PartialEdgeColoring,
    alpha: Color,
    beta: Color,
    a: VertexId,
    b: VertexId,
    skip: Option<EdgeId>,
) -> Result<bool> {
    Ok(match walk(g, c, alpha, beta, a, alpha, skip)? {
        Some(p) => p.end() == b && p.last_color == alpha,
        None => false,
    })
}

/// Whether an `(alpha, beta, ab)` critical path exists: the maximal path
/// leaving `a` through its `alpha` edge ends at `b` through an `alpha` edge.
pub fn exists_critical_path(
    g: &Graph,
    c: &PartialEdgeColoring,
    alpha: Color,
    beta: Color,
    a: VertexId,
    b: VertexId,
) -> Result<bool> {
    critical_skip(g, c, alpha, beta, a, b, None)
}

/// The `(alpha, beta, ab)` critical path, if there is one.
pub fn critical_path(
    g: &Graph,
    c: &PartialEdgeColoring,
    alpha: Color,
    beta: Color,
    a: VertexId,
    b: VertexId,
) -> Result<Option<BichromaticPath>> {
    Ok(
        maximal_path(g, c, alpha, beta, a, alpha)?
            .filter(|p| p.end() == b && p.last_color == alpha),
    )
}

/// Colors at `u` other than the color of `e`.
fn present_without(g: &Graph, c: &PartialEdgeColoring, u: VertexId, e: EdgeId) -> ColorSet {
    g.incident_edges(u)
        .iter()
        .filter(|&&f| f != e)
        .filter_map(|&f| c.get(f))
        .collect()
}

/// `F_x ∩ F_y` for the edge `e = xy`, ignoring `e`'s own color.
pub fn common_colors(g: &Graph, c: &PartialEdgeColoring, e: EdgeId) -> ColorSet {
    let (x, y) = g.endpoints(e);
    present_without(g, c, x, e).intersection(present_without(g, c, y, e))
}

/// Colors `alpha` in `F_x ∩ F_y` with an `(alpha, beta, xy)` critical path,
/// `e = xy` treated as uncolored.
pub fn blocking_colors(
    g: &Graph,
    c: &PartialEdgeColoring,
    e: EdgeId,
    beta: Color,
) -> Result<ColorSet> {
    let (x, y) = g.endpoints(e);
    let mut out = ColorSet::EMPTY;
    for alpha in common_colors(g, c, e).iter() {
        if critical_skip(g, c, alpha, beta, x, y, Some(e))? {
            out.insert(alpha);
        }
    }
    Ok(out)
}

/// Whether the candidate `beta` can be put on `e` without creating a
/// bichromatic cycle. If `e` is colored, it is judged as a recoloring.
pub fn is_valid(g: &Graph, c: &PartialEdgeColoring, e: EdgeId, beta: Color) -> Result<bool> {
    if !c.candidates(g, e).contains(beta) {
        return Err(Error::NotACandidate {
            edge: e,
            color: beta,
        });
    }
    Ok(blocking_colors(g, c, e, beta)?.is_empty())
}

/// Valid colors for `e`, ascending.
pub fn valid_colors(g: &Graph, c: &PartialEdgeColoring, e: EdgeId) -> Result<ColorSet> {
    let mut out = ColorSet::EMPTY;
    for beta in c.candidates(g, e).iter() {
        if blocking_colors(g, c, e, beta)?.is_empty() {
            out.insert(beta);
        }
    }
    Ok(out)
}

/// Valid colors for joining `x` and `y`, which must not be joined by a
/// colored edge: candidates outside `F_x ∪ F_y` with no critical path.
pub fn valid_between(
    g: &Graph,
    c: &PartialEdgeColoring,
    x: VertexId,
    y: VertexId,
) -> Result<ColorSet> {
    let skip = g.edge_between(x, y);
    let fx = c.present(g, x);
    let fy = c.present(g, y);
    let common = fx.intersection(fy);
    let mut out = ColorSet::EMPTY;
    'beta: for beta in c.palette().difference(fx.union(fy)).iter() {
        for alpha in common.iter() {
            if critical_skip(g, c, alpha, beta, x, y, skip)? {
                continue 'beta;
            }
        }
        out.insert(beta);
    }
    Ok(out)
}

/// Looks for a bichromatic cycle through the colored edge `e`.
pub fn cycle_through_edge(g: &Graph, c: &PartialEdgeColoring, e: EdgeId) -> Option<(Color, Color)> {
    let gamma = c.get(e)?;
    let (u, v) = g.endpoints(e);
    for delta in c.present(g, v).without(gamma).iter() {
        // leave u through e and see whether the walk comes back to u
        if let Err(Error::OnCycle { .. }) = walk(g, c, gamma, delta, u, gamma, None) {
            return Some((gamma, delta));
        }
    }
    None
}

/// Status of one candidate color for an uncolored edge `xy`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CandidateTag {
    Valid,
    /// Exactly one critical path, for `alpha`. `active` is the neighbor of
    /// `x` whose S-set holds `beta` through the path's second edge;
    /// `passive` lists the other neighbors `z` of `x` with `beta ∈ S_xz`.
    Weak {
        alpha: Color,
        path: BichromaticPath,
        active: VertexId,
        passive: Vec<VertexId>,
    },
    Strong {
        alphas: ColorSet,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorClassification {
    pub x: VertexId,
    pub y: VertexId,
    pub entries: Vec<(Color, CandidateTag)>,
}

impl ColorClassification {
    pub fn get(&self, beta: Color) -> Option<&CandidateTag> {
        self.entries
            .iter()
            .find(|(b, _)| *b == beta)
            .map(|(_, t)| t)
    }

    pub fn valid(&self) -> ColorSet {
        self.with(|t| matches!(t, CandidateTag::Valid))
    }

    pub fn weak(&self) -> ColorSet {
        self.with(|t| matches!(t, CandidateTag::Weak { .. }))
    }

    pub fn strong(&self) -> ColorSet {
        self.with(|t| matches!(t, CandidateTag::Strong { .. }))
    }

    /// Weak colors whose critical path leaves `x` through `z`.
    pub fn active_at(&self, z: VertexId) -> ColorSet {
        self.with(|t| matches!(t, CandidateTag::Weak { active, .. } if *active == z))
    }

    fn with(&self, pred: impl Fn(&CandidateTag) -> bool) -> ColorSet {
        self.entries
            .iter()
            .filter(|(_, t)| pred(t))
            .map(|(b, _)| *b)
            .collect()
    }
}

/// Tags every candidate of the pair `x`, `y` (an uncolored or absent edge)
/// as valid, weak or strong. Critical paths are oriented from `x`.
pub fn classify(
    g: &Graph,
    c: &PartialEdgeColoring,
    x: VertexId,
    y: VertexId,
) -> Result<ColorClassification> {
    let skip = g.edge_between(x, y);
    if let Some(e) = skip {
        if c.get(e).is_some() {
            return Err(Error::AlreadyColored(e));
        }
    }
    let fx = c.present(g, x);
    let fy = c.present(g, y);
    let common = fx.intersection(fy);
    let mut entries = Vec::new();
    for beta in c.palette().difference(fx.union(fy)).iter() {
        let mut alphas = ColorSet::EMPTY;
        for alpha in common.iter() {
            if critical_skip(g, c, alpha, beta, x, y, skip)? {
                alphas.insert(alpha);
            }
        }
        let tag = match alphas.len() {
            0 => CandidateTag::Valid,
            1 => {
                let alpha = alphas.min().expect("one element");
                let path = critical_path(g, c, alpha, beta, x, y)?
                    .ok_or_else(|| Error::internal("classify", "critical path vanished"))?;
                let active = path.vertices[1];
                let passive = g
                    .neighbors(x)
                    .filter(|&(z, _)| z != active && z != y && c.present(g, z).contains(beta))
                    .map(|(z, _)| z)
                    .collect();
                CandidateTag::Weak {
                    alpha,
                    path,
                    active,
                    passive,
                }
            }
            _ => CandidateTag::Strong { alphas },
        };
        entries.push((beta, tag));
    }
    Ok(ColorClassification { x, y, entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: u32) -> VertexId {
        VertexId(i)
    }

    fn c(i: u8) -> Color {
        Color::of(i)
    }

    fn colored(n: usize, edges: &[(u32, u32, u8)]) -> (Graph, PartialEdgeColoring, Vec<EdgeId>) {
        let mut g = Graph::with_vertices(n);
        let mut col = PartialEdgeColoring::new(6).unwrap();
        let mut es = Vec::new();
        for &(a, b, k) in edges {
            let e = g.add_edge(v(a), v(b)).unwrap();
            if k > 0 {
                col.assign(&g, e, c(k)).unwrap();
            }
            es.push(e);
        }
        (g, col, es)
    }

    #[test]
    fn whole_path_from_an_end() {
        let (g, col, _) = colored(3, &[(0, 1, 1), (1, 2, 2)]);
        let p = maximal_path(&g, &col, c(1), c(2), v(0), c(1))
            .unwrap()
            .unwrap();
        assert_eq!(p.vertices, vec![v(0), v(1), v(2)]);
        assert_eq!(p.last_color, c(2));
        assert_eq!(p.to_string(), "1,2: 0 -e0- 1 -e1- 2");
        assert_eq!(
            maximal_path(&g, &col, c(1), c(2), v(2), c(1)).unwrap(),
            None
        );
    }

    #[test]
    fn cycle_is_reported() {
        let (g, col, _) = colored(4, &[(0, 1, 1), (1, 2, 2), (2, 3, 1), (3, 0, 2)]);
        for i in 0..4 {
            assert!(matches!(
                maximal_path(&g, &col, c(1), c(2), v(i), c(1)),
                Err(Error::OnCycle { .. })
            ));
        }
        assert_eq!(
            maximal_path(&g, &col, c(1), c(1), v(0), c(1)),
            Err(Error::InvalidPair(c(1), c(1)))
        );
    }

    #[test]
    fn critical_path_odd_alternation() {
        // x=0 - 2 - 3 - y=1 colored 1,5,1 and xy uncolored
        let (g, col, _) = colored(4, &[(0, 2, 1), (2, 3, 5), (3, 1, 1), (0, 1, 0)]);
        assert!(exists_critical_path(&g, &col, c(1), c(5), v(0), v(1)).unwrap());
        assert!(!exists_critical_path(&g, &col, c(1), c(4), v(0), v(1)).unwrap());
        // ends elsewhere
        let (g, col, _) = colored(4, &[(0, 2, 1), (2, 3, 5), (0, 1, 0)]);
        assert!(!exists_critical_path(&g, &col, c(1), c(5), v(0), v(1)).unwrap());
    }

    #[test]
    fn weak_color_blocked_by_one_path() {
        // x=0 with F_x={1,2}, y=1 with F_y={1,2,3}; path x-b-w-y colored 2,5,2.
        let (g, col, es) = colored(
            7,
            &[
                (0, 2, 1),
                (0, 3, 2),
                (3, 4, 5),
                (4, 1, 2),
                (1, 5, 1),
                (1, 6, 3),
                (0, 1, 0),
            ],
        );
        let xy = es[6];
        assert!(exists_critical_path(&g, &col, c(2), c(5), v(0), v(1)).unwrap());
        assert!(!is_valid(&g, &col, xy, c(5)).unwrap());
        assert!(is_valid(&g, &col, xy, c(4)).unwrap());
        assert!(is_valid(&g, &col, xy, c(2)).is_err());
        let cls = classify(&g, &col, v(0), v(1)).unwrap();
        assert_eq!(cls.valid(), ColorSet::of(&[4, 6]));
        assert_eq!(cls.weak(), ColorSet::of(&[5]));
        assert_eq!(cls.active_at(v(3)), ColorSet::of(&[5]));
    }

    #[test]
    fn strong_color_has_two_paths() {
        // x=0 neighbors 2 (1), 3 (2); y=1 neighbors 4 (1), 5 (2), 6 (3).
        let (g, col, _) = colored(
            9,
            &[
                (0, 2, 1),
                (0, 3, 2),
                (1, 4, 1),
                (1, 5, 2),
                (1, 6, 3),
                (2, 4, 4),
                (3, 7, 4),
                (7, 8, 2),
                (8, 5, 4),
                (0, 1, 0),
            ],
        );
        // (1,4): 0 -1- 2 -4- 4 -1- 1 ; (2,4): 0 -2- 3 -4- 7 -2- 8 -4- 5 -2- 1
        let cls = classify(&g, &col, v(0), v(1)).unwrap();
        assert_eq!(cls.strong(), ColorSet::of(&[4]));
        assert_eq!(cls.valid(), ColorSet::of(&[5, 6]));
    }

    #[test]
    fn recoloring_validity_skips_own_edge() {
        // triangle 0-1-2 with pendant; recolor 0-1 from 1 to a new color
        let (g, col, es) = colored(4, &[(0, 1, 1), (1, 2, 2), (2, 0, 3), (2, 3, 4)]);
        assert_eq!(
            valid_colors(&g, &col, es[0]).unwrap(),
            ColorSet::of(&[1, 4, 5, 6])
        );
        assert_eq!(cycle_through_edge(&g, &col, es[0]), None);
    }

    #[test]
    fn path_through_interior_vertex() {
        let (g, col, _) = colored(5, &[(0, 1, 1), (1, 2, 2), (2, 3, 1), (3, 4, 2)]);
        let p = path_through(&g, &col, c(1), c(2), v(2)).unwrap().unwrap();
        assert_eq!(p.len(), 4);
        let ends = [p.start(), p.end()];
        assert!(ends.contains(&v(0)) && ends.contains(&v(4)));
        let q = path_through(&g, &col, c(1), c(2), v(0)).unwrap().unwrap();
        assert_eq!(q.len(), 4);
    }
}
