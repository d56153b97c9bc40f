//! Recolor and color-exchange moves, Configuration A, and the checks that
//! go with them.

use std::borrow::Cow;
use std::fmt;

use crate::color::{Color, PartialEdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::paths::{critical_path, exists_critical_path, maximal_path};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MoveKind {
    Assign {
        edge: EdgeId,
        color: Color,
    },
    Recolor {
        edge: EdgeId,
        old: Color,
        new: Color,
    },
    /// Swap the colors of `ui` and `uj`; `ci`, `cj` are the colors before.
    Exchange {
        u: VertexId,
        i: VertexId,
        j: VertexId,
        ci: Color,
        cj: Color,
    },
}

/// A move together with the label of the step that issued it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Move {
    pub kind: MoveKind,
    pub tag: Cow<'static, str>,
}

fn edge(g: &Graph, u: VertexId, v: VertexId) -> Result<EdgeId> {
    g.edge_between(u, v)
        .ok_or_else(|| Error::precondition(format!("{u} and {v} are not adjacent")))
}

fn color_of(c: &PartialEdgeColoring, e: EdgeId) -> Result<Color> {
    c.get(e).ok_or(Error::Uncolored(e))
}

impl Move {
    pub fn new(kind: MoveKind, tag: impl Into<Cow<'static, str>>) -> Self {
        Move {
            kind,
            tag: tag.into(),
        }
    }

    /// An exchange at `u` reading the current colors of `ui` and `uj`.
    pub fn exchange_from_live(
        g: &Graph,
        c: &PartialEdgeColoring,
        u: VertexId,
        i: VertexId,
        j: VertexId,
        tag: impl Into<Cow<'static, str>>,
    ) -> Result<Self> {
        let ci = color_of(c, edge(g, u, i)?)?;
        let cj = color_of(c, edge(g, u, j)?)?;
        Ok(Move::new(MoveKind::Exchange { u, i, j, ci, cj }, tag))
    }

    /// Applies the move, checking that the coloring is in the recorded
    /// state and stays proper.
    pub fn apply(&self, g: &Graph, c: &mut PartialEdgeColoring) -> Result<()> {
        match self.kind {
            MoveKind::Assign { edge, color } => c.assign(g, edge, color),
            MoveKind::Recolor { edge, old, new } => set_checked(g, c, edge, old, new),
            MoveKind::Exchange { u, i, j, ci, cj } => swap_checked(g, c, u, i, j, ci, cj),
        }
    }

    /// Restores the coloring from before [`Move::apply`].
    pub fn undo(&self, g: &Graph, c: &mut PartialEdgeColoring) -> Result<()> {
        match self.kind {
            MoveKind::Assign { edge, color } => {
                if c.get(edge) != Some(color) {
                    return Err(Error::precondition(format!(
                        "undo assign: {edge} does not carry {color}"
                    )));
                }
                c.unassign(edge);
                Ok(())
            }
            MoveKind::Recolor { edge, old, new } => set_checked(g, c, edge, new, old),
            MoveKind::Exchange { u, i, j, ci, cj } => swap_checked(g, c, u, i, j, cj, ci),
        }
    }
}

fn set_checked(
    g: &Graph,
    c: &mut PartialEdgeColoring,
    e: EdgeId,
    from: Color,
    to: Color,
) -> Result<()> {
    if !g.contains_edge(e) {
        return Err(Error::UnknownEdge(e));
    }
    if c.get(e) != Some(from) {
        return Err(Error::precondition(format!(
            "{e} does not carry color {from}"
        )));
    }
    if !c.candidates(g, e).contains(to) {
        return Err(Error::NotACandidate { edge: e, color: to });
    }
    c.set_unchecked(e, Some(to));
    Ok(())
}

fn swap_checked(
    g: &Graph,
    c: &mut PartialEdgeColoring,
    u: VertexId,
    i: VertexId,
    j: VertexId,
    ci: Color,
    cj: Color,
) -> Result<()> {
    let ei = edge(g, u, i)?;
    let ej = edge(g, u, j)?;
    if ei == ej {
        return Err(Error::precondition("exchange needs two distinct edges"));
    }
    if c.get(ei) != Some(ci) || c.get(ej) != Some(cj) {
        return Err(Error::precondition(format!(
            "exchange at {u}: expected colors {ci},{cj}"
        )));
    }
    let clash = |w: VertexId, own: EdgeId, col: Color| {
        g.incident_edges(w)
            .iter()
            .any(|&f| f != own && c.get(f) == Some(col))
    };
    if clash(i, ei, cj) || clash(j, ej, ci) {
        return Err(Error::NotConfigurationA);
    }
    c.set_unchecked(ei, Some(cj));
    c.set_unchecked(ej, Some(ci));
    Ok(())
}

impl fmt::Display for Move {
    /// One trace line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            MoveKind::Assign { edge, color } => write!(f, "ASSIGN {} {}", edge.0, color)?,
            MoveKind::Recolor { edge, old, new } => {
                write!(f, "RECOLOR {} {} {}", edge.0, old, new)?
            }
            MoveKind::Exchange { u, i, j, .. } => write!(f, "EXCHANGE {} {} {}", u.0, i.0, j.0)?,
        }
        if !self.tag.is_empty() {
            write!(f, " # {}", self.tag)?;
        }
        Ok(())
    }
}

/// Recolors the colored edge `e` with `gamma`, which must be absent from the
/// other edges at both ends. Recoloring to the current color is a no-op.
pub fn recolor(
    g: &Graph,
    c: &mut PartialEdgeColoring,
    e: EdgeId,
    gamma: Color,
    tag: impl Into<Cow<'static, str>>,
) -> Result<Move> {
    if !g.contains_edge(e) {
        return Err(Error::UnknownEdge(e));
    }
    let old = color_of(c, e)?;
    let mv = Move::new(
        MoveKind::Recolor {
            edge: e,
            old,
            new: gamma,
        },
        tag,
    );
    mv.apply(g, c)?;
    Ok(mv)
}

/// The tuple `(u, i, j, N', N'')`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigurationA {
    pub u: VertexId,
    pub i: VertexId,
    pub j: VertexId,
    pub n_prime: Vec<VertexId>,
    pub n_double_prime: Vec<VertexId>,
}

impl ConfigurationA {
    pub fn new(
        u: VertexId,
        i: VertexId,
        j: VertexId,
        n_prime: Vec<VertexId>,
        n_double_prime: Vec<VertexId>,
    ) -> Self {
        ConfigurationA {
            u,
            i,
            j,
            n_prime,
            n_double_prime,
        }
    }
}

/// Checks the structure of `cfg` and conditions 1 and 2 literally.
pub fn is_configuration_a(g: &Graph, c: &PartialEdgeColoring, cfg: &ConfigurationA) -> bool {
    check_configuration_a(g, c, cfg).unwrap_or(false)
}

fn check_configuration_a(g: &Graph, c: &PartialEdgeColoring, cfg: &ConfigurationA) -> Result<bool> {
    let u = cfg.u;
    if cfg.i == cfg.j {
        return Ok(false);
    }
    let mut rest: Vec<VertexId> = g
        .neighbors(u)
        .map(|(z, _)| z)
        .filter(|&z| z != cfg.i && z != cfg.j)
        .collect();
    let mut given: Vec<VertexId> = cfg
        .n_prime
        .iter()
        .chain(&cfg.n_double_prime)
        .copied()
        .collect();
    rest.sort_unstable();
    given.sort_unstable();
    if rest != given {
        return Ok(false);
    }
    let s_ui = c.s_set(g, u, cfg.i)?;
    let s_uj = c.s_set(g, u, cfg.j)?;
    let c_ui = color_of(c, edge(g, u, cfg.i)?)?;
    let c_uj = color_of(c, edge(g, u, cfg.j)?)?;
    if s_uj.contains(c_ui) || s_ui.contains(c_uj) {
        return Ok(false);
    }
    for &z in &cfg.n_prime {
        let c_uz = color_of(c, edge(g, u, z)?)?;
        if s_ui.contains(c_uz) || s_uj.contains(c_uz) {
            return Ok(false);
        }
    }
    for &h in &cfg.n_double_prime {
        color_of(c, edge(g, u, h)?)?;
    }
    Ok(true)
}

/// The only bichromatic cycles an exchange under Configuration A can
/// create pass through some `h` in `N''`, on colors `(alpha, c(uh))` with
/// `alpha` one of the two swapped colors. Returns the first one found.
pub fn exchange_cycle(
    g: &Graph,
    c: &PartialEdgeColoring,
    cfg: &ConfigurationA,
) -> Result<Option<(VertexId, Color, Color)>> {
    let u = cfg.u;
    let swapped = [
        color_of(c, edge(g, u, cfg.i)?)?,
        color_of(c, edge(g, u, cfg.j)?)?,
    ];
    for &h in &cfg.n_double_prime {
        let beta = color_of(c, edge(g, u, h)?)?;
        for alpha in swapped {
            match maximal_path(g, c, alpha, beta, u, beta) {
                Err(Error::OnCycle { .. }) => return Ok(Some((h, alpha, beta))),
                Err(e) => return Err(e),
                Ok(_) => {}
            }
        }
    }
    Ok(None)
}

/// Swaps the colors of `ui` and `uj`. Fails with `NotConfigurationA` unless
/// the tuple qualifies, and with `CycleCreated` (leaving the coloring
/// untouched) if the swap closes a cycle through `N''`.
pub fn color_exchange(
    g: &Graph,
    c: &mut PartialEdgeColoring,
    cfg: &ConfigurationA,
    tag: impl Into<Cow<'static, str>>,
) -> Result<Move> {
    if !is_configuration_a(g, c, cfg) {
        return Err(Error::NotConfigurationA);
    }
    let mv = Move::exchange_from_live(g, c, cfg.u, cfg.i, cfg.j, tag)?;
    mv.apply(g, c)?;
    if let Some((h, alpha, beta)) = exchange_cycle(g, c, cfg)? {
        mv.undo(g, c)?;
        return Err(Error::CycleCreated {
            through: h,
            alpha,
            beta,
        });
    }
    Ok(mv)
}

/// After a proper exchange of `ui`, `uj` at an interior vertex `u` of an
/// `(alpha, beta, ab)` critical path, checks that the path is gone.
#[allow(clippy::too_many_arguments)]
pub fn breaks_critical_path_check(
    g: &Graph,
    before: &PartialEdgeColoring,
    after: &PartialEdgeColoring,
    alpha: Color,
    beta: Color,
    a: VertexId,
    b: VertexId,
    u: VertexId,
    i: VertexId,
    j: VertexId,
) -> Result<bool> {
    let ci = color_of(before, edge(g, u, i)?)?;
    let cj = color_of(before, edge(g, u, j)?)?;
    if ![alpha, beta].iter().any(|&k| k == ci || k == cj) {
        return Err(Error::precondition(
            "neither exchanged color belongs to the path's pair",
        ));
    }
    if [i, j].iter().any(|&w| w == a || w == b) {
        return Err(Error::precondition("exchanged edges touch the path's ends"));
    }
    let path = critical_path(g, before, alpha, beta, a, b)?
        .ok_or_else(|| Error::precondition("no critical path before the exchange"))?;
    if !path.interior().contains(&u) {
        return Err(Error::precondition(
            "exchange vertex is not interior to the path",
        ));
    }
    Ok(!exists_critical_path(g, after, alpha, beta, a, b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{random_graph, random_partial_coloring, SeededRng};

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

    /// x=0 of degree 2 with a=1 (color 1), b=2 (color 2); both a and b see
    /// {4,5,6} on their other edges.
    fn degree_two_center() -> (Graph, PartialEdgeColoring) {
        let (g, col, _) = colored(
            9,
            &[
                (0, 1, 1),
                (0, 2, 2),
                (1, 3, 4),
                (1, 4, 5),
                (1, 5, 6),
                (2, 6, 4),
                (2, 7, 5),
                (2, 8, 6),
            ],
        );
        (g, col)
    }

    #[test]
    fn recolor_examples() {
        let (g, mut col) = degree_two_center();
        let xa = g.edge_between(v(0), v(1)).unwrap();
        let mv = recolor(&g, &mut col, xa, c(3), "t").unwrap();
        assert_eq!(col.get(xa), Some(c(3)));
        assert_eq!(mv.to_string(), "RECOLOR 0 1 3 # t");
        let same = recolor(&g, &mut col, xa, c(3), "noop").unwrap();
        assert_eq!(
            same.kind,
            MoveKind::Recolor {
                edge: xa,
                old: c(3),
                new: c(3)
            }
        );
        assert_eq!(
            recolor(&g, &mut col, xa, c(2), "t"),
            Err(Error::NotACandidate {
                edge: xa,
                color: c(2)
            })
        );
    }

    #[test]
    fn configuration_a_examples() {
        let (g, mut col) = degree_two_center();
        let cfg = ConfigurationA::new(v(0), v(1), v(2), vec![], vec![]);
        assert!(is_configuration_a(&g, &col, &cfg));
        let before = col.clone();
        let mv = color_exchange(&g, &mut col, &cfg, "swap").unwrap();
        assert_eq!(mv.to_string(), "EXCHANGE 0 1 2 # swap");
        assert_eq!(col.get(g.edge_between(v(0), v(1)).unwrap()), Some(c(2)));
        assert_eq!(col.verify_acyclic(&g), Ok(()));
        mv.undo(&g, &mut col).unwrap();
        assert_eq!(col, before);

        // put 2 into S(x,a): condition 1 fails
        let (g, mut col, es) = colored(5, &[(0, 1, 1), (0, 2, 2), (1, 3, 2), (2, 4, 4)]);
        let _ = es;
        let cfg = ConfigurationA::new(v(0), v(1), v(2), vec![], vec![]);
        assert!(!is_configuration_a(&g, &col, &cfg));
        assert_eq!(
            color_exchange(&g, &mut col, &cfg, "t"),
            Err(Error::NotConfigurationA)
        );
        // wrong partition of the remaining neighbors
        let cfg = ConfigurationA::new(v(0), v(1), v(2), vec![v(3)], vec![]);
        assert!(!is_configuration_a(&g, &col, &cfg));
    }

    #[test]
    fn exchange_with_check_vertex_blocked_by_third_color() {
        // a=0 with k1=1, k2=2, k3=3 and x=4; S(a,k1)=S(a,k2)={1,2,3} in
        // the new labels: c(a,k1)=4, c(a,k2)=5, c(a,k3)=6, c(a,x)=3.
        let (g, mut col, _) = colored(
            12,
            &[
                (0, 1, 4),
                (0, 2, 5),
                (0, 3, 6),
                (0, 4, 3),
                (1, 5, 1),
                (1, 6, 2),
                (1, 7, 3),
                (2, 8, 1),
                (2, 9, 2),
                (2, 10, 3),
                (4, 11, 1),
            ],
        );
        let cfg = ConfigurationA::new(v(0), v(1), v(2), vec![v(3)], vec![v(4)]);
        assert!(is_configuration_a(&g, &col, &cfg));
        color_exchange(&g, &mut col, &cfg, "t").unwrap();
        assert_eq!(col.verify_acyclic(&g), Ok(()));
    }

    #[test]
    fn exchange_closing_a_cycle_through_h_is_rejected() {
        // u=0, i=1 (1), j=2 (2), h=3 (3). Path 3-4-1 colored 2,3 so that
        // after the swap u-i carries 2 and 0-1-4-3-0 alternates 2,3.
        let (g, mut col, _) = colored(5, &[(0, 1, 1), (0, 2, 2), (0, 3, 3), (1, 4, 3), (4, 3, 2)]);
        let cfg = ConfigurationA::new(v(0), v(1), v(2), vec![], vec![v(3)]);
        assert!(is_configuration_a(&g, &col, &cfg));
        let before = col.clone();
        assert!(matches!(
            color_exchange(&g, &mut col, &cfg, "t"),
            Err(Error::CycleCreated { through, .. }) if through == v(3)
        ));
        assert_eq!(col, before);
    }

    #[test]
    fn exchange_at_interior_vertex_breaks_path() {
        // critical (1,4,xy) path x=0 -1- u=2 -4- w=3 -1- y=1; exchange at u
        // swaps the 4-edge with a 5-edge toward 4.
        let (g, before, _) = colored(5, &[(0, 2, 1), (2, 3, 4), (3, 1, 1), (2, 4, 5)]);
        assert!(exists_critical_path(&g, &before, c(1), c(4), v(0), v(1)).unwrap());
        let mut after = before.clone();
        let cfg = ConfigurationA::new(v(2), v(3), v(4), vec![], vec![v(0)]);
        color_exchange(&g, &mut after, &cfg, "t").unwrap();
        assert!(breaks_critical_path_check(
            &g,
            &before,
            &after,
            c(1),
            c(4),
            v(0),
            v(1),
            v(2),
            v(3),
            v(4)
        )
        .unwrap());
        // no prior path
        assert!(matches!(
            breaks_critical_path_check(
                &g,
                &before,
                &after,
                c(1),
                c(5),
                v(0),
                v(1),
                v(2),
                v(3),
                v(4)
            ),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn random_moves_are_invertible() {
        for seed in 0..300u64 {
            let mut rng = SeededRng::new(seed);
            let g = random_graph(9, 14, 4, &mut rng);
            let mut col = random_partial_coloring(&g, 6, 90, &mut rng);
            let start = col.clone();
            let mut done = Vec::new();
            for _ in 0..20 {
                let edges: Vec<EdgeId> = g.edges().filter(|&e| col.get(e).is_some()).collect();
                if edges.is_empty() {
                    break;
                }
                let e = edges[rng.below(edges.len() as u64) as usize];
                if rng.below(2) == 0 {
                    let cands: Vec<Color> = col.candidates(&g, e).iter().collect();
                    let k = cands[rng.below(cands.len() as u64) as usize];
                    done.push(recolor(&g, &mut col, e, k, "r").unwrap());
                } else {
                    let (u, i) = g.endpoints(e);
                    let Some((j, _)) = g
                        .neighbors(u)
                        .find(|&(w, f)| w != i && col.get(f).is_some())
                    else {
                        continue;
                    };
                    let mv = Move::exchange_from_live(&g, &col, u, i, j, "x").unwrap();
                    if mv.apply(&g, &mut col).is_ok() {
                        done.push(mv);
                    }
                }
            }
            for mv in done.iter().rev() {
                mv.undo(&g, &mut col).unwrap();
            }
            assert_eq!(col, start, "seed {seed}");
        }
    }
}
