//! Extending an acyclic coloring of `G - xy` to `xy`, where `x` has degree
//! 2 and `y` degree 3 in `G - xy`, and all other degrees are 4.
//!
//! The engine normalizes the situation to one of a few cases, relabels the
//! six colors so the case can be written against fixed labels, and applies
//! recolorings and exchanges until some candidate for `xy` becomes valid.
//! All candidates are retested after every move.

mod case2;
mod case3;

use std::fmt;

use crate::color::{Color, ColorMap, ColorSet, PartialEdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::moves::{self, ConfigurationA, Move};
use crate::paths::{cycle_through_edge, valid_between};

pub const DEFAULT_MOVE_BUDGET: usize = 50;
const MAX_ROUNDS: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Case {
    /// `F_x ∩ F_y` empty.
    One,
    /// `|F_x ∩ F_y| = 2`, and no color of `F_x ∪ F_y` appears in `S_xa ∪ S_xb`.
    TwoOne,
    /// `|F_x ∩ F_y| = 2`, otherwise.
    TwoTwo,
    /// `|F_x ∩ F_y| = 1`.
    Three,
}

impl Case {
    pub fn id(self) -> &'static str {
        match self {
            Case::One => "1",
            Case::TwoOne => "2.1",
            Case::TwoTwo => "2.2",
            Case::Three => "3",
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AssertLevel {
    /// Local cycle checks after every recoloring.
    #[default]
    Release,
    /// Additionally a full acyclicity check after every move.
    Debug,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtendOptions {
    pub assert_level: AssertLevel,
    pub move_budget: usize,
}

impl Default for ExtendOptions {
    fn default() -> Self {
        ExtendOptions {
            assert_level: AssertLevel::Release,
            move_budget: DEFAULT_MOVE_BUDGET,
        }
    }
}

/// A normalized extension problem. `labels` maps label `i` (1..=6) to the
/// actual color playing that role.
///
/// * `a`, `b`: neighbors of `x`, with `c(xa) = 1` and `c(xb) = 2`.
/// * `a2`, `b2`, `d2`: neighbors of `y`. In case 2 they are reached by
///   colors 1, 2, 3; in case 3 by 1, 3, 4.
/// * Colors 4..6 (case 2) or 5, 6 (case 3) are the candidates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionContext {
    pub case: Case,
    pub x: VertexId,
    pub y: VertexId,
    pub a: VertexId,
    pub b: VertexId,
    pub a2: VertexId,
    pub b2: VertexId,
    pub d2: VertexId,
    pub labels: ColorMap,
}

impl ExtensionContext {
    /// Actual color of label `k`.
    pub fn col(&self, k: u8) -> Color {
        self.labels.apply(Color::of(k))
    }

    pub fn set(&self, ks: &[u8]) -> ColorSet {
        ks.iter().map(|&k| self.col(k)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionOutcome {
    pub color: Color,
    pub moves: Vec<Move>,
    /// Step tags in the order they were taken.
    pub steps: Vec<&'static str>,
    pub cases: Vec<Case>,
}

fn neighbor_via(g: &Graph, c: &PartialEdgeColoring, u: VertexId, k: Color) -> Result<VertexId> {
    c.edge_with(g, u, k)
        .map(|(v, _)| v)
        .ok_or_else(|| Error::internal("normalize", format!("no edge of color {k} at {u}")))
}

fn sorted_pair(s: ColorSet) -> Result<(Color, Color)> {
    let mut it = s.iter();
    match (it.next(), it.next(), it.next()) {
        (Some(p), Some(q), None) => Ok((p, q)),
        _ => Err(Error::internal(
            "normalize",
            format!("expected two colors, got {s}"),
        )),
    }
}

type Incident = Vec<(VertexId, EdgeId)>;

fn check_shape(
    g: &Graph,
    c: &PartialEdgeColoring,
    x: VertexId,
    y: VertexId,
) -> Result<(Incident, Incident)> {
    if c.palette_size() != 6 {
        return Err(Error::precondition(
            "extension works on the 6-color palette",
        ));
    }
    let skip = g.edge_between(x, y);
    if let Some(e) = skip {
        if c.get(e).is_some() {
            return Err(Error::AlreadyColored(e));
        }
    }
    let nx: Vec<(VertexId, EdgeId)> = g.neighbors(x).filter(|&(v, _)| v != y).collect();
    let ny: Vec<(VertexId, EdgeId)> = g.neighbors(y).filter(|&(v, _)| v != x).collect();
    if nx.len() != 2 || ny.len() != 3 {
        return Err(Error::precondition(format!(
            "need deg(x) = 2 and deg(y) = 3 without xy, got {} and {}",
            nx.len(),
            ny.len()
        )));
    }
    if let Some(&(_, e)) = nx.iter().chain(&ny).find(|&&(_, e)| c.get(e).is_none()) {
        return Err(Error::Uncolored(e));
    }
    Ok((nx, ny))
}

/// Identifies the case and fixes labels and roles for the current coloring.
/// `xy` must be absent from `g` or uncolored.
pub fn normalize(
    g: &Graph,
    c: &PartialEdgeColoring,
    x: VertexId,
    y: VertexId,
) -> Result<ExtensionContext> {
    let (nx, ny) = check_shape(g, c, x, y)?;
    let fx = c.present(g, x);
    let fy = c.present(g, y);
    let common = fx.intersection(fy);
    let cands = c.palette().difference(fx.union(fy));
    let col = |e: EdgeId| c.get(e).expect("checked colored");

    let (case, a, b, images) = match common.len() {
        0 => {
            let mut images: Vec<u8> = fx.iter().chain(fy.iter()).map(Color::get).collect();
            images.extend(cands.iter().map(Color::get));
            (Case::One, nx[0].0, nx[1].0, images)
        }
        2 => {
            let s0 = c.s_set(g, x, nx[0].0)?;
            let s1 = c.s_set(g, x, nx[1].0)?;
            let f = fx.union(fy);
            let third = fy.difference(fx).min().expect("F_y has a third color");
            let cls = crate::paths::classify(g, c, x, y)?;
            if s0.union(s1).intersection(f).is_empty() {
                let (a, b) = if !cls.strong().is_empty() || cls.active_at(nx[0].0).len() >= 2 {
                    (nx[0].0, nx[1].0)
                } else {
                    (nx[1].0, nx[0].0)
                };
                let order: Vec<Color> = if cls.strong().is_empty() {
                    let active = cls.active_at(a);
                    let (p, q) = sorted_pair(active)
                        .or_else(|_| sorted_pair(ColorSet::from_iter(active.iter().take(2))))?;
                    let rest = cands.without(p).without(q);
                    [p, q].into_iter().chain(rest.iter()).collect()
                } else {
                    cands.iter().collect()
                };
                let mut images = vec![col(edge_to(&nx, a)).get(), col(edge_to(&nx, b)).get()];
                images.push(third.get());
                images.extend(order.iter().map(|k| k.get()));
                (Case::TwoOne, a, b, images)
            } else {
                let (a, b, sa) = if !s0.intersection(f).is_empty() {
                    (nx[0].0, nx[1].0, s0)
                } else {
                    (nx[1].0, nx[0].0, s1)
                };
                let five = cands
                    .difference(sa)
                    .min()
                    .ok_or_else(|| Error::internal("normalize", "S_xa holds every candidate"))?;
                let rest = cands.without(five);
                let strong = cls.strong().intersection(rest);
                let four = strong
                    .min()
                    .unwrap_or_else(|| rest.min().expect("three candidates"));
                let six = rest.without(four).min().expect("three candidates");
                let images = vec![
                    col(edge_to(&nx, a)).get(),
                    col(edge_to(&nx, b)).get(),
                    third.get(),
                    four.get(),
                    five.get(),
                    six.get(),
                ];
                (Case::TwoTwo, a, b, images)
            }
        }
        1 => {
            let one = common.min().expect("one common color");
            let (a, b) = if col(nx[0].1) == one {
                (nx[0].0, nx[1].0)
            } else {
                (nx[1].0, nx[0].0)
            };
            let (three, four) = sorted_pair(fy.without(one))?;
            let mut images = vec![
                one.get(),
                col(edge_to(&nx, b)).get(),
                three.get(),
                four.get(),
            ];
            images.extend(cands.iter().map(Color::get));
            (Case::Three, a, b, images)
        }
        k => {
            return Err(Error::internal(
                "normalize",
                format!("|F_x ∩ F_y| = {k} is impossible"),
            ))
        }
    };
    let labels = ColorMap::from_images(&images)
        .ok_or_else(|| Error::internal("normalize", format!("bad labeling {images:?}")))?;
    let via = |k: u8| neighbor_via(g, c, y, labels.apply(Color::of(k)));
    let (a2, b2, d2) = match case {
        Case::One => (ny[0].0, ny[1].0, ny[2].0),
        Case::TwoOne | Case::TwoTwo => (via(1)?, via(2)?, via(3)?),
        Case::Three => (via(1)?, via(3)?, via(4)?),
    };
    Ok(ExtensionContext {
        case,
        x,
        y,
        a,
        b,
        a2,
        b2,
        d2,
        labels,
    })
}

fn edge_to(list: &[(VertexId, EdgeId)], v: VertexId) -> EdgeId {
    list.iter()
        .find(|&&(w, _)| w == v)
        .expect("listed neighbor")
        .1
}

pub(crate) enum Step {
    Done(Color),
    Reenter,
}

/// Returns from the enclosing case as soon as a move makes some candidate
/// valid.
macro_rules! step {
    ($e:expr) => {
        if let Some(k) = $e? {
            return Ok($crate::extend::Step::Done(k));
        }
    };
}
pub(crate) use step;

pub(crate) struct Engine<'a> {
    pub g: &'a Graph,
    pub c: &'a mut PartialEdgeColoring,
    pub x: VertexId,
    pub y: VertexId,
    opts: ExtendOptions,
    moves: Vec<Move>,
    steps: Vec<&'static str>,
    cases: Vec<Case>,
}

impl<'a> Engine<'a> {
    fn retest(&self) -> Result<Option<Color>> {
        Ok(valid_between(self.g, self.c, self.x, self.y)?.min())
    }

    pub fn edge(&self, u: VertexId, v: VertexId) -> Result<EdgeId> {
        self.g
            .edge_between(u, v)
            .ok_or_else(|| Error::internal("engine", format!("no edge {u}-{v}")))
    }

    pub fn s(&self, u: VertexId, v: VertexId) -> Result<ColorSet> {
        self.c.s_set(self.g, u, v)
    }

    pub fn via(&self, u: VertexId, k: Color) -> Result<VertexId> {
        neighbor_via(self.g, self.c, u, k)
    }

    pub fn critical(&self, alpha: Color, beta: Color, u: VertexId, v: VertexId) -> Result<bool> {
        crate::paths::exists_critical_path(self.g, self.c, alpha, beta, u, v)
    }

    fn charge(&mut self, tag: &'static str) -> Result<()> {
        if self.moves.len() >= self.opts.move_budget {
            return Err(Error::internal(tag, "move budget exhausted"));
        }
        self.steps.push(tag);
        Ok(())
    }

    fn full_check(&self, tag: &'static str) -> Result<()> {
        if self.opts.assert_level == AssertLevel::Debug {
            self.c
                .verify_acyclic(self.g)
                .map_err(|v| Error::internal(tag, v.to_string()))?;
        }
        Ok(())
    }

    fn local_check(&self, e: EdgeId, tag: &'static str) -> Result<()> {
        if let Some((p, q)) = cycle_through_edge(self.g, self.c, e) {
            return Err(Error::internal(
                tag,
                format!("recoloring edge {e} closed a ({p},{q}) cycle"),
            ));
        }
        Ok(())
    }

    pub fn recolor(&mut self, e: EdgeId, to: Color, tag: &'static str) -> Result<Option<Color>> {
        self.recolor_all(&[(e, to)], tag)
    }

    /// Applies the recolorings in order and checks for cycles only after the
    /// last one; intermediate states may be cyclic.
    pub fn recolor_all(
        &mut self,
        list: &[(EdgeId, Color)],
        tag: &'static str,
    ) -> Result<Option<Color>> {
        self.charge(tag)?;
        for &(e, to) in list {
            let mv = moves::recolor(self.g, self.c, e, to, tag)
                .map_err(|err| Error::internal(tag, err.to_string()))?;
            self.moves.push(mv);
        }
        for &(e, _) in list {
            self.local_check(e, tag)?;
        }
        self.full_check(tag)?;
        self.retest()
    }

    pub fn exchange(&mut self, cfg: &ConfigurationA, tag: &'static str) -> Result<Option<Color>> {
        self.charge(tag)?;
        let mv = moves::color_exchange(self.g, self.c, cfg, tag)
            .map_err(|err| Error::internal(tag, err.to_string()))?;
        self.moves.push(mv);
        self.full_check(tag)?;
        self.retest()
    }

    pub fn fail(&self, tag: &'static str, detail: impl Into<String>) -> Error {
        Error::internal(tag, detail)
    }

    pub fn expect(&self, ok: bool, tag: &'static str, what: &str) -> Result<()> {
        if ok {
            Ok(())
        } else {
            Err(Error::internal(tag, format!("expected {what}")))
        }
    }
}

/// Finds a valid color for `xy`, recoloring `c` as needed. `xy` itself is
/// not colored; the caller does that with the returned color.
pub fn extend(
    g: &Graph,
    c: &mut PartialEdgeColoring,
    x: VertexId,
    y: VertexId,
    opts: &ExtendOptions,
) -> Result<ExtensionOutcome> {
    check_shape(g, c, x, y)?;
    let mut eng = Engine {
        g,
        c,
        x,
        y,
        opts: *opts,
        moves: Vec::new(),
        steps: Vec::new(),
        cases: Vec::new(),
    };
    for _ in 0..MAX_ROUNDS {
        if let Some(k) = eng.retest()? {
            return Ok(eng.finish(k));
        }
        let ctx = normalize(eng.g, eng.c, x, y)?;
        eng.cases.push(ctx.case);
        let step = match ctx.case {
            Case::One => return Err(Error::internal("case1", "a candidate should be valid")),
            Case::TwoOne => case2::case_2_1(&mut eng, &ctx)?,
            Case::TwoTwo => case2::case_2_2(&mut eng, &ctx)?,
            Case::Three => case3::case_3(&mut eng, &ctx)?,
        };
        if let Step::Done(k) = step {
            return Ok(eng.finish(k));
        }
    }
    Err(Error::internal("reentry", "too many re-entries"))
}

impl Engine<'_> {
    fn finish(self, color: Color) -> ExtensionOutcome {
        ExtensionOutcome {
            color,
            moves: self.moves,
            steps: self.steps,
            cases: self.cases,
        }
    }
}
