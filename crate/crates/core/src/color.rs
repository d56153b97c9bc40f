//! Colors, color sets, partial edge colorings and the acyclicity verifier.

use std::fmt::{self, Write as _};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};

/// Largest palette any coloring may use.
pub const MAX_COLORS: u8 = 7;

/// A color in `1..=7`. Colors `1..=6` form the working palette; `7` is only
/// used for the extra edge of each 4-regular component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Color(u8);

impl Color {
    pub const fn new(value: u8) -> Option<Color> {
        if value >= 1 && value <= MAX_COLORS {
            Some(Color(value))
        } else {
            None
        }
    }

    /// Panics unless `1 <= value <= 7`.
    pub const fn of(value: u8) -> Color {
        match Color::new(value) {
            Some(c) => c,
            None => panic!("color out of range"),
        }
    }

    #[inline]
    pub const fn get(self) -> u8 {
        self.0
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Bit set over the colors `1..=7`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ColorSet(u8);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    /// `{1, ..., k}`.
    pub fn palette(k: u8) -> ColorSet {
        debug_assert!(k <= MAX_COLORS);
        ColorSet((((1u16 << k) - 1) << 1) as u8)
    }

    pub fn of(colors: &[u8]) -> ColorSet {
        colors.iter().map(|&c| Color::of(c)).collect()
    }

    #[inline]
    pub fn contains(self, c: Color) -> bool {
        self.0 & (1 << c.0) != 0
    }

    #[inline]
    pub fn insert(&mut self, c: Color) {
        self.0 |= 1 << c.0;
    }

    #[inline]
    pub fn remove(&mut self, c: Color) {
        self.0 &= !(1 << c.0);
    }

    #[inline]
    pub fn without(self, c: Color) -> ColorSet {
        ColorSet(self.0 & !(1 << c.0))
    }

    #[inline]
    pub fn union(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: ColorSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn min(self) -> Option<Color> {
        self.iter().next()
    }

    pub fn iter(self) -> impl Iterator<Item = Color> {
        (1..=MAX_COLORS)
            .filter(move |&c| self.0 & (1 << c) != 0)
            .map(Color)
    }
}

impl FromIterator<Color> for ColorSet {
    fn from_iter<I: IntoIterator<Item = Color>>(iter: I) -> Self {
        let mut s = ColorSet::EMPTY;
        for c in iter {
            s.insert(c);
        }
        s
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_char('{')?;
        for (i, c) in self.iter().enumerate() {
            if i > 0 {
                f.write_char(',')?;
            }
            write!(f, "{c}")?;
        }
        f.write_char('}')
    }
}

/// A bijection of the palette `1..=7`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColorMap([u8; 8]);

impl Default for ColorMap {
    fn default() -> Self {
        Self::identity()
    }
}

impl ColorMap {
    pub fn identity() -> Self {
        ColorMap([0, 1, 2, 3, 4, 5, 6, 7])
    }

    /// Builds a map from `images[i] = image of color i+1` over `1..=k`,
    /// fixing colors above `k`. Returns `None` unless `images` is a
    /// permutation of `1..=k`.
    pub fn from_images(images: &[u8]) -> Option<Self> {
        let k = images.len();
        if k > MAX_COLORS as usize {
            return None;
        }
        let mut map = Self::identity();
        let mut hit = [false; 8];
        for (i, &img) in images.iter().enumerate() {
            if img == 0 || img as usize > k || hit[img as usize] {
                return None;
            }
            hit[img as usize] = true;
            map.0[i + 1] = img;
        }
        Some(map)
    }

    #[inline]
    pub fn apply(&self, c: Color) -> Color {
        Color(self.0[c.0 as usize])
    }

    pub fn apply_set(&self, s: ColorSet) -> ColorSet {
        s.iter().map(|c| self.apply(c)).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = Self::identity();
        for c in 1..=MAX_COLORS {
            inv.0[self.0[c as usize] as usize] = c;
        }
        inv
    }

    /// Images of `1..=k`.
    pub fn images(&self, k: u8) -> Vec<u8> {
        (1..=k).map(|c| self.0[c as usize]).collect()
    }

    pub fn swap_images(&mut self, a: Color, b: Color) {
        self.0.swap(a.0 as usize, b.0 as usize);
    }
}

/// Why a coloring fails verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    OutOfPalette {
        edge: EdgeId,
        color: Color,
    },
    Improper {
        at: VertexId,
        first: EdgeId,
        second: EdgeId,
    },
    BichromaticCycle {
        alpha: Color,
        beta: Color,
        edges: Vec<EdgeId>,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::OutOfPalette { edge, color } => {
                write!(f, "edge {edge} has color {color} outside the palette")
            }
            Violation::Improper { at, first, second } => {
                write!(f, "edges {first} and {second} share a color at vertex {at}")
            }
            Violation::BichromaticCycle { alpha, beta, edges } => {
                write!(f, "({alpha},{beta}) bichromatic cycle:")?;
                for e in edges {
                    write!(f, " {e}")?;
                }
                Ok(())
            }
        }
    }
}

/// Edge coloring over a fixed palette of 6 or 7 colors; edges may be
/// uncolored. Assignment enforces properness but not acyclicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialEdgeColoring {
    colors: Vec<u8>,
    palette: u8,
}

impl PartialEdgeColoring {
    pub fn new(palette: u8) -> Result<Self> {
        if palette != 6 && palette != 7 {
            return Err(Error::precondition(format!(
                "palette size must be 6 or 7, got {palette}"
            )));
        }
        Ok(PartialEdgeColoring {
            colors: Vec::new(),
            palette,
        })
    }

    pub fn palette_size(&self) -> u8 {
        self.palette
    }

    pub fn palette(&self) -> ColorSet {
        ColorSet::palette(self.palette)
    }

    #[inline]
    pub fn get(&self, e: EdgeId) -> Option<Color> {
        match self.colors.get(e.index()) {
            Some(&0) | None => None,
            Some(&c) => Some(Color(c)),
        }
    }

    /// Sets or clears a color with no checks.
    pub fn set_unchecked(&mut self, e: EdgeId, c: Option<Color>) {
        if e.index() >= self.colors.len() {
            if c.is_none() {
                return;
            }
            self.colors.resize(e.index() + 1, 0);
        }
        self.colors[e.index()] = c.map_or(0, |c| c.0);
    }

    /// Colors an uncolored live edge with a candidate color.
    pub fn assign(&mut self, g: &Graph, e: EdgeId, k: Color) -> Result<()> {
        if !g.contains_edge(e) {
            return Err(Error::UnknownEdge(e));
        }
        if self.get(e).is_some() {
            return Err(Error::AlreadyColored(e));
        }
        if !self.candidates(g, e).contains(k) {
            return Err(Error::NotACandidate { edge: e, color: k });
        }
        self.set_unchecked(e, Some(k));
        Ok(())
    }

    pub fn unassign(&mut self, e: EdgeId) -> Option<Color> {
        let old = self.get(e);
        self.set_unchecked(e, None);
        old
    }

    /// `F(u)`: colors on the colored live edges at `u`.
    pub fn present(&self, g: &Graph, u: VertexId) -> ColorSet {
        g.incident_edges(u)
            .iter()
            .filter_map(|&e| self.get(e))
            .collect()
    }

    /// `S(a, b) = F(b) - {c(ab)}`. Requires `ab` to be a colored live edge.
    pub fn s_set(&self, g: &Graph, a: VertexId, b: VertexId) -> Result<ColorSet> {
        let e = g
            .edge_between(a, b)
            .ok_or_else(|| Error::precondition(format!("{a} and {b} are not adjacent")))?;
        let c = self.get(e).ok_or(Error::Uncolored(e))?;
        Ok(self.present(g, b).without(c))
    }

    /// Palette minus the colors on edges adjacent to `e` (ignoring `e`'s own
    /// color, so recoloring candidates come out right).
    pub fn candidates(&self, g: &Graph, e: EdgeId) -> ColorSet {
        let (u, v) = g.endpoints(e);
        let mut used = ColorSet::EMPTY;
        for w in [u, v] {
            for &f in g.incident_edges(w) {
                if f != e {
                    if let Some(c) = self.get(f) {
                        used.insert(c);
                    }
                }
            }
        }
        self.palette().difference(used)
    }

    /// The edge at `u` carrying color `c`, with its other endpoint.
    #[inline]
    pub fn edge_with(&self, g: &Graph, u: VertexId, c: Color) -> Option<(VertexId, EdgeId)> {
        g.incident_edges(u)
            .iter()
            .find(|&&e| self.get(e) == Some(c))
            .map(|&e| (g.other_end(e, u), e))
    }

    pub fn colored_count(&self, g: &Graph) -> usize {
        g.edges().filter(|&e| self.get(e).is_some()).count()
    }

    pub fn is_total(&self, g: &Graph) -> bool {
        g.edges().all(|e| self.get(e).is_some())
    }

    pub fn colors_used(&self, g: &Graph) -> ColorSet {
        g.edges().filter_map(|e| self.get(e)).collect()
    }

    /// Renames every color through `map`.
    pub fn permute(&mut self, map: &ColorMap) {
        for c in self.colors.iter_mut().filter(|c| **c != 0) {
            *c = map.apply(Color(*c)).0;
        }
    }

    /// A cycle alternating `alpha` and `beta`, if any.
    pub fn find_bichromatic_cycle(
        &self,
        g: &Graph,
        alpha: Color,
        beta: Color,
    ) -> Result<Option<Vec<EdgeId>>> {
        if alpha == beta {
            return Err(Error::InvalidPair(alpha, beta));
        }
        Ok(self.cycle_for_pair(g, alpha, beta))
    }

    // The (alpha, beta) subgraph has maximum degree 2 on a proper coloring.
    // Paths are swept from their endpoints first; any vertex left unvisited
    // with both colors then lies on a cycle.
    fn cycle_for_pair(&self, g: &Graph, alpha: Color, beta: Color) -> Option<Vec<EdgeId>> {
        let mut visited = vec![false; g.vertex_bound()];
        let walk = |start: VertexId, first: Color, visited: &mut Vec<bool>| -> Vec<EdgeId> {
            let mut edges = Vec::new();
            let mut at = start;
            let mut want = first;
            visited[at.index()] = true;
            while let Some((next, e)) = self.edge_with(g, at, want) {
                edges.push(e);
                if next == start {
                    break;
                }
                at = next;
                visited[at.index()] = true;
                want = if want == alpha { beta } else { alpha };
            }
            edges
        };
        for v in g.vertices() {
            if visited[v.index()] {
                continue;
            }
            let a = self.edge_with(g, v, alpha).is_some();
            let b = self.edge_with(g, v, beta).is_some();
            if a != b {
                walk(v, if a { alpha } else { beta }, &mut visited);
            }
        }
        for v in g.vertices() {
            if visited[v.index()] {
                continue;
            }
            if self.edge_with(g, v, alpha).is_some() && self.edge_with(g, v, beta).is_some() {
                return Some(walk(v, alpha, &mut visited));
            }
        }
        None
    }

    /// Checks palette range, properness and absence of bichromatic cycles on
    /// the colored live edges.
    pub fn verify_acyclic(&self, g: &Graph) -> std::result::Result<(), Violation> {
        let palette = self.palette();
        let mut used = ColorSet::EMPTY;
        for e in g.edges() {
            if let Some(c) = self.get(e) {
                if !palette.contains(c) {
                    return Err(Violation::OutOfPalette { edge: e, color: c });
                }
                used.insert(c);
            }
        }
        for v in g.vertices() {
            let inc = g.incident_edges(v);
            for (i, &e) in inc.iter().enumerate() {
                let Some(ce) = self.get(e) else { continue };
                for &f in &inc[i + 1..] {
                    if self.get(f) == Some(ce) {
                        return Err(Violation::Improper {
                            at: v,
                            first: e,
                            second: f,
                        });
                    }
                }
            }
        }
        let colors: Vec<Color> = used.iter().collect();
        for (i, &alpha) in colors.iter().enumerate() {
            for &beta in &colors[i + 1..] {
                if let Some(edges) = self.cycle_for_pair(g, alpha, beta) {
                    return Err(Violation::BichromaticCycle { alpha, beta, edges });
                }
            }
        }
        Ok(())
    }

    /// Lines `u v color` for every colored live edge in edge order, then
    /// `palette k`.
    pub fn to_text(&self, g: &Graph) -> String {
        let mut out = String::new();
        for e in g.edges() {
            if let Some(c) = self.get(e) {
                let (u, v) = g.endpoints(e);
                writeln!(out, "{} {} {}", u.0, v.0, c).unwrap();
            }
        }
        writeln!(out, "palette {}", self.palette).unwrap();
        out
    }

    pub fn parse_text(g: &Graph, text: &str) -> Result<Self> {
        let mut colors: Vec<(EdgeId, Color)> = Vec::new();
        let mut palette = None;
        let mut last_line = 0;
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            last_line = line_no;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if palette.is_some() {
                return Err(Error::parse(line_no, "content after the palette line"));
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            let num = |t: &str| {
                t.parse::<u32>()
                    .map_err(|_| Error::parse(line_no, format!("not an integer: {t:?}")))
            };
            match toks.as_slice() {
                ["palette", k] => palette = Some(num(k)?),
                [u, v, c] => {
                    let (u, v, c) = (num(u)?, num(v)?, num(c)?);
                    let e = g
                        .edge_between(VertexId(u), VertexId(v))
                        .ok_or_else(|| Error::parse(line_no, format!("no edge {u}-{v}")))?;
                    let c = u8::try_from(c)
                        .ok()
                        .and_then(Color::new)
                        .ok_or_else(|| Error::parse(line_no, format!("bad color {c}")))?;
                    colors.push((e, c));
                }
                _ => {
                    return Err(Error::parse(
                        line_no,
                        "expected \"u v color\" or \"palette k\"",
                    ))
                }
            }
        }
        let k = palette.ok_or_else(|| Error::parse(last_line.max(1), "missing palette line"))?;
        let mut out = PartialEdgeColoring::new(
            u8::try_from(k).map_err(|_| Error::parse(last_line, "bad palette size"))?,
        )
        .map_err(|_| Error::parse(last_line, format!("palette must be 6 or 7, got {k}")))?;
        for (e, c) in colors {
            if out.get(e).is_some() {
                let (u, v) = g.endpoints(e);
                return Err(Error::parse(0, format!("edge {u}-{v} colored twice")));
            }
            out.set_unchecked(e, Some(c));
        }
        Ok(out)
    }
}
