//! Seeded graph generators and the small-graph enumerator.
//!
//! All randomness comes from [`SeededRng`], a ChaCha8 stream keyed by the
//! 64-bit seed, so a spec string plus seed always yields the same edge list.

use std::fmt;
use std::str::FromStr;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::color::PartialEdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, MAX_DEGREE};
use crate::paths::valid_colors;

/// ChaCha8 keyed with the little-endian seed in bytes `0..8` of the 32-byte
/// key (the rest zero), stream 0. Bounded draws use the multiply-shift
/// reduction `(x * n) >> 64` on one 64-bit output.
#[derive(Debug, Clone)]
pub struct SeededRng(ChaCha8Rng);

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        let mut key = [0u8; 32];
        key[..8].copy_from_slice(&seed.to_le_bytes());
        SeededRng(ChaCha8Rng::from_seed(key))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform-ish draw in `0..n`. Panics if `n == 0`.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0, "empty range");
        ((self.next_u64() as u128 * n as u128) >> 64) as u64
    }

    pub fn range(&mut self, lo: u64, hi_inclusive: u64) -> u64 {
        lo + self.below(hi_inclusive - lo + 1)
    }

    /// Fisher-Yates from the back.
    pub fn shuffle<T>(&mut self, xs: &mut [T]) {
        for i in (1..xs.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            xs.swap(i, j);
        }
    }
}

/// A generator family with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorSpec {
    Cycle(usize),
    Complete(usize),
    CompleteMinusEdge(usize),
    Circulant(usize, Vec<usize>),
    RandomValid { n: usize, m: usize, seed: u64 },
    Random4Regular { n: usize, seed: u64 },
    SubcubicRandom { n: usize, m: usize, seed: u64 },
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorSpec::Cycle(n) => write!(f, "cycle({n})"),
            GeneratorSpec::Complete(n) => write!(f, "complete({n})"),
            GeneratorSpec::CompleteMinusEdge(n) => write!(f, "complete_minus_edge({n})"),
            GeneratorSpec::Circulant(n, offs) => {
                write!(f, "circulant({n},{{")?;
                for (i, d) in offs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{d}")?;
                }
                f.write_str("})")
            }
            GeneratorSpec::RandomValid { n, m, seed } => write!(f, "random_valid({n},{m},{seed})"),
            GeneratorSpec::Random4Regular { n, seed } => write!(f, "random_4regular({n},{seed})"),
            GeneratorSpec::SubcubicRandom { n, m, seed } => {
                write!(f, "subcubic_random({n},{m},{seed})")
            }
        }
    }
}

impl FromStr for GeneratorSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::InfeasibleSpec(format!("{s:?}: {msg}"));
        let s_trim: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let open = s_trim
            .find('(')
            .ok_or_else(|| bad("expected family(args)"))?;
        if !s_trim.ends_with(')') {
            return Err(bad("missing closing parenthesis"));
        }
        let name = &s_trim[..open];
        let inner = s_trim[open + 1..s_trim.len() - 1].replace(['{', '}'], "");
        let args: Vec<u64> = if inner.is_empty() {
            Vec::new()
        } else {
            inner
                .split(',')
                .map(|t| {
                    t.parse::<u64>()
                        .map_err(|_| bad("arguments must be integers"))
                })
                .collect::<Result<_>>()?
        };
        let arity = |k: usize| {
            if args.len() == k {
                Ok(())
            } else {
                Err(bad(&format!("{name} takes {k} arguments")))
            }
        };
        let u = |x: u64| x as usize;
        Ok(match name {
            "cycle" => {
                arity(1)?;
                GeneratorSpec::Cycle(u(args[0]))
            }
            "complete" => {
                arity(1)?;
                GeneratorSpec::Complete(u(args[0]))
            }
            "complete_minus_edge" => {
                arity(1)?;
                GeneratorSpec::CompleteMinusEdge(u(args[0]))
            }
            "circulant" => {
                if args.len() < 2 {
                    return Err(bad("circulant takes n and at least one offset"));
                }
                GeneratorSpec::Circulant(u(args[0]), args[1..].iter().map(|&d| u(d)).collect())
            }
            "random_valid" => {
                arity(3)?;
                GeneratorSpec::RandomValid {
                    n: u(args[0]),
                    m: u(args[1]),
                    seed: args[2],
                }
            }
            "random_4regular" => {
                arity(2)?;
                GeneratorSpec::Random4Regular {
                    n: u(args[0]),
                    seed: args[1],
                }
            }
            "subcubic_random" => {
                arity(3)?;
                GeneratorSpec::SubcubicRandom {
                    n: u(args[0]),
                    m: u(args[1]),
                    seed: args[2],
                }
            }
            _ => return Err(bad("unknown family")),
        })
    }
}

/// Builds the graph described by `spec`.
pub fn generate(spec: &GeneratorSpec) -> Result<Graph> {
    match *spec {
        GeneratorSpec::Cycle(n) => cycle(n),
        GeneratorSpec::Complete(n) => complete(n),
        GeneratorSpec::CompleteMinusEdge(n) => complete_minus_edge(n),
        GeneratorSpec::Circulant(n, ref offs) => circulant(n, offs),
        GeneratorSpec::RandomValid { n, m, seed } => random_valid(n, m, seed),
        GeneratorSpec::Random4Regular { n, seed } => random_4regular(n, seed),
        GeneratorSpec::SubcubicRandom { n, m, seed } => subcubic_random(n, m, seed),
    }
}

fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
    let mut g = Graph::with_vertices(n);
    for (a, b) in pairs {
        g.add_edge(VertexId(a as u32), VertexId(b as u32))?;
    }
    Ok(g)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InfeasibleSpec(format!(
            "cycle needs n >= 3, got {n}"
        )));
    }
    from_pairs(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    if !(1..=5).contains(&n) {
        return Err(Error::InfeasibleSpec(format!(
            "complete needs 1 <= n <= 5, got {n}"
        )));
    }
    from_pairs(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))))
}

/// `K_n` without the edge `0-1`.
pub fn complete_minus_edge(n: usize) -> Result<Graph> {
    if !(2..=5).contains(&n) {
        return Err(Error::InfeasibleSpec(format!(
            "complete_minus_edge needs 2 <= n <= 5, got {n}"
        )));
    }
    from_pairs(
        n,
        (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|&p| p != (0, 1)),
    )
}

/// `C_n(offsets)`: vertex `i` joined to `i ± d` for each offset `d`.
pub fn circulant(n: usize, offsets: &[usize]) -> Result<Graph> {
    let bad = |msg: String| Err(Error::InfeasibleSpec(msg));
    if n < 3 {
        return bad(format!("circulant needs n >= 3, got {n}"));
    }
    let mut offs = offsets.to_vec();
    offs.sort_unstable();
    offs.dedup();
    if offs.len() != offsets.len() {
        return bad("repeated offset".into());
    }
    let mut degree = 0;
    for &d in &offs {
        if d == 0 || 2 * d > n {
            return bad(format!("offset {d} must lie in 1..={}", n / 2));
        }
        degree += if 2 * d == n { 1 } else { 2 };
    }
    if degree > MAX_DEGREE {
        return bad(format!("circulant degree {degree} exceeds 4"));
    }
    let mut pairs = Vec::new();
    for &d in &offs {
        let count = if 2 * d == n { n / 2 } else { n };
        pairs.extend((0..count).map(|i| (i, (i + d) % n)));
    }
    from_pairs(n, pairs)
}

/// Simple adjacency used while generating; converted to a [`Graph`] at the
/// end so edge ids come out dense.
struct Builder {
    adj: Vec<Vec<u32>>,
    cap: usize,
}

impl Builder {
    fn new(n: usize, cap: usize) -> Self {
        Builder {
            adj: vec![Vec::with_capacity(cap); n],
            cap,
        }
    }

    fn has(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(&(b as u32))
    }

    fn deg(&self, a: usize) -> usize {
        self.adj[a].len()
    }

    fn can_add(&self, a: usize, b: usize) -> bool {
        a != b && self.deg(a) < self.cap && self.deg(b) < self.cap && !self.has(a, b)
    }

    fn add(&mut self, a: usize, b: usize) {
        self.adj[a].push(b as u32);
        self.adj[b].push(a as u32);
    }

    fn remove(&mut self, a: usize, b: usize) {
        self.adj[a].retain(|&x| x as usize != b);
        self.adj[b].retain(|&x| x as usize != a);
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (a, ns) in self.adj.iter().enumerate() {
            for &b in ns {
                if a < b as usize {
                    out.push((a, b as usize));
                }
            }
        }
        out
    }

    /// Smallest vertex of each component.
    fn component_roots(&self) -> Vec<usize> {
        let n = self.adj.len();
        let mut seen = vec![false; n];
        let mut roots = Vec::new();
        for r in 0..n {
            if seen[r] {
                continue;
            }
            roots.push(r);
            seen[r] = true;
            let mut stack = vec![r];
            while let Some(a) = stack.pop() {
                for &x in &self.adj[a] {
                    if !seen[x as usize] {
                        seen[x as usize] = true;
                        stack.push(x as usize);
                    }
                }
            }
        }
        roots
    }

    fn connected(&self) -> bool {
        let n = self.adj.len();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(a) = stack.pop() {
            for &b in &self.adj[a] {
                if !seen[b as usize] {
                    seen[b as usize] = true;
                    count += 1;
                    stack.push(b as usize);
                }
            }
        }
        count == n
    }

    fn into_graph(self) -> Graph {
        let n = self.adj.len();
        from_pairs(n, self.edges()).expect("builder keeps the graph simple")
    }
}

/// Connected graph with degree cap `cap` and exactly `m` edges: random
/// spanning tree by attachment, then random edges between deficient
/// vertices. When sampling stalls, an edge `pq` is traded for `up` and `vq`
/// with `u`, `v` deficient, which keeps the graph connected.
fn random_connected(n: usize, m: usize, cap: usize, seed: u64, family: &str) -> Result<Graph> {
    let max_m = (n * cap / 2).min(n * n.saturating_sub(1) / 2);
    if n < 2 || m + 1 < n || m > max_m {
        return Err(Error::InfeasibleSpec(format!(
            "{family}({n},{m}): need n >= 2 and n-1 <= m <= {max_m}"
        )));
    }
    let mut rng = SeededRng::new(seed);
    let mut b = Builder::new(n, cap);
    let mut order: Vec<usize> = (0..n).collect();
    rng.shuffle(&mut order);
    // vertices of the tree that still have a free slot
    let mut open = vec![order[0]];
    for &v in &order[1..] {
        let i = rng.below(open.len() as u64) as usize;
        let u = open[i];
        b.add(u, v);
        if b.deg(u) == cap {
            open.swap_remove(i);
        }
        open.push(v);
    }
    let mut added = n - 1;
    let mut deficient: Vec<usize> = (0..n).filter(|&v| b.deg(v) < cap).collect();
    let mut stalls = 0;
    while added < m {
        if deficient.len() >= 2 && stalls < 32 {
            let i = rng.below(deficient.len() as u64) as usize;
            let j = rng.below(deficient.len() as u64) as usize;
            let (u, v) = (deficient[i], deficient[j]);
            // saturated entries are dropped lazily
            if b.deg(u) == cap || b.deg(v) == cap {
                let k = if b.deg(u) == cap { i } else { j };
                deficient.swap_remove(k);
                continue;
            }
            if b.can_add(u, v) {
                b.add(u, v);
                added += 1;
                stalls = 0;
                continue;
            }
            stalls += 1;
            continue;
        }
        stalls = 0;
        deficient.retain(|&w| b.deg(w) < cap);
        if let Some((u, v)) = direct_pair(&b, &deficient) {
            b.add(u, v);
        } else if !rewire(&mut b, &deficient, &mut rng) {
            return Err(Error::InfeasibleSpec(format!(
                "{family}({n},{m},{seed}): no way to place edge {}",
                added + 1
            )));
        }
        added += 1;
        deficient.retain(|&w| b.deg(w) < cap);
    }
    debug_assert!(b.connected());
    Ok(b.into_graph())
}

fn direct_pair(b: &Builder, deficient: &[usize]) -> Option<(usize, usize)> {
    for (i, &u) in deficient.iter().enumerate() {
        for &v in &deficient[i + 1..] {
            if b.can_add(u, v) {
                return Some((u, v));
            }
        }
    }
    None
}

/// Replaces some edge `pq` with `up`, `vq` for deficient `u`, `v` (`u == v`
/// allowed when `u` has two free slots). Adds one edge net.
fn rewire(b: &mut Builder, deficient: &[usize], rng: &mut SeededRng) -> bool {
    let mut pairs = Vec::new();
    for (i, &u) in deficient.iter().enumerate() {
        if b.deg(u) + 2 <= b.cap {
            pairs.push((u, u));
        }
        for &v in &deficient[i + 1..] {
            pairs.push((u, v));
        }
    }
    let edges = b.edges();
    if edges.is_empty() {
        return false;
    }
    let start = rng.below(edges.len() as u64) as usize;
    for &(u, v) in &pairs {
        for k in 0..edges.len() {
            let (p0, q0) = edges[(start + k) % edges.len()];
            for (p, q) in [(p0, q0), (q0, p0)] {
                let fresh = |x: usize, y: usize| x != y && !b.has(x, y);
                if p == u || p == v || q == u || q == v {
                    continue;
                }
                if fresh(u, p) && fresh(v, q) && (u != v || p != q) {
                    b.remove(p, q);
                    b.add(u, p);
                    b.add(v, q);
                    return true;
                }
            }
        }
    }
    false
}

/// Connected graph with maximum degree at most 4 and `m` edges,
/// `n - 1 <= m <= 2n - 1`.
pub fn random_valid(n: usize, m: usize, seed: u64) -> Result<Graph> {
    if m + 1 > 2 * n {
        return Err(Error::InfeasibleSpec(format!(
            "random_valid({n},{m}): m must be at most 2n-1"
        )));
    }
    random_connected(n, m, MAX_DEGREE, seed, "random_valid")
}

/// Connected graph with maximum degree at most 3.
pub fn subcubic_random(n: usize, m: usize, seed: u64) -> Result<Graph> {
    random_connected(n, m, 3, seed, "subcubic_random")
}

/// Connected 4-regular graph: `C_n(1,2)` scrambled by `8n` random
/// double-edge swaps, each kept if the graph stays simple. Components left
/// over at the end are joined by one more swap each; a 4-regular graph has
/// no bridges, so taking an edge out of each of two components and
/// crossing them joins the two.
pub fn random_4regular(n: usize, seed: u64) -> Result<Graph> {
    if n < 5 {
        return Err(Error::InfeasibleSpec(format!(
            "random_4regular needs n >= 5, got {n}"
        )));
    }
    let mut rng = SeededRng::new(seed);
    let mut b = Builder::new(n, MAX_DEGREE);
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(2 * n);
    for d in [1, 2] {
        for i in 0..n {
            edges.push((i, (i + d) % n));
        }
    }
    for &(a, c) in &edges {
        b.add(a, c);
    }
    let m = edges.len() as u64;
    for _ in 0..8 * n {
        let i = rng.below(m) as usize;
        let j = rng.below(m) as usize;
        if i == j {
            continue;
        }
        let (a, bb) = edges[i];
        let (mut c, mut d) = edges[j];
        if rng.below(2) == 1 {
            std::mem::swap(&mut c, &mut d);
        }
        if a == c || a == d || bb == c || bb == d || b.has(a, c) || b.has(bb, d) {
            continue;
        }
        b.remove(a, bb);
        b.remove(c, d);
        b.add(a, c);
        b.add(bb, d);
        edges[i] = (a, c);
        edges[j] = (bb, d);
    }
    let comps = b.component_roots();
    for &r in &comps[1..] {
        let (a, bb) = (comps[0], b.adj[comps[0]][0] as usize);
        let (c, d) = (r, b.adj[r][0] as usize);
        b.remove(a, bb);
        b.remove(c, d);
        b.add(a, c);
        b.add(bb, d);
    }
    Ok(b.into_graph())
}

/// Random simple graph on `n` vertices with at most `m_max` edges and
/// maximum degree `max_deg`; not necessarily connected. For tests.
pub fn random_graph(n: usize, m_max: usize, max_deg: usize, rng: &mut SeededRng) -> Graph {
    let mut b = Builder::new(n, max_deg);
    if n >= 2 {
        let target = rng.below(m_max as u64 + 1) as usize;
        let mut placed = 0;
        for _ in 0..4 * m_max {
            if placed == target {
                break;
            }
            let u = rng.below(n as u64) as usize;
            let v = rng.below(n as u64) as usize;
            if b.can_add(u, v) {
                b.add(u, v);
                placed += 1;
            }
        }
    }
    b.into_graph()
}

/// Random acyclic partial coloring: edges are visited in random order and
/// each, with probability `fill_percent`%, gets a uniformly chosen valid
/// color (left uncolored if there is none). For tests.
pub fn random_partial_coloring(
    g: &Graph,
    palette: u8,
    fill_percent: u64,
    rng: &mut SeededRng,
) -> PartialEdgeColoring {
    let mut c = PartialEdgeColoring::new(palette).expect("palette is 6 or 7");
    let mut order: Vec<_> = g.edges().collect();
    rng.shuffle(&mut order);
    for e in order {
        if rng.below(100) >= fill_percent {
            continue;
        }
        let valid: Vec<_> = valid_colors(g, &c, e)
            .expect("coloring stays acyclic")
            .iter()
            .collect();
        if !valid.is_empty() {
            let k = valid[rng.below(valid.len() as u64) as usize];
            c.set_unchecked(e, Some(k));
        }
    }
    c
}

/// Every labeled connected graph on exactly `n` vertices with maximum degree
/// at most `max_deg` and at most `max_m` edges, in lexicographic order of
/// edge masks. Practical for `n <= 6`.
pub fn enumerate_connected(n: usize, max_deg: usize, max_m: usize) -> Vec<Graph> {
    assert!((1..=7).contains(&n), "enumeration limited to n <= 7");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << pairs.len()) {
        let m = mask.count_ones() as usize;
        if m > max_m || m + 1 < n {
            continue;
        }
        let mut deg = [0usize; 7];
        let mut ok = true;
        for (i, &(a, b)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                deg[a] += 1;
                deg[b] += 1;
                if deg[a] > max_deg || deg[b] > max_deg {
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            continue;
        }
        let g = from_pairs(
            n,
            pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p),
        )
        .expect("enumerated pairs are simple");
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::write_edge_list;

    #[test]
    fn rng_is_reproducible() {
        let mut a = SeededRng::new(7);
        let mut b = SeededRng::new(7);
        let xs: Vec<u64> = (0..8).map(|_| a.next_u64()).collect();
        let ys: Vec<u64> = (0..8).map(|_| b.next_u64()).collect();
        assert_eq!(xs, ys);
        assert_ne!(SeededRng::new(8).next_u64(), xs[0]);
        for _ in 0..1000 {
            assert!(a.below(7) < 7);
        }
    }

    #[test]
    fn spec_round_trip() {
        for s in [
            "cycle(5)",
            "complete(5)",
            "complete_minus_edge(5)",
            "circulant(8,{1,2})",
            "random_valid(100,199,42)",
            "random_4regular(20,3)",
            "subcubic_random(10,12,1)",
        ] {
            let spec: GeneratorSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert_eq!(
            "circulant(8, 1, 2)".parse::<GeneratorSpec>().unwrap(),
            GeneratorSpec::Circulant(8, vec![1, 2])
        );
        assert!("nope(3)".parse::<GeneratorSpec>().is_err());
        assert!("cycle(3".parse::<GeneratorSpec>().is_err());
        assert!("cycle(3,4)".parse::<GeneratorSpec>().is_err());
    }

    #[test]
    fn fixed_families() {
        let c5 = cycle(5).unwrap();
        assert_eq!((c5.vertex_count(), c5.edge_count()), (5, 5));
        let k5 = complete(5).unwrap();
        assert_eq!(k5.edge_count(), 10);
        let k5e = complete_minus_edge(5).unwrap();
        assert_eq!(k5e.edge_count(), 9);
        assert!(k5e.edge_between(VertexId(0), VertexId(1)).is_none());
        let c8 = circulant(8, &[1, 2]).unwrap();
        assert_eq!(c8.edge_count(), 16);
        assert!(c8.vertices().all(|v| c8.degree(v) == 4));
        assert!(circulant(8, &[1, 2, 3]).is_err());
        assert_eq!(circulant(6, &[3]).unwrap().edge_count(), 3);
        assert!(complete(6).is_err());
    }

    #[test]
    fn random_valid_meets_its_contract() {
        for seed in 0..200 {
            let mut rng = SeededRng::new(seed);
            let n = rng.range(5, 60) as usize;
            let m = rng.range(n as u64 - 1, 2 * n as u64 - 1) as usize;
            let g = random_valid(n, m, seed).unwrap();
            assert_eq!(g.edge_count(), m);
            assert_eq!(g.vertex_count(), n);
            assert!(g.is_connected());
            assert!(g.max_degree() <= 4);
        }
        let g = random_valid(100, 199, 42).unwrap();
        assert_eq!(g.edge_count(), 199);
        assert!(g.is_connected() && g.max_degree() <= 4);
        assert!(random_valid(5, 10, 0).is_err());
        assert!(random_valid(4, 7, 0).is_err());
    }

    #[test]
    fn tight_small_cases_succeed() {
        for n in 5..=12 {
            for seed in 0..30 {
                let g = random_valid(n, 2 * n - 1, seed).unwrap();
                assert_eq!(g.edge_count(), 2 * n - 1);
                let s = subcubic_random(n + n % 2, 3 * (n + n % 2) / 2, seed).unwrap();
                assert!(s.vertices().all(|v| s.degree(v) == 3));
                assert!(s.is_connected());
            }
        }
    }

    #[test]
    fn random_4regular_is_connected_and_regular() {
        for seed in 0..50 {
            let n = 8 + seed as usize;
            let g = random_4regular(n, seed).unwrap();
            assert_eq!(g.edge_count(), 2 * n);
            assert!(g.vertices().all(|v| g.degree(v) == 4));
            assert!(g.is_connected());
        }
        assert!(random_4regular(4, 0).is_err());
    }

    #[test]
    fn generation_is_deterministic() {
        let spec: GeneratorSpec = "random_valid(300,599,9)".parse().unwrap();
        let a = write_edge_list(&generate(&spec).unwrap());
        let b = write_edge_list(&generate(&spec).unwrap());
        assert_eq!(a, b);
    }

    #[test]
    fn enumerator_counts() {
        // labeled connected graphs on 4 vertices: 38
        assert_eq!(enumerate_connected(4, 4, 6).len(), 38);
        // labeled trees on 5 vertices: 125
        assert_eq!(enumerate_connected(5, 4, 4).len(), 125);
    }
}
