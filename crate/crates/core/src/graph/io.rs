//! Plain edge-list format: a header line `n m`, then `m` lines `u v` with
//! 0-based vertex indices. Blank lines and `#` comments are ignored.

use std::fmt::Write as _;

use super::{Graph, VertexId};
use crate::error::{Error, Result};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn two_numbers(line_no: usize, line: &str) -> Result<(u64, u64)> {
    let mut it = line.split_whitespace();
    let mut next = || -> Result<u64> {
        let tok = it
            .next()
            .ok_or_else(|| Error::parse(line_no, "expected two integers"))?;
        tok.parse::<u64>()
            .map_err(|_| Error::parse(line_no, format!("not a non-negative integer: {tok:?}")))
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(Error::parse(line_no, "trailing tokens"));
    }
    Ok((a, b))
}

/// Parses an edge list. Structural violations (degree above 4, loops,
/// duplicate edges) surface as the corresponding graph errors.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hdr_line, hdr) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing header line \"n m\""))?;
    let (n, m) = two_numbers(hdr_line, hdr)?;
    if n > u32::MAX as u64 / 2 {
        return Err(Error::parse(hdr_line, "vertex count too large"));
    }
    let mut g = Graph::with_vertices(n as usize);
    let mut seen = 0u64;
    for (line_no, line) in lines {
        let (u, v) = two_numbers(line_no, line)?;
        if u >= n || v >= n {
            return Err(Error::parse(
                line_no,
                format!("vertex index out of range 0..{n}"),
            ));
        }
        seen += 1;
        if seen > m {
            return Err(Error::parse(line_no, format!("more than {m} edge lines")));
        }
        g.add_edge(VertexId(u as u32), VertexId(v as u32))?;
    }
    if seen != m {
        return Err(Error::parse(
            text.lines().count().max(1),
            format!("header announces {m} edges, found {seen}"),
        ));
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.vertex_bound(), g.edge_count()).unwrap();
    for e in g.edges() {
        let (u, v) = g.endpoints(e);
        writeln!(out, "{} {}", u.0, v.0).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments_and_blanks() {
        let g = parse_edge_list("# c4\n4 4\n0 1\n\n1 2 # mid\n2 3\n3 0\n").unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(write_edge_list(&g), "4 4\n0 1\n1 2\n2 3\n3 0\n");
    }

    #[test]
    fn rejects_degree_five() {
        let text = "6 5\n0 1\n0 2\n0 3\n0 4\n0 5\n";
        assert_eq!(
            parse_edge_list(text).unwrap_err(),
            Error::DegreeViolation(VertexId(0))
        );
    }

    #[test]
    fn rejects_bad_counts_and_tokens() {
        assert!(matches!(
            parse_edge_list("3 2\n0 1\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_edge_list("3 1\n0 1\n1 2\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_edge_list("3 1\n0 x\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_edge_list("3 1\n0 3\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(parse_edge_list(""), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_edge_list("2 1\n1 1\n"),
            Err(Error::SelfLoop(_))
        ));
    }
}
