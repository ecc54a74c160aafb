//! Graph file formats: a plain edge-list text format and sparse6 import.
//!
//! The edge-list grammar: first line `n m`, then `m` lines `u v` with
//! `0 <= u,v < n` and `u != v`; repeated lines encode parallel edges and `#`
//! starts a comment. Export always uses this format; sparse6 input (with
//! multi-edge support) is detected by its `:` or `>>sparse6<<` prefix.

use thiserror::Error;

use crate::graph::MultiGraph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("sparse6: {0}")]
    Sparse6(String),
    #[error("empty input")]
    Empty,
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        msg: msg.into(),
    }
}

/// Parses the edge-list format. Line numbers in errors are 1-based.
pub fn parse_edgelist(text: &str) -> Result<MultiGraph, ParseError> {
    let mut meaningful = text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then_some((i + 1, body))
    });
    let (header_line, header) = meaningful.next().ok_or(ParseError::Empty)?;
    let mut parts = header.split_whitespace();
    let n: usize = parts
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| syntax(header_line, "expected vertex count"))?;
    let m: usize = parts
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| syntax(header_line, "expected edge count"))?;
    if parts.next().is_some() {
        return Err(syntax(header_line, "trailing tokens after 'n m'"));
    }
    if n == 0 {
        return Err(syntax(header_line, "vertex count must be positive"));
    }
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (line, body) = meaningful
            .next()
            .ok_or_else(|| syntax(text.lines().count(), format!("expected {m} edge lines")))?;
        let mut parts = body.split_whitespace();
        let u: usize = parts
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| syntax(line, "expected edge endpoint"))?;
        let v: usize = parts
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| syntax(line, "expected edge endpoint"))?;
        if parts.next().is_some() {
            return Err(syntax(line, "trailing tokens after 'u v'"));
        }
        if u == v {
            return Err(syntax(line, "loops are not allowed"));
        }
        if u >= n || v >= n {
            return Err(syntax(line, format!("endpoint out of range 0..{n}")));
        }
        edges.push((u, v));
    }
    if let Some((line, _)) = meaningful.next() {
        return Err(syntax(line, "unexpected content after the edge list"));
    }
    Ok(MultiGraph::from_edges(n, &edges))
}

/// Writes the edge-list format, preserving edge order exactly.
pub fn write_edgelist(g: &MultiGraph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Decodes a sparse6 string (optionally prefixed by `>>sparse6<<`).
pub fn parse_sparse6(text: &str) -> Result<MultiGraph, ParseError> {
    let body = text.trim();
    let body = body.strip_prefix(">>sparse6<<").unwrap_or(body);
    let body = body
        .strip_prefix(':')
        .ok_or_else(|| ParseError::Sparse6("missing ':' prefix".into()))?;
    let bytes: Vec<u8> = body.trim_end().bytes().collect();
    for &b in &bytes {
        if !(63..=126).contains(&b) {
            return Err(ParseError::Sparse6(format!("invalid byte {b}")));
        }
    }
    let vals: Vec<u64> = bytes.iter().map(|&b| (b - 63) as u64).collect();

    // N(n): one 6-bit value, or 126 + 18 bits, or 126 126 + 36 bits.
    let (n, pos): (u64, usize) = if vals.is_empty() {
        return Err(ParseError::Sparse6("empty payload".into()));
    } else if vals[0] < 63 {
        (vals[0], 1)
    } else if vals.len() >= 4 && vals[1] < 63 {
        ((vals[1] << 12) | (vals[2] << 6) | vals[3], 4)
    } else if vals.len() >= 8 {
        (vals[2..8].iter().fold(0, |acc, &v| (acc << 6) | v), 8)
    } else {
        return Err(ParseError::Sparse6("truncated order field".into()));
    };
    if n == 0 {
        return Err(ParseError::Sparse6(
            "graph needs at least one vertex".into(),
        ));
    }
    let n = n as usize;
    let k = if n <= 1 {
        1
    } else {
        (usize::BITS - (n - 1).leading_zeros()) as usize
    };

    // Remaining 6-bit groups form a bit stream of (1 + k)-bit items.
    let mut bits: Vec<bool> = Vec::with_capacity((vals.len() - pos) * 6);
    for &v in &vals[pos..] {
        for shift in (0..6).rev() {
            bits.push(v >> shift & 1 == 1);
        }
    }
    let mut edges = Vec::new();
    let mut v_cur: usize = 0;
    let mut i = 0;
    while i + k < bits.len() {
        let b = bits[i];
        let mut x = 0usize;
        for j in 0..k {
            x = (x << 1) | bits[i + 1 + j] as usize;
        }
        i += 1 + k;
        if b {
            v_cur += 1;
        }
        if x >= n || v_cur >= n {
            break; // padding
        }
        if x > v_cur {
            v_cur = x;
        } else {
            edges.push((x, v_cur));
        }
    }
    MultiGraph::new(n, &edges).map_err(|e| ParseError::Sparse6(e.to_string()))
}

/// Parses either supported format, sniffing sparse6 by its prefix.
pub fn parse_graph(text: &str) -> Result<MultiGraph, ParseError> {
    let trimmed = text.trim_start();
    if trimmed.starts_with(':') || trimmed.starts_with(">>sparse6<<") {
        parse_sparse6(text)
    } else {
        parse_edgelist(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::families;

    #[test]
    fn edgelist_round_trip_preserves_order() {
        let g = families::r8();
        let text = write_edgelist(&g);
        let h = parse_edgelist(&text).unwrap();
        assert!(h.same_labeled(&g));
        assert_eq!(h.edges(), g.edges());
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# a graph\n2 2\n\n0 1  # first copy\n0 1\n";
        let g = parse_edgelist(text).unwrap();
        assert_eq!(g.multiplicity(0, 1), 2);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert_eq!(
            parse_edgelist("2 1\n0 0\n").unwrap_err(),
            ParseError::Syntax {
                line: 2,
                msg: "loops are not allowed".into()
            }
        );
        assert!(matches!(
            parse_edgelist("2 2\n0 1\n").unwrap_err(),
            ParseError::Syntax { .. }
        ));
        assert!(matches!(
            parse_edgelist("x y\n").unwrap_err(),
            ParseError::Syntax { line: 1, .. }
        ));
    }

    #[test]
    fn sparse6_reference_graph() {
        // Standard example: 7 vertices, edges 01, 02, 12, 56.
        let g = parse_sparse6(":Fa@x^").unwrap();
        assert_eq!(g.order(), 7);
        let mut pairs: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        pairs.sort_unstable();
        assert_eq!(pairs, vec![(0, 1), (0, 2), (1, 2), (5, 6)]);
    }

    #[test]
    fn sparse6_supports_multi_edges() {
        // Theta: n=2 ('A'), k=1; 2-bit items (1,0)(0,0)(0,0) give the edge
        // 0-1 three times; packed as the single 6-bit value 0b100000 = '_'.
        let g = parse_sparse6(":A_").unwrap();
        assert!(is_isomorphic(&g, &families::theta()).unwrap());
    }

    #[test]
    fn parse_graph_sniffs_format() {
        let el = write_edgelist(&families::k4());
        assert!(parse_graph(&el).unwrap().same_labeled(&families::k4()));
        assert_eq!(parse_graph(":Fa@x^").unwrap().order(), 7);
    }
}
