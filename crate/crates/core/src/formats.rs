//! graph6 and edge-list text formats.
//!
//! graph6 follows the nauty conventions: a size prefix `N(n)` and then the
//! upper triangle of the adjacency matrix, column by column
//! (`(0,1), (0,2), (1,2), (0,3), ..`), packed six bits per byte, each byte
//! offset by 63. Only the undirected simple-graph variant is supported.

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";
const MAX_N: usize = 258_047;

fn g6_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        message: message.into(),
    }
}

/// Decodes one graph6 line. A trailing newline and the optional
/// `>>graph6<<` header are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let (start, body) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, line.as_bytes()),
    };
    if let Some(pos) = body.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(g6_err(
            start + pos,
            format!("byte {:#04x} outside 63..=126", body[pos]),
        ));
    }
    let Some(&first) = body.first() else {
        return Err(g6_err(start, "empty input"));
    };
    let (n, mut pos) = if first < 126 {
        ((first - 63) as usize, 1)
    } else {
        if body.len() < 4 {
            return Err(g6_err(start + body.len(), "truncated size prefix"));
        }
        if body[1] == 126 {
            return Err(g6_err(
                start + 1,
                "graphs with more than 258047 vertices are not supported",
            ));
        }
        let n = body[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 4)
    };
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let have = body.len() - pos;
    if have < need {
        return Err(g6_err(
            start + body.len(),
            format!("expected {need} data bytes, found {have}"),
        ));
    }
    if have > need {
        return Err(g6_err(
            start + pos + need,
            "trailing bytes after adjacency data",
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = body[pos + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
            if k == bits {
                break 'outer;
            }
        }
    }
    pos += need;
    if bits % 6 != 0 {
        let last = body[pos - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(g6_err(start + pos - 1, "nonzero padding bits"));
        }
    }
    Graph::new(n, edges).map_err(|e| g6_err(start, e.to_string()))
}

/// Encodes a graph as a graph6 line without header or newline.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= MAX_N, "graph too large for graph6");
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Parses the edge-list format: a line `n <count>` followed by `u v` lines.
/// Blank lines and lines starting with `#` are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let err = |line: usize, message: String| Error::EdgeList { line, message };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines
        .next()
        .ok_or_else(|| err(1, "missing `n <count>` header".into()))?;
    let n: usize = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["n", count] => count
            .parse()
            .map_err(|_| err(hline, format!("bad vertex count `{count}`")))?,
        _ => {
            return Err(err(
                hline,
                format!("expected `n <count>`, found `{header}`"),
            ))
        }
    };
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (lineno, l) in lines {
        let parts: Vec<&str> = l.split_whitespace().collect();
        let [a, b] = parts[..] else {
            return Err(err(lineno, format!("expected `u v`, found `{l}`")));
        };
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| err(lineno, format!("bad vertex `{s}`")))
        };
        let (u, v) = (parse(a)?, parse(b)?);
        if u >= n || v >= n {
            return Err(err(lineno, format!("vertex out of range 0..{n}")));
        }
        if u == v {
            return Err(err(lineno, format!("self-loop at {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(err(lineno, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
    }
    Graph::new(n, edges).map_err(|e| err(hline, e.to_string()))
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("n {}\n", g.n());
    for &(u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

/// Parses every non-blank line of a graph6 file, reporting 1-based line numbers.
pub fn parse_graph6_lines(text: &str) -> Vec<(usize, Result<Graph>)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| (i + 1, parse_graph6(l.trim())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_encodings() {
        // K2 and C4 as printed by nauty's geng
        assert_eq!(to_graph6(&Graph::complete(2)), "A_");
        assert_eq!(to_graph6(&Graph::empty(1)), "@");
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        let c4 = parse_graph6("Cl").unwrap();
        assert_eq!(c4.m(), 4);
        assert!((0..4).all(|v| c4.degree(v) == 2));
    }

    #[test]
    fn header_and_newline_accepted() {
        let g = parse_graph6(">>graph6<<A_\n").unwrap();
        assert_eq!(g, Graph::complete(2));
    }

    #[test]
    fn graph6_errors_carry_offsets() {
        match parse_graph6("A_x~") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("unexpected {other:?}"),
        }
        match parse_graph6("C") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("unexpected {other:?}"),
        }
        match parse_graph6("A_ ") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("unexpected {other:?}"),
        }
        // K2 with a padding bit set
        assert!(parse_graph6("A`").is_err());
    }

    #[test]
    fn large_size_prefix() {
        let g = Graph::path(70);
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn edge_lists() {
        assert_eq!(parse_edge_list("n 2\n0 1").unwrap(), Graph::complete(2));
        assert_eq!(parse_edge_list("n 3\n0 1\n1 2").unwrap(), Graph::path(3));
        match parse_edge_list("n 3\n0 1\n0 1") {
            Err(Error::EdgeList { line, message }) => {
                assert_eq!(line, 3);
                assert!(message.contains("duplicate"));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_edge_list("n 3\n1 1"),
            Err(Error::EdgeList { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("n 3\n0 3"),
            Err(Error::EdgeList { line: 2, .. })
        ));
        let g = Graph::cycle(5);
        assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
    }
}
