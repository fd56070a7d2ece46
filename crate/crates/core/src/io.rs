//! Text formats: the `n m` edge-list format and graph6.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order supported by the single-byte graph6 size field.
pub const GRAPH6_MAX_ORDER: usize = 62;

/// Parses the edge-list format: a header line `n m`, then `m` lines `u v`.
/// Blank lines and `#` comments are ignored. `source_name` appears in
/// diagnostics.
pub fn parse_edge_list(text: &str, source_name: &str) -> Result<Graph> {
    let err = |line: usize, message: String| Error::Parse {
        source_name: source_name.to_string(),
        line,
        message,
    };
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(err(
                lineno,
                format!("expected two integers, found {} fields", fields.len()),
            ));
        }
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| err(lineno, format!("`{s}` is not a nonnegative integer")))
        };
        let (a, b) = (parse(fields[0])?, parse(fields[1])?);
        match header {
            None => header = Some((a, b)),
            Some((n, m)) => {
                if edges.len() == m {
                    return Err(err(lineno, format!("more than the declared {m} edges")));
                }
                if a >= n || b >= n {
                    return Err(err(
                        lineno,
                        format!("edge ({a}, {b}) has an endpoint outside 0..{n}"),
                    ));
                }
                if a == b {
                    return Err(err(lineno, format!("self-loop at vertex {a}")));
                }
                edges.push((a, b));
            }
        }
    }
    let (n, m) = header.ok_or_else(|| err(last_line.max(1), "missing `n m` header".into()))?;
    if edges.len() != m {
        return Err(err(
            last_line.max(1),
            format!("header declares {m} edges but {} were given", edges.len()),
        ));
    }
    Graph::from_edge_list(n, &edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Decodes one graph6 string (orders up to 62). An optional `>>graph6<<`
/// header is accepted.
pub fn parse_graph6(s: &str) -> Result<Graph> {
    let s = s.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    let (&first, body) = bytes
        .split_first()
        .ok_or_else(|| Error::Graph6("empty string".into()))?;
    if !(63..=126).contains(&first) {
        return Err(Error::Graph6(format!("invalid size byte {first}")));
    }
    if first == 126 {
        return Err(Error::Graph6(format!(
            "orders above {GRAPH6_MAX_ORDER} are not supported"
        )));
    }
    let n = (first - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "order {n} needs {expected} data bytes, found {}",
            body.len()
        )));
    }
    let mut data = Vec::with_capacity(expected * 6);
    for &b in body {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(format!("invalid data byte {b}")));
        }
        let x = b - 63;
        data.extend((0..6).rev().map(|i| (x >> i) & 1 == 1));
    }
    if data[bits..].iter().any(|&b| b) {
        return Err(Error::Graph6("nonzero padding bits".into()));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if data[k] {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edge_list(n, &edges)
}

pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Error::Graph6(format!(
            "orders above {GRAPH6_MAX_ORDER} are not supported"
        )));
    }
    let mut out = String::with_capacity(1 + (n * n / 12) + 1);
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

/// One graph6 string per line; blank lines are skipped. Errors carry the line.
pub fn parse_graph6_list(text: &str, source_name: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(idx, line)| {
            parse_graph6(line).map_err(|e| Error::Parse {
                source_name: source_name.to_string(),
                line: idx + 1,
                message: e.to_string(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn edge_list_with_comments() {
        let text = "# a path\n4 3\n0 1\n\n1 2 # middle\n2 3\n";
        assert_eq!(parse_edge_list(text, "p4.txt").unwrap(), Graph::path(4));
    }

    #[test]
    fn edge_list_diagnostics_name_the_line() {
        let e = parse_edge_list("3 2\n0 1\n1 x\n", "bad.txt").unwrap_err();
        assert_eq!(e.to_string(), "bad.txt:3: `x` is not a nonnegative integer");
        let e = parse_edge_list("3 1\n0 3\n", "bad.txt").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
        let e = parse_edge_list("3 2\n0 1\n", "short.txt").unwrap_err();
        assert!(e.to_string().contains("declares 2 edges"));
        let e = parse_edge_list("2 1\n1 1\n", "loop.txt").unwrap_err();
        assert!(e.to_string().contains("self-loop"));
    }

    #[test]
    fn graph6_known_strings() {
        // Reference strings from the graph6 format description.
        assert_eq!(parse_graph6("A_").unwrap(), Graph::complete(2));
        assert_eq!(write_graph6(&Graph::complete(4)).unwrap(), "C~");
        assert_eq!(write_graph6(&Graph::path(4)).unwrap(), "Ch");
        assert_eq!(parse_graph6(">>graph6<<Bw").unwrap(), Graph::complete(3));
        assert_eq!(parse_graph6("?").unwrap(), Graph::empty(0));
    }

    #[test]
    fn graph6_rejects_garbage() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("C").is_err());
        assert!(parse_graph6("A`").is_err());
        assert!(parse_graph6("~??").is_err());
    }

    proptest! {
        #[test]
        fn graph6_round_trip(n in 0usize..20, bits in proptest::collection::vec(any::<bool>(), 190)) {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] { edges.push((i, j)); }
                    k += 1;
                }
            }
            let g = Graph::from_edge_list(n, &edges).unwrap();
            let s = write_graph6(&g).unwrap();
            prop_assert_eq!(parse_graph6(&s).unwrap(), g.clone());
            prop_assert_eq!(parse_edge_list(&write_edge_list(&g), "rt").unwrap(), g);
        }
    }
}
