//! Text formats: graph6 and a plain edge list.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

/// Encodes `g` in graph6 (no `>>graph6<<` header).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes one graph6 string. Surrounding whitespace and an optional
/// `>>graph6<<` prefix are accepted.
pub fn from_graph6(s: &str) -> Result<Graph> {
    let s = s.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Malformed("empty graph6 string".into()));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Malformed(format!("byte {b:#04x} outside the graph6 range")));
    }
    let (n, body) = if bytes[0] < 126 {
        (usize::from(bytes[0] - 63), &bytes[1..])
    } else {
        if bytes.len() < 4 || bytes[1] == 126 {
            return Err(Error::Malformed("unsupported graph6 size header".into()));
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63));
        (n, &bytes[4..])
    };
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Malformed(format!("graph6 body has {} bytes, expected {expected} for n={n}", body.len())));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Edge-list text: first line `n m`, then `m` lines `u v` (0-based).
pub fn to_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut s = format!("{} {}\n", g.order(), edges.len());
    for (u, v) in edges {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

pub fn from_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| Error::Malformed("missing `n m` header".into()))?;
    let [n, m] = parse_pair(header)?;
    let mut g = Graph::empty(n)?;
    let mut seen = 0;
    for line in lines {
        let [u, v] = parse_pair(line)?;
        g.try_add_edge(u, v)?;
        seen += 1;
    }
    if seen != m {
        return Err(Error::Malformed(format!("header announces {m} edges, found {seen}")));
    }
    Ok(g)
}

fn parse_pair(line: &str) -> Result<[usize; 2]> {
    let nums: Vec<usize> = line.split_whitespace().map(|t| t.parse().map_err(|_| Error::Malformed(format!("not a number: `{t}`")))).collect::<Result<_>>()?;
    match nums[..] {
        [a, b] => Ok([a, b]),
        _ => Err(Error::Malformed(format!("expected two numbers, got `{line}`"))),
    }
}
