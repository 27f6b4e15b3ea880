//! graph6 and plain edge-list text formats.
//!
//! graph6: a size field (`n + 63` for `n <= 62`, otherwise `~` followed by
//! three 6-bit groups), then the upper triangle of the adjacency matrix in
//! column order (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), packed six bits per byte,
//! padded with zeros and offset by 63.

use super::Graph;
use crate::error::{Error, Result};

const G6_MAX_N: usize = 258_047;

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        assert!(n <= G6_MAX_N, "graph6 size field supports n <= {G6_MAX_N}");
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn from_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty string".into()));
    }
    if let Some(&bad) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("byte {bad} outside 63..=126")));
    }
    let (n, body) = if bytes[0] < 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else {
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated size field".into()));
        }
        if bytes[1] == 126 {
            return Err(Error::Graph6("8-byte size form is not supported".into()));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, &bytes[4..])
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} data bytes for n={n}, found {}",
            body.len()
        )));
    }
    let mut g = Graph::new(n);
    let mut bit = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = body[bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                g.set(u, v, true);
            }
            bit += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = body[body.len() - 1] - 63;
        if last & ((1 << (6 - nbits % 6)) - 1) != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Ok(g)
}

/// An edge list together with how many duplicate lines were collapsed.
#[derive(Clone, Debug)]
pub struct ParsedEdgeList {
    pub graph: Graph,
    pub duplicates: usize,
}

/// Parses `n m` followed by `m` lines `u v`. `#` starts a comment.
pub fn from_edge_list_text(text: &str) -> Result<ParsedEdgeList> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or(Error::EmptyInput)?;
    let (n, m) = parse_pair(hline, header)?;
    let mut g = Graph::new(n);
    let mut duplicates = 0;
    let mut count = 0;
    for (line, body) in lines {
        let (a, b) = parse_pair(line, body)?;
        let fresh = g.add_edge(a, b).map_err(|e| Error::EdgeList {
            line,
            message: e.to_string(),
        })?;
        if !fresh {
            duplicates += 1;
        }
        count += 1;
    }
    if count != m {
        return Err(Error::EdgeList {
            line: hline,
            message: format!("header announces {m} edges, found {count}"),
        });
    }
    Ok(ParsedEdgeList { graph: g, duplicates })
}

fn parse_pair(line: usize, body: &str) -> Result<(usize, usize)> {
    let mut it = body.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let tok = it.next().ok_or_else(|| Error::EdgeList {
            line,
            message: format!("missing {what}"),
        })?;
        tok.parse().map_err(|_| Error::EdgeList {
            line,
            message: format!("{what} is not a non-negative integer: {tok:?}"),
        })
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if it.next().is_some() {
        return Err(Error::EdgeList {
            line,
            message: "trailing fields".into(),
        });
    }
    Ok((a, b))
}

pub fn to_edge_list_text(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.order(), g.size());
    for e in g.edges() {
        s.push_str(&format!("{} {}\n", e.u, e.v));
    }
    s
}
