//! Edge-list and graph6 text formats.

use std::fmt::Write;
use std::str::FromStr;

use super::Graph;
use crate::limits::MAX_N;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Graph6,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edge_list" | "edgelist" | "edges" => Ok(Format::EdgeList),
            "graph6" | "g6" => Ok(Format::Graph6),
            other => Err(Error::parse("format", format!("unknown format {other:?}"))),
        }
    }
}

impl Format {
    /// graph6 never starts with an ASCII digit, edge lists always do (after
    /// comments and blank lines).
    pub fn detect(text: &str) -> Format {
        let first = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty() && !l.starts_with('#'));
        match first.and_then(|l| l.bytes().next()) {
            Some(b) if b.is_ascii_digit() => Format::EdgeList,
            _ => Format::Graph6,
        }
    }
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Graph6 => parse_graph6(text),
    }
}

pub fn encode_graph(g: &Graph, format: Format) -> Result<String> {
    match format {
        Format::EdgeList => Ok(encode_edge_list(g)),
        Format::Graph6 => encode_graph6(g),
    }
}

fn parse_usize(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::parse(format!("line {line}"), format!("bad {what} {tok:?}")))
}

fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse("line 1", "missing \"n m\" header"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 2 {
        return Err(Error::parse(
            format!("line {hline}"),
            "header must be \"n m\"",
        ));
    }
    let n = parse_usize(toks[0], hline, "vertex count")?;
    let m = parse_usize(toks[1], hline, "edge count")?;
    if n > MAX_N {
        return Err(Error::CapExceeded {
            what: "graph order",
            n,
            cap: MAX_N,
        });
    }
    let mut g = Graph::empty(n)?;
    let mut seen = 0usize;
    for (lineno, line) in lines {
        let loc = format!("line {lineno}");
        if seen == m {
            return Err(Error::parse(loc, format!("more than the declared {m} edges")));
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(Error::parse(loc, "edge line must be \"u v\""));
        }
        let u = parse_usize(toks[0], lineno, "vertex")?;
        let v = parse_usize(toks[1], lineno, "vertex")?;
        if u >= n || v >= n {
            return Err(Error::parse(
                loc,
                format!("vertex index out of range ({} >= {n})", u.max(v)),
            ));
        }
        if u == v {
            return Err(Error::parse(loc, format!("self-loop at vertex {u}")));
        }
        if g.has_edge(u, v) {
            return Err(Error::parse(loc, format!("duplicate edge {u} {v}")));
        }
        g.add_edge(u, v);
        seen += 1;
    }
    if seen != m {
        return Err(Error::parse(
            "end of input",
            format!("expected {m} edges, found {seen}"),
        ));
    }
    Ok(g)
}

fn encode_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}", g.n(), g.m());
    for (u, v) in g.edges() {
        write!(out, "\n{u} {v}").unwrap();
    }
    out
}

fn graph6_body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end().as_bytes();
    let (&head, body) = bytes
        .split_first()
        .ok_or_else(|| Error::parse("byte 0", "empty graph6 string"))?;
    if head == 126 {
        return Err(Error::parse("byte 0", "graph6 long form (n > 62) is not supported"));
    }
    if !(63..126).contains(&head) {
        return Err(Error::parse("byte 0", format!("invalid size byte {head}")));
    }
    let n = (head - 63) as usize;
    if n > MAX_N {
        return Err(Error::CapExceeded {
            what: "graph order",
            n,
            cap: MAX_N,
        });
    }
    let want = graph6_body_len(n);
    if body.len() != want {
        return Err(Error::parse(
            format!("byte {}", 1 + body.len().min(want)),
            format!("expected {want} data bytes, found {}", body.len()),
        ));
    }
    let mut g = Graph::empty(n)?;
    let mut bit = 0usize;
    let total = n * n.saturating_sub(1) / 2;
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(format!("byte {}", i + 1), format!("invalid data byte {b}")));
        }
        let group = b - 63;
        for k in 0..6 {
            let set = group >> (5 - k) & 1 == 1;
            let idx = i * 6 + k;
            if idx >= total {
                if set {
                    return Err(Error::parse(format!("byte {}", i + 1), "nonzero padding bits"));
                }
                continue;
            }
            if set {
                let (u, v) = pair_at(idx);
                g.add_edge(u, v);
            }
            bit += 1;
        }
    }
    debug_assert_eq!(bit, total);
    Ok(g)
}

/// The `idx`-th pair in column order (0,1),(0,2),(1,2),(0,3),...
pub(crate) fn pair_at(idx: usize) -> (usize, usize) {
    let mut v = 1;
    let mut start = 0;
    while start + v <= idx {
        start += v;
        v += 1;
    }
    (idx - start, v)
}

fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > 62 {
        return Err(Error::UnsupportedSize(n));
    }
    let mut out = Vec::with_capacity(1 + graph6_body_len(n));
    out.push(n as u8 + 63);
    let mut group = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            group = group << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
