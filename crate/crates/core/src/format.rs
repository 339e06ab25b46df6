//! Text interchange formats: graph6, edge lists and DOT.
//!
//! graph6 stores the order in one byte (`n + 63`) for `n <= 62`, otherwise as
//! `~` followed by three bytes holding 18 bits (or `~~` and six bytes holding
//! 36 bits). The upper adjacency triangle follows in column order
//! `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed six bits per byte, most
//! significant first, zero padded, each group written as `value + 63`.

use std::fmt::Write as _;

use clap::ValueEnum;

use crate::error::{Error, FormatError, Result, MAX_ORDER};
use crate::graph::{Graph, GraphBuilder};

const HEADER: &str = ">>graph6<<";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Graph6,
    Edgelist,
    Dot,
}

/// Formats accepted on input. DOT is output only.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Graph6,
    Edgelist,
}

impl InputFormat {
    /// Edge lists open with a decimal order; a graph6 line never starts
    /// with a digit since its first byte is at least `?`.
    pub fn detect(bytes: &[u8]) -> InputFormat {
        let first = bytes.iter().find(|b| !b.is_ascii_whitespace());
        match first {
            Some(b) if b.is_ascii_digit() || *b == b'#' => InputFormat::Edgelist,
            _ => InputFormat::Graph6,
        }
    }
}

pub fn parse_graph_input(bytes: &[u8], format: InputFormat) -> Result<Graph> {
    match format {
        InputFormat::Graph6 => {
            let text = std::str::from_utf8(bytes).map_err(|e| {
                let pos = e.valid_up_to();
                FormatError::BadCharacter {
                    found: char::from(bytes[pos]),
                    position: pos,
                }
            })?;
            let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
            let line = lines
                .next()
                .ok_or_else(|| FormatError::MalformedHeader("empty input".into()))?;
            if lines.next().is_some() {
                return Err(
                    FormatError::MalformedHeader("expected a single graph6 line".into()).into(),
                );
            }
            decode_graph6(line)
        }
        InputFormat::Edgelist => parse_edge_list(bytes),
    }
}

pub fn emit_graph_output(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Graph6 => {
            let mut s = encode_graph6(g);
            s.push('\n');
            s
        }
        GraphFormat::Edgelist => to_edge_list(g),
        GraphFormat::Dot => to_dot(g),
    }
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
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
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Decodes one graph6 string, optionally prefixed by `>>graph6<<`.
pub fn decode_graph6(line: &str) -> Result<Graph> {
    let body = line.trim_end_matches(['\n', '\r']);
    let (offset, body) = match body.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest),
        None => (0, body),
    };
    let bytes = body.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            let found = body[i..].chars().next().unwrap_or('?');
            return Err(FormatError::BadCharacter {
                found,
                position: offset + i,
            }
            .into());
        }
    }
    let (n, data) = match bytes {
        [] => return Err(FormatError::MalformedHeader("missing order byte".into()).into()),
        [126, 126, rest @ ..] => (read_order(rest, 6)?, &rest[6..]),
        [126, rest @ ..] => (read_order(rest, 3)?, &rest[3..]),
        [b, rest @ ..] => ((b - 63) as usize, rest),
    };
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge {
            order: n,
            limit: MAX_ORDER,
        });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if data.len() < expected {
        return Err(FormatError::TruncatedBitstream {
            expected,
            found: data.len(),
        }
        .into());
    }
    if data.len() > expected {
        return Err(FormatError::MalformedHeader(format!(
            "{} data bytes after the order, expected {expected}",
            data.len()
        ))
        .into());
    }
    let mut b = GraphBuilder::new(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                b.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(b.build())
}

fn read_order(rest: &[u8], width: usize) -> Result<usize> {
    if rest.len() < width {
        return Err(FormatError::MalformedHeader("order field truncated".into()).into());
    }
    let mut n = 0usize;
    for &b in &rest[..width] {
        n = (n << 6) | (b - 63) as usize;
    }
    Ok(n)
}

/// Reads a file of graph6 lines, one graph per line. Blank lines are skipped.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(decode_graph6)
        .collect()
}

/// Edge list: the order on the first line, then one `u v` pair per line.
/// Blank lines and lines starting with `#` are ignored.
pub fn parse_edge_list(bytes: &[u8]) -> Result<Graph> {
    let text = String::from_utf8_lossy(bytes);
    let mut line_start = 0;
    let mut rows = Vec::new();
    for raw in text.split_inclusive('\n') {
        let line = raw.trim();
        if !line.is_empty() && !line.starts_with('#') {
            rows.push((line_start + (raw.len() - raw.trim_start().len()), line));
        }
        line_start += raw.len();
    }
    let Some(&(_, head)) = rows.first() else {
        return Err(FormatError::MalformedHeader("empty edge list".into()).into());
    };
    let order: usize = head.parse().map_err(|_| {
        FormatError::MalformedHeader(format!("expected vertex count, found {head:?}"))
    })?;
    if order > MAX_ORDER {
        return Err(Error::OrderTooLarge {
            order,
            limit: MAX_ORDER,
        });
    }
    let mut b = GraphBuilder::new(order)?;
    for &(pos, line) in &rows[1..] {
        let mut ids = [0usize; 2];
        let mut tokens = line.split_whitespace();
        for id in &mut ids {
            let tok = tokens.next().ok_or_else(|| {
                FormatError::MalformedHeader(format!("edge line {line:?} needs two ids"))
            })?;
            *id = tok.parse().map_err(|_| {
                let bad = tok.find(|c: char| !c.is_ascii_digit()).unwrap_or(0);
                let off = line.find(tok).unwrap_or(0) + bad;
                FormatError::BadCharacter {
                    found: tok[bad..].chars().next().unwrap_or(' '),
                    position: pos + off,
                }
            })?;
        }
        if let Some(extra) = tokens.next() {
            let off = line.rfind(extra).unwrap_or(0);
            return Err(FormatError::BadCharacter {
                found: extra.chars().next().unwrap_or(' '),
                position: pos + off,
            }
            .into());
        }
        let [u, v] = ids;
        if u >= order || v >= order {
            return Err(FormatError::EdgeOutOfRange { u, v, order }.into());
        }
        b.add_edge(u, v)?;
    }
    Ok(b.build())
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

/// Undirected DOT block: every vertex on its own line, then every edge.
pub fn to_dot(g: &Graph) -> String {
    let mut s = String::from("graph G {\n");
    for v in 0..g.order() {
        let _ = writeln!(s, "  {v};");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(s, "  {u} -- {v};");
    }
    s.push_str("}\n");
    s
}
