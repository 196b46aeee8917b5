//! Interchange formats: graph6 and a plain edge-list text format.
//!
//! graph6: a size header (one byte `n + 63` for `n < 63`, otherwise `~` followed by
//! three 6-bit groups, big-endian) and then the upper triangle of the adjacency
//! matrix in column-major order (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), padded with
//! zeros to a multiple of six bits, each group written as `group + 63`.
//!
//! Edge list: one `u v` pair per line, 0-based. Blank lines and lines starting with
//! `#` are ignored, except that a `# n <count>` line fixes the vertex count (which
//! otherwise defaults to the largest listed vertex plus one).

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const GRAPH6_HEADER: &[u8] = b">>graph6<<";

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
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
    // Every byte is in 63..=126, so this cannot fail.
    String::from_utf8(out).expect("graph6 output is printable ASCII")
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u8> {
    match bytes.get(offset) {
        Some(&b) if (63..=126).contains(&b) => Ok(b - 63),
        Some(&b) => Err(Error::parse(
            offset,
            format!("byte 0x{b:02x} is not a graph6 character"),
        )),
        None => Err(Error::parse(offset, "unexpected end of input")),
    }
}

/// Parses one graph6 record. An optional `>>graph6<<` prefix is accepted; anything
/// else (including trailing newlines) must be stripped by the caller.
pub fn from_graph6(input: &[u8]) -> Result<Graph> {
    let start = if input.starts_with(GRAPH6_HEADER) {
        GRAPH6_HEADER.len()
    } else {
        0
    };
    let bytes = &input[start..];
    let at = |i: usize| start + i;

    let (n, mut pos) = match bytes.first() {
        None => return Err(Error::parse(at(0), "empty input")),
        Some(b'~') if bytes.get(1) == Some(&b'~') => {
            let mut n = 0usize;
            for i in 2..8 {
                n = (n << 6) | sextet(bytes, i).map_err(|e| shift(e, start))? as usize;
            }
            (n, 8)
        }
        Some(b'~') => {
            let mut n = 0usize;
            for i in 1..4 {
                n = (n << 6) | sextet(bytes, i).map_err(|e| shift(e, start))? as usize;
            }
            if n < 63 {
                return Err(Error::parse(
                    at(0),
                    format!("extended header encodes n = {n} < 63"),
                ));
            }
            (n, 4)
        }
        Some(_) => (sextet(bytes, 0).map_err(|e| shift(e, start))? as usize, 1),
    };
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::Size(n));
    }

    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    let payload = &bytes[pos..];
    if payload.len() < expected {
        return Err(Error::parse(
            at(bytes.len()),
            format!(
                "payload too short: {} of {expected} bytes for n = {n}",
                payload.len()
            ),
        ));
    }
    if payload.len() > expected {
        return Err(Error::parse(
            at(pos + expected),
            format!("{} trailing bytes after payload", payload.len() - expected),
        ));
    }

    let mut g = Graph::new(n)?;
    let (mut i, mut j) = (0usize, 1usize);
    let mut k = 0;
    while k < bits {
        let group = sextet(bytes, pos).map_err(|e| shift(e, start))?;
        for b in (0..6).rev() {
            if k == bits {
                if group & ((1 << (b + 1)) - 1) != 0 {
                    return Err(Error::parse(at(pos), "nonzero padding bits"));
                }
                break;
            }
            if (group >> b) & 1 == 1 {
                g.set(i, j);
            }
            k += 1;
            i += 1;
            if i == j {
                i = 0;
                j += 1;
            }
        }
        pos += 1;
    }
    Ok(g)
}

fn shift(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { offset, message } => Error::Parse {
            offset: offset + by,
            message,
        },
        other => other,
    }
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("# n {}\n", g.n());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u, e.v));
    }
    out
}

pub fn from_edge_list_text(text: &str) -> Result<Graph> {
    let mut declared = None;
    let mut edges = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let body = line.trim();
        let col = offset + (line.len() - line.trim_start().len());
        offset += line.len();
        if body.is_empty() {
            continue;
        }
        if let Some(comment) = body.strip_prefix('#') {
            let mut it = comment.split_whitespace();
            if it.next() == Some("n") {
                let value = it
                    .next()
                    .and_then(|s| s.parse::<usize>().ok())
                    .ok_or_else(|| Error::parse(col, "malformed `# n <count>` line"))?;
                declared = Some(value);
            }
            continue;
        }
        let mut it = body.split_whitespace();
        let mut field = || -> Result<usize> {
            it.next()
                .ok_or_else(|| Error::parse(col, "expected two vertex indices"))?
                .parse::<usize>()
                .map_err(|_| Error::parse(col, "vertex index is not a non-negative integer"))
        };
        let (u, v) = (field()?, field()?);
        if it.next().is_some() {
            return Err(Error::parse(col, "more than two fields on an edge line"));
        }
        edges.push((u, v, col));
    }
    let n = match declared {
        Some(n) => n,
        None => edges
            .iter()
            .map(|&(u, v, _)| u.max(v) + 1)
            .max()
            .unwrap_or(0),
    };
    let mut g = Graph::new(n)?;
    for (u, v, col) in edges {
        g.add_edge(u, v).map_err(|e| match e {
            Error::Bounds { .. } | Error::Loop(_) => Error::parse(col, e.to_string()),
            other => other,
        })?;
    }
    Ok(g)
}
