//! graph6 and plain edge-list text formats.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

/// Encodes `g` in graph6. Uses the one-byte size header for `n <= 62` and the
/// `~`-prefixed 18-bit header for 63 and 64.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
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
    String::from_utf8(out).expect("graph6 bytes are printable ascii")
}

/// Decodes one graph6 line. Surrounding whitespace and an optional
/// `>>graph6<<` header are ignored.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let bad = |msg: String| Error::Graph6(msg);

    let (n, body) = match bytes.first() {
        None => return Err(bad("empty input".into())),
        Some(b'~') => {
            if bytes.get(1) == Some(&b'~') {
                return Err(bad("eight-byte size header: more than 64 vertices".into()));
            }
            if bytes.len() < 4 {
                return Err(bad("truncated size header".into()));
            }
            let mut n = 0usize;
            for &b in &bytes[1..4] {
                check_byte(b)?;
                n = n << 6 | (b - 63) as usize;
            }
            (n, &bytes[4..])
        }
        Some(&b) => {
            check_byte(b).map_err(|_| bad(format!("malformed header byte 0x{b:02x}")))?;
            ((b - 63) as usize, &bytes[1..])
        }
    };
    if n > MAX_VERTICES {
        return Err(bad(format!("{n} vertices exceeds the 64-vertex limit")));
    }
    if n == 0 {
        return Err(Error::VertexCount(0));
    }
    let bits = n * (n - 1) / 2;
    let needed = bits.div_ceil(6);
    if body.len() < needed {
        return Err(bad(format!("truncated bit stream: expected {needed} bytes, found {}", body.len())));
    }
    if body.len() > needed {
        return Err(bad(format!("{} trailing bytes", body.len() - needed)));
    }
    for &b in body {
        check_byte(b)?;
    }
    let mut k = 0;
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, &edges)
}

fn check_byte(b: u8) -> Result<()> {
    if (63..=126).contains(&b) {
        Ok(())
    } else {
        Err(Error::Graph6(format!("byte 0x{b:02x} outside the printable range 63..=126")))
    }
}

/// Parses `"n m\nu v\n..."`. Blank lines and `#` comments are skipped; the
/// edge count `m` must match the number of edge lines.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let bad = |msg: String| Error::EdgeList(msg);
    let mut lines = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| bad("missing header line".into()))?;
    let nums = parse_pair(header).map_err(|e| bad(format!("header: {e}")))?;
    let (n, m) = nums;
    let mut edges = Vec::with_capacity(m);
    for (i, line) in lines.enumerate() {
        edges.push(parse_pair(line).map_err(|e| bad(format!("edge line {}: {e}", i + 1)))?);
    }
    if edges.len() != m {
        return Err(bad(format!("header declares {m} edges, found {}", edges.len())));
    }
    Graph::new(n, &edges)
}

fn parse_pair(line: &str) -> std::result::Result<(usize, usize), String> {
    let mut it = line.split_whitespace();
    let a = it.next().ok_or("expected two integers")?;
    let b = it.next().ok_or("expected two integers")?;
    if it.next().is_some() {
        return Err("expected exactly two integers".into());
    }
    let a = a.parse::<usize>().map_err(|e| format!("{a:?}: {e}"))?;
    let b = b.parse::<usize>().map_err(|e| format!("{b:?}: {e}"))?;
    Ok((a, b))
}

pub fn to_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
