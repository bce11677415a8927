//! graph6 encoding and decoding.
//!
//! The format packs the upper triangle of the adjacency matrix in
//! column-major pair order (0,1),(0,2),(1,2),(0,3),... into 6-bit groups,
//! each group stored as one printable byte `value + 63`. The leading size
//! field is a single byte `n + 63` for n <= 62, or `~` followed by three
//! bytes carrying an 18-bit big-endian value for larger graphs.

use std::io::BufRead;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";
const MAX_ORDER: usize = 258_047; // largest n the 18-bit size field carries

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6Parse {
        offset,
        message: message.into(),
    }
}

/// Decodes one graph6 record. A leading `>>graph6<<` header is accepted
/// and stripped; trailing newline characters are not (pass a bare record).
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let (body, base) = match text.strip_prefix(HEADER) {
        Some(rest) => (rest, HEADER.len()),
        None => (text, 0),
    };
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(parse_err(base, "empty record"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(parse_err(
                base + i,
                format!("byte 0x{b:02x} outside graph6 range 63..=126"),
            ));
        }
    }

    let (n, pos) = if bytes[0] == 126 {
        if bytes.len() < 4 {
            return Err(parse_err(base + bytes.len(), "truncated size field"));
        }
        if bytes[1] == 126 {
            return Err(parse_err(base + 1, "orders above 258047 are not supported"));
        }
        let n = ((bytes[1] as usize - 63) << 12)
            | ((bytes[2] as usize - 63) << 6)
            | (bytes[3] as usize - 63);
        (n, 4)
    } else {
        (bytes[0] as usize - 63, 1)
    };

    let bit_count = n * n.saturating_sub(1) / 2;
    let char_count = bit_count.div_ceil(6);
    if bytes.len() < pos + char_count {
        return Err(parse_err(base + bytes.len(), "truncated adjacency bits"));
    }
    if bytes.len() > pos + char_count {
        return Err(parse_err(base + pos + char_count, "trailing garbage"));
    }

    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    'outer: for col in 1..n {
        for row in 0..col {
            let byte = bytes[pos + bit / 6] - 63;
            let set = (byte >> (5 - bit % 6)) & 1 == 1;
            if set {
                g.add_edge(row, col)?;
            }
            bit += 1;
            if bit >= bit_count {
                break 'outer;
            }
        }
    }
    // nauty zero-pads the final group; anything else is corruption
    while bit < char_count * 6 {
        let byte = bytes[pos + bit / 6] - 63;
        if (byte >> (5 - bit % 6)) & 1 == 1 {
            return Err(parse_err(base + pos + bit / 6, "nonzero padding bits"));
        }
        bit += 1;
    }
    Ok(g)
}

/// Encodes a graph as one graph6 record (no trailing newline).
pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_ORDER {
        return Err(Error::argument(format!(
            "graph6 supports at most {MAX_ORDER} vertices, got {n}"
        )));
    }
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut filled = 0u8;
    for col in 1..n {
        for row in 0..col {
            acc = (acc << 1) | u8::from(g.has_edge(row, col));
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
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

/// Reads a graph6 file: one record per line, optional `>>graph6<<`
/// header line, blank lines ignored.
pub fn read_graph6_file(path: impl AsRef<Path>) -> Result<Vec<Graph>> {
    let file = std::fs::File::open(path)?;
    let reader = std::io::BufReader::new(file);
    let mut graphs = Vec::new();
    for line in reader.lines() {
        let line = line?;
        let record = line.trim_end_matches(['\n', '\r']);
        if record.is_empty() || record == HEADER {
            continue;
        }
        graphs.push(parse_graph6(record)?);
    }
    Ok(graphs)
}
