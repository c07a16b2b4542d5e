//! Text formats: whitespace-separated edge lists and graph6.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::{Error, Result, Tree, Vertex};

/// Parses an edge list: one `u v` pair per line, `#` comments and blank
/// lines ignored. Vertex ids must be dense in `0..n`. A line with a single
/// id declares a vertex, which is how the one-vertex tree is written.
pub fn parse_edge_list(text: &str) -> Result<Tree> {
    let mut edges = Vec::new();
    let mut max_id: Option<Vertex> = None;
    let mut seen: Vec<bool> = Vec::new();
    let mut mark = |v: Vertex, seen: &mut Vec<bool>| {
        if v >= seen.len() {
            seen.resize(v + 1, false);
        }
        seen[v] = true;
        max_id = Some(max_id.map_or(v, |m: Vertex| m.max(v)));
    };
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let ids: Vec<Vertex> = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<Vertex>()
                    .map_err(|_| Error::parse(idx + 1, alloc::format!("not a vertex id: {tok:?}")))
            })
            .collect::<Result<_>>()?;
        match ids.as_slice() {
            [v] => mark(*v, &mut seen),
            [u, v] => {
                mark(*u, &mut seen);
                mark(*v, &mut seen);
                edges.push((*u, *v));
            }
            _ => {
                return Err(Error::parse(
                    idx + 1,
                    alloc::format!("expected two vertex ids, found {}", ids.len()),
                ))
            }
        }
    }
    let n = match max_id {
        None => return Err(Error::EmptyInput),
        Some(m) => m + 1,
    };
    if let Some(gap) = seen.iter().position(|&s| !s) {
        return Err(Error::parse(
            0,
            alloc::format!("vertex ids are not dense: {gap} is missing"),
        ));
    }
    Tree::from_edges(n, &edges)
}

pub fn to_edge_list(t: &Tree) -> String {
    let mut out = String::new();
    if t.order() == 1 {
        out.push_str("0\n");
    }
    for (u, v) in t.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Parses one graph6 string (an optional `>>graph6<<` header is accepted).
pub fn parse_graph6(text: &str) -> Result<Tree> {
    let (n, edges) = decode_graph6(text)?;
    Tree::from_edges(n, &edges)
}

/// Decodes a graph6 string into its order and edge list without insisting
/// the graph is a tree.
pub fn decode_graph6(text: &str) -> Result<(usize, Vec<(Vertex, Vertex)>)> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::parse(1, "empty graph6 string"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::parse(
            1,
            alloc::format!("byte {b:#04x} outside the graph6 range"),
        ));
    }
    let sixes = |range: &[u8]| range.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(Error::parse(1, "truncated graph6 size"));
        }
        (sixes(&bytes[1..4]), &bytes[4..])
    } else {
        if bytes.len() < 8 {
            return Err(Error::parse(1, "truncated graph6 size"));
        }
        (sixes(&bytes[2..8]), &bytes[8..])
    };
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(Error::parse(
            1,
            alloc::format!(
                "expected {} data bytes for order {n}, found {}",
                bits.div_ceil(6),
                body.len()
            ),
        ));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (bits..body.len() * 6).any(bit) {
        return Err(Error::parse(1, "non-zero padding bits"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok((n, edges))
}

pub fn to_graph6(t: &Tree) -> String {
    let n = t.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut data = vec![0u8; bits.div_ceil(6)];
    // Upper triangle, column by column: bit index of (i, j), i < j.
    for (i, j) in t.edges() {
        let k = j * (j - 1) / 2 + i;
        data[k / 6] |= 1 << (5 - k % 6);
    }
    out.extend(data.into_iter().map(|b| b + 63));
    String::from_utf8(out).expect("graph6 is ASCII")
}
