//! graph6 encoding: the compact ASCII format used to distribute exhaustive
//! small-graph corpora. Bit-exact with the standard layout: a size header,
//! then the upper triangle of the adjacency matrix in column-major order,
//! six bits per printable byte (offset 63).

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const OFFSET: u8 = 63;

/// Decodes one graph6 string (a leading ">>graph6<<" header is accepted).
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(format!("byte {b} outside the printable range 63..=126")));
        }
    }

    let (n, body) = if bytes[0] == 126 {
        // Long form: '~' then three bytes of an 18-bit size.
        if bytes.len() < 4 || bytes[1] == 126 {
            return Err(Error::Graph6("unsupported or truncated size header".into()));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - OFFSET) as usize);
        (n, &bytes[4..])
    } else {
        ((bytes[0] - OFFSET) as usize, &bytes[1..])
    };

    if n == 0 {
        return Err(Error::Graph6("graphs must have at least one vertex".into()));
    }
    if n > MAX_VERTICES {
        return Err(Error::Graph6(format!("n = {n} exceeds the {MAX_VERTICES}-vertex cap")));
    }

    let nbits = n * (n - 1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} adjacency bytes for n = {n}, found {}",
            body.len()
        )));
    }

    let mut g = Graph::new(n)?;
    let mut bit = 0usize;
    for v in 1..n {
        for u in 0..v {
            let chunk = (body[bit / 6] - OFFSET) as usize;
            if chunk >> (5 - bit % 6) & 1 == 1 {
                g.add_edge(u, v)?;
            }
            bit += 1;
        }
    }
    // Padding bits must be zero.
    for pad in nbits..expected * 6 {
        let chunk = (body[pad / 6] - OFFSET) as usize;
        if chunk >> (5 - pad % 6) & 1 == 1 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Ok(g)
}

/// Encodes a graph as a graph6 string.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + OFFSET);
        out.push(((n >> 6) & 0x3f) as u8 + OFFSET);
        out.push((n & 0x3f) as u8 + OFFSET);
    }
    let nbits = n * (n - 1) / 2;
    let mut chunk = 0u8;
    let mut filled = 0usize;
    for v in 1..n {
        for u in 0..v {
            chunk <<= 1;
            chunk |= g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(chunk + OFFSET);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        chunk <<= 6 - filled;
        out.push(chunk + OFFSET);
    }
    debug_assert_eq!(out.len() - if n <= 62 { 1 } else { 4 }, nbits.div_ceil(6));
    String::from_utf8(out).expect("printable ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::graph_from_edge_mask;

    #[test]
    fn decodes_k4() {
        let g = parse_graph6("C~").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn decodes_k1() {
        let g = parse_graph6("@").unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn round_trips_cr() {
        let g = parse_graph6("Cr").unwrap();
        assert_eq!(to_graph6(&g), "Cr");
        // "Cr" is the 4-cycle 0-1-3-2-0.
        assert_eq!(g.degree_sequence_sorted(), vec![2, 2, 2, 2]);
        assert_eq!(g.edge_count(), 4);
    }

    #[test]
    fn accepts_format_header() {
        assert_eq!(parse_graph6(">>graph6<<C~").unwrap().n(), 4);
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("C").is_err()); // missing adjacency byte
        assert!(parse_graph6("C~~").is_err()); // extra byte
        assert!(parse_graph6("Cr\u{7f}").is_err()); // out-of-range byte
        assert!(parse_graph6("?").is_err()); // n = 0
        assert!(parse_graph6("B~").is_err()); // nonzero padding for n = 3
    }

    #[test]
    fn round_trips_exhaustively_for_small_n() {
        for n in 1..=5usize {
            let pairs = n * (n - 1) / 2;
            for mask in 0u64..(1 << pairs) {
                let g = graph_from_edge_mask(n, mask);
                let enc = to_graph6(&g);
                let back = parse_graph6(&enc).unwrap();
                assert_eq!(back, g, "n={n} mask={mask} enc={enc}");
            }
        }
    }

    #[test]
    fn encodes_largest_supported_size() {
        let g = Graph::from_edges(63, [(0usize, 62usize)]).unwrap();
        let enc = to_graph6(&g);
        assert!(enc.starts_with('~'));
        let back = parse_graph6(&enc).unwrap();
        assert_eq!(back, g);
    }
}
