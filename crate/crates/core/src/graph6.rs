//! graph6 encoding: vertex count header followed by the upper triangle of the
//! adjacency matrix, column by column, packed into 6-bit chunks offset by 63.

use crate::error::{Error, Result};
use crate::graph::{bit, Graph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = (chunk << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn malformed(offset: usize, reason: impl Into<String>) -> Error {
    Error::MalformedGraph6 {
        offset,
        reason: reason.into(),
    }
}

pub fn decode(text: &str) -> Result<Graph> {
    let trimmed = text.trim_end_matches(['\n', '\r']);
    let (base, body) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, trimmed.as_bytes()),
    };
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(malformed(base + i, format!("byte {b:#04x} outside 63..=126")));
        }
    }
    let Some(&first) = body.first() else {
        return Err(malformed(base, "empty input"));
    };
    let (n, mut pos) = if first < 126 {
        ((first - 63) as usize, 1)
    } else {
        if body.len() < 4 {
            return Err(malformed(base + body.len(), "truncated extended vertex count"));
        }
        if body[1] == 126 {
            return Err(malformed(base + 1, "vertex counts above 258047 are not supported"));
        }
        let n = body[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 4)
    };
    if n > MAX_VERTICES {
        return Err(malformed(base, format!("{n} vertices exceeds {MAX_VERTICES}")));
    }
    let bits_needed = n * n.saturating_sub(1) / 2;
    let bytes_needed = bits_needed.div_ceil(6);
    let data = &body[pos..];
    if data.len() != bytes_needed {
        let at = base + pos + data.len().min(bytes_needed);
        return Err(malformed(
            at,
            format!("expected {bytes_needed} data bytes for n = {n}, found {}", data.len()),
        ));
    }
    let mut rows = vec![0u64; n];
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
            k += 1;
        }
    }
    if bits_needed % 6 != 0 {
        let last = data[bytes_needed - 1] - 63;
        let pad = 6 - bits_needed % 6;
        if last & ((1 << pad) - 1) != 0 {
            pos += bytes_needed - 1;
            return Err(malformed(base + pos, "nonzero padding bits"));
        }
    }
    Graph::from_rows(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::Family;

    #[test]
    fn hand_encoded_k2_and_i2() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(encode(&k2), "A_");
        let i2 = decode("A?").unwrap();
        assert_eq!((i2.n(), i2.edge_count()), (2, 0));
    }

    #[test]
    fn known_strings() {
        // Standard catalogue strings: K4 = "C~", C5 = "Dhc", K5 = "D~{".
        assert_eq!(encode(&Family::Complete(4).construct().unwrap()), "C~");
        assert_eq!(encode(&Family::Cycle(5).construct().unwrap()), "Dhc");
        assert_eq!(encode(&Family::Complete(5).construct().unwrap()), "D~{");
        // petgraph's test graph: edges ac, ae, bd, de.
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g), "DQc");
    }

    #[test]
    fn round_trip_is_exact() {
        let g = Family::TwoApexCycle(10).construct().unwrap();
        assert_eq!(decode(&encode(&g)).unwrap(), g);
        let mut big = Graph::empty(64).unwrap();
        big.add_edge(3, 63);
        big.add_edge(0, 1);
        let s = encode(&big);
        assert!(s.starts_with('~'));
        assert_eq!(decode(&s).unwrap(), big);
        assert_eq!(decode(&format!(">>graph6<<{}\n", encode(&g))).unwrap(), g);
    }

    #[test]
    fn malformed_offsets() {
        match decode("A") {
            Err(Error::MalformedGraph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("{other:?}"),
        }
        match decode("B?!") {
            Err(Error::MalformedGraph6 { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("{other:?}"),
        }
        assert!(decode("").is_err());
        assert!(decode("A`").is_err(), "padding bit set");
        assert!(decode("A??").is_err(), "trailing byte");
    }
}
