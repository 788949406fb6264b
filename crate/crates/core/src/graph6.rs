//! graph6 encoding: a size header followed by the upper triangle of the
//! adjacency matrix, column by column, packed six bits per printable byte.

use crate::error::{Error, Result};
use crate::graph::Graph;

const BIAS: u8 = 63;
const MAX_SHORT_N: usize = 62;
const MAX_N: usize = 258_047;

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u8> {
    match bytes.get(offset) {
        Some(&b) if (BIAS..=126).contains(&b) => Ok(b - BIAS),
        Some(&b) => Err(err(
            offset,
            format!("byte {b} outside printable range 63..=126"),
        )),
        None => Err(err(offset, "unexpected end of input")),
    }
}

/// Decodes one graph6 line. A trailing newline and an optional
/// `>>graph6<<` header are accepted.
pub fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let mut data = text;
    while let Some((&last, rest)) = data.split_last() {
        if last == b'\n' || last == b'\r' {
            data = rest;
        } else {
            break;
        }
    }
    let base = if data.starts_with(b">>graph6<<") {
        10
    } else {
        0
    };
    let bytes = &data[base..];
    let at = |o: usize| o + base;

    let first = *bytes.first().ok_or_else(|| err(at(0), "empty input"))?;
    let (n, header_len) = if first == 126 {
        if bytes.get(1) == Some(&126) {
            return Err(err(
                at(1),
                format!("graphs with more than {MAX_N} vertices are not supported"),
            ));
        }
        let mut n = 0usize;
        for k in 1..=3 {
            n = (n << 6) | sextet(bytes, k).map_err(|e| relocate(e, base))? as usize;
        }
        (n, 4)
    } else {
        (sextet(bytes, 0).map_err(|e| relocate(e, base))? as usize, 1)
    };
    if n == 0 {
        return Err(err(at(0), "graph must have at least one vertex"));
    }

    let bits = n * (n - 1) / 2;
    let body_len = bits.div_ceil(6);
    let body = &bytes[header_len..];
    if body.len() < body_len {
        return Err(err(
            at(bytes.len()),
            format!("expected {body_len} adjacency bytes, found {}", body.len()),
        ));
    }
    if body.len() > body_len {
        return Err(err(
            at(header_len + body_len),
            "trailing data after adjacency bytes",
        ));
    }

    let mut edges = Vec::new();
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let offset = header_len + bit / 6;
            let value = sextet(bytes, offset).map_err(|e| relocate(e, base))?;
            if value & (1 << (5 - bit % 6)) != 0 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    // Validate every body byte (covers bodies whose only byte is padding)
    // and require zero padding bits in the last one.
    for k in 0..body_len {
        sextet(bytes, header_len + k).map_err(|e| relocate(e, base))?;
    }
    let pad = body_len * 6 - bits;
    if pad > 0 {
        let last = header_len + body_len - 1;
        let value = bytes[last] - BIAS;
        if value & ((1u8 << pad) - 1) != 0 {
            return Err(err(at(last), "nonzero padding bits"));
        }
    }
    Graph::from_edges(n, edges)
}

fn relocate(e: Error, base: usize) -> Error {
    match e {
        Error::Graph6 { offset, reason } => Error::Graph6 {
            offset: offset + base,
            reason,
        },
        other => other,
    }
}

/// Encodes `g` as a graph6 string (no header, no newline).
pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    let mut out = Vec::new();
    if n <= MAX_SHORT_N {
        out.push(n as u8 + BIAS);
    } else if n <= MAX_N {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    } else {
        return Err(Error::InvalidGraph(format!(
            "graph6 encoding supports at most {MAX_N} vertices, got {n}"
        )));
    }

    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate_family, Family};

    #[test]
    fn small_examples() {
        let p3 = parse_graph6(b"Bg").unwrap();
        assert_eq!(p3, generate_family(Family::Path, 3).unwrap());

        // "B_" sets only the first bit: edge {0,1} plus an isolated vertex.
        let b = parse_graph6(b"B_").unwrap();
        assert_eq!(b.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(b.n(), 3);

        let k2 = parse_graph6(b"A_").unwrap();
        assert_eq!(k2, generate_family(Family::Complete, 2).unwrap());

        let single = parse_graph6(b"@").unwrap();
        assert_eq!((single.n(), single.m()), (1, 0));
    }

    #[test]
    fn known_encodings() {
        assert_eq!(
            encode_graph6(&generate_family(Family::Path, 3).unwrap()).unwrap(),
            "Bg"
        );
        assert_eq!(
            encode_graph6(&generate_family(Family::Complete, 2).unwrap()).unwrap(),
            "A_"
        );
        // C_5 and K_4 are standard nauty outputs.
        assert_eq!(
            encode_graph6(&generate_family(Family::Complete, 4).unwrap()).unwrap(),
            "C~"
        );
        assert_eq!(
            encode_graph6(&generate_family(Family::Cycle, 5).unwrap()).unwrap(),
            "Dhc"
        );
    }

    #[test]
    fn extended_header() {
        let g = generate_family(Family::Path, 70).unwrap();
        let s = encode_graph6(&g).unwrap();
        assert!(s.starts_with("~?@E"));
        assert_eq!(parse_graph6(s.as_bytes()).unwrap(), g);
    }

    #[test]
    fn header_and_newline_accepted() {
        let g = parse_graph6(b">>graph6<<Bg\n").unwrap();
        assert_eq!(g.m(), 2);
    }

    #[test]
    fn errors_carry_offsets() {
        assert!(matches!(
            parse_graph6(b""),
            Err(Error::Graph6 { offset: 0, .. })
        ));
        // Byte 32 (space) is below the printable range.
        assert!(matches!(
            parse_graph6(b"B "),
            Err(Error::Graph6 { offset: 1, .. })
        ));
        // Missing body byte.
        assert!(matches!(
            parse_graph6(b"B"),
            Err(Error::Graph6 { offset: 1, .. })
        ));
        // Extra body byte.
        assert!(matches!(
            parse_graph6(b"Bg?"),
            Err(Error::Graph6 { offset: 2, .. })
        ));
        // 'a' = 97 - 63 = 34 = 0b100010: the low padding bit is set.
        assert!(matches!(
            parse_graph6(b"Ba"),
            Err(Error::Graph6 { offset: 1, ref reason }) if reason.contains("padding")
        ));
        // Truncated extended header.
        assert!(matches!(
            parse_graph6(b"~?@"),
            Err(Error::Graph6 { offset: 3, .. })
        ));
        assert!(matches!(
            parse_graph6(b"~~??????"),
            Err(Error::Graph6 { offset: 1, .. })
        ));
        // n = 0 is not a graph.
        assert!(parse_graph6(b"?").is_err());
        // Offsets account for the optional header.
        assert!(matches!(
            parse_graph6(b">>graph6<<B "),
            Err(Error::Graph6 { offset: 11, .. })
        ));
    }
}
