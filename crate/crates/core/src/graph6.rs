//! graph6 encoding: `N(n)` followed by the upper triangle of the adjacency
//! matrix in column order (`x(0,1) x(0,2) x(1,2) x(0,3) ..`), packed six
//! bits per byte and offset by 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let (base, body) = match text.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, text.as_bytes()),
    };
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(
                base + i,
                format!("byte {b:#04x} outside 63..=126"),
            ));
        }
    }
    let (n, start) = match body {
        [] => return Err(Error::parse(base, "empty input")),
        [126, 126, ..] => {
            return Err(Error::parse(
                base,
                "vertex counts above 258047 are not supported",
            ))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::parse(base + body.len(), "truncated vertex count"));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, 4)
        }
        [b, ..] => ((b - 63) as usize, 1),
    };
    if n > MAX_VERTICES {
        return Err(Error::parse(
            base,
            format!("{n} vertices exceeds the limit of {MAX_VERTICES}"),
        ));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = start + bits.div_ceil(6);
    if body.len() != expected {
        let offset = base + body.len().min(expected);
        return Err(Error::parse(
            offset,
            format!(
                "expected {expected} bytes for {n} vertices, found {}",
                body.len()
            ),
        ));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[start + k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(write_graph6(&k3), "Bw");
        assert_eq!(write_graph6(&parse_graph6("Bw").unwrap()), "Bw");
    }

    #[test]
    fn single_vertex_and_empty() {
        assert_eq!(write_graph6(&Graph::empty(1).unwrap()), "@");
        assert_eq!(write_graph6(&Graph::empty(0).unwrap()), "?");
        assert_eq!(parse_graph6("?").unwrap().n(), 0);
    }

    #[test]
    fn known_five_vertex_string() {
        // a-c, a-e, b-d, d-e
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(write_graph6(&g), "DQc");
    }

    #[test]
    fn long_vertex_count_form() {
        let g = Graph::path(64).unwrap();
        let s = write_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn header_is_accepted() {
        assert_eq!(
            parse_graph6(">>graph6<<Bw").unwrap(),
            Graph::complete(3).unwrap()
        );
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(
            parse_graph6("B w"),
            Err(Error::Parse {
                offset: 1,
                message: "byte 0x20 outside 63..=126".into()
            })
        );
        assert!(matches!(
            parse_graph6("Bww"),
            Err(Error::Parse { offset: 2, .. })
        ));
        assert!(matches!(
            parse_graph6("C"),
            Err(Error::Parse { offset: 1, .. })
        ));
        assert!(matches!(
            parse_graph6(""),
            Err(Error::Parse { offset: 0, .. })
        ));
        assert!(parse_graph6("~?A?").is_err());
    }
}
