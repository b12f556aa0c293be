//! graph6 encoding: a size prefix followed by the upper triangle
//! `x(0,1), x(0,2), x(1,2), x(0,3), ...` packed six bits per byte, each byte
//! offset by 63, padding bits zero.

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 { offset, reason: reason.into() }
}

/// Decodes one graph6 line. Surrounding whitespace and an optional
/// `>>graph6<<` header are ignored; offsets in errors refer to the input.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let lead = text.len() - text.trim_start().len();
    let mut body = text.trim();
    let mut base = lead;
    if let Some(rest) = body.strip_prefix(HEADER) {
        body = rest;
        base += HEADER.len();
    }
    let bytes = body.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(base + i, format!("byte {b} outside the printable range 63..126")));
        }
    }
    let (n, start) = parse_size(bytes).map_err(|(off, msg)| err(base + off, msg))?;
    if n == 0 {
        return Err(err(base, "zero-vertex graph"));
    }
    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    let data = &bytes[start..];
    if data.len() != nbytes {
        return Err(err(
            base + start + data.len().min(nbytes),
            format!("expected {nbytes} data bytes for n = {n}, found {}", data.len()),
        ));
    }
    let mut g = Graph::empty(n);
    let mut k = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = data[k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                g.set(u, v);
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = data[nbytes - 1] - 63;
        let pad_mask = (1u8 << (6 - nbits % 6)) - 1;
        if last & pad_mask != 0 {
            return Err(err(base + start + nbytes - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

fn parse_size(bytes: &[u8]) -> std::result::Result<(usize, usize), (usize, String)> {
    let read = |from: usize, count: usize| -> std::result::Result<usize, (usize, String)> {
        if bytes.len() < from + count {
            return Err((bytes.len(), "truncated size prefix".to_string()));
        }
        Ok(bytes[from..from + count].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize))
    };
    match bytes.first() {
        None => Err((0, "empty input".into())),
        Some(126) => {
            if bytes.get(1) == Some(&126) {
                let n = read(2, 6)?;
                if n <= 258_047 {
                    return Err((0, format!("non-canonical 8-byte size prefix for n = {n}")));
                }
                Ok((n, 8))
            } else {
                let n = read(1, 3)?;
                if n <= 62 {
                    return Err((0, format!("non-canonical 4-byte size prefix for n = {n}")));
                }
                Ok((n, 4))
            }
        }
        Some(&b) => Ok(((b - 63) as usize, 1)),
    }
}

/// Encodes `g` as graph6 (no header, no newline).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut k = 0usize;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            k += 1;
            if k.is_multiple_of(6) {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if !k.is_multiple_of(6) {
        out.push((acc << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;
    use proptest::prelude::*;

    #[test]
    fn decodes_documented_strings() {
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edges(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(write_graph6(&g), "D?{");

        // K4: six upper-triangle bits all set -> 0b111111 + 63 = '~'
        let k4 = parse_graph6("C~").unwrap();
        assert_eq!(k4.edge_count(), 6);
        assert_eq!(k4, generate("complete", &[4]).unwrap());

        // K2: one bit, padded -> 0b100000 + 63 = '_'
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!(k2.edges(), vec![(0, 1)]);
        assert_eq!(write_graph6(&generate("complete", &[2]).unwrap()), "A_");
        assert_eq!(write_graph6(&Graph::empty(3)), "B?");
        assert_eq!(parse_graph6(">>graph6<<A_\n").unwrap(), k2);
    }

    #[test]
    fn petersen_round_trip() {
        let p = generate("petersen", &[]).unwrap();
        let s = write_graph6(&p);
        assert_eq!(s.len(), 1 + 45usize.div_ceil(6));
        assert_eq!(parse_graph6(&s).unwrap(), p);
    }

    #[test]
    fn long_form_size_prefix() {
        let g = generate("cycle", &[70]).unwrap();
        let s = write_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn reports_offsets() {
        match parse_graph6("C~ ") {
            Ok(_) => {}
            Err(e) => panic!("{e}"),
        }
        assert_eq!(parse_graph6("A\u{7f}"), Err(Error::Graph6 { offset: 1, reason: "byte 127 outside the printable range 63..126".into() }));
        // 'A' + '`' has a padding bit set
        match parse_graph6("A`") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("{other:?}"),
        }
        match parse_graph6("C~~") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("{other:?}"),
        }
        match parse_graph6("~??") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 3),
            other => panic!("{other:?}"),
        }
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("?").is_err());
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..80).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut it = bits.into_iter();
                Graph::from_fn(n, |_, _| it.next().unwrap())
            })
        })
    }

    proptest! {
        #[test]
        fn round_trip(g in arb_graph()) {
            let s = write_graph6(&g);
            prop_assert!(s.bytes().all(|b| (63..=126).contains(&b)));
            prop_assert_eq!(parse_graph6(&s).unwrap(), g);
        }
    }
}
