//! graph6 encoding (short form, up to 62 vertices).
//!
//! Byte 0 is `n + 63`; the upper triangle follows column by column
//! (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), six bits per byte, most
//! significant bit first, each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_GRAPH6_VERTICES: usize = 62;

impl Graph {
    pub fn to_graph6(&self) -> Result<String> {
        let n = self.n();
        if n > MAX_GRAPH6_VERTICES {
            return Err(Error::Graph6(format!(
                "{n} vertices needs the long form, which is not supported"
            )));
        }
        let bits = n * n.saturating_sub(1) / 2;
        let mut out = Vec::with_capacity(1 + bits.div_ceil(6));
        out.push(n as u8 + 63);
        let mut acc = 0u8;
        let mut filled = 0;
        for j in 1..n {
            let row = self.row(j);
            for i in 0..j {
                acc = acc << 1 | (row >> i & 1) as u8;
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
        // all bytes are in 63..=126
        Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
    }

    /// Decodes a graph6 string. Trailing line terminators are ignored; the
    /// `>>graph6<<` header is not accepted and padding bits must be zero.
    pub fn from_graph6(s: &str) -> Result<Graph> {
        let bytes = s.trim_end_matches(['\n', '\r']).as_bytes();
        let (&first, body) = bytes
            .split_first()
            .ok_or_else(|| Error::Graph6("empty input".into()))?;
        if !(63..=126).contains(&first) {
            return Err(Error::Graph6(format!("invalid size byte {first:#04x}")));
        }
        if first == 126 {
            return Err(Error::Graph6("long form (n > 62) is not supported".into()));
        }
        let n = (first - 63) as usize;
        let bits = n * n.saturating_sub(1) / 2;
        let want = bits.div_ceil(6);
        if body.len() != want {
            return Err(Error::Graph6(format!(
                "expected {want} data bytes for {n} vertices, found {}",
                body.len()
            )));
        }
        let mut rows = vec![0u64; n];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                let byte = body[k / 6];
                if !(63..=126).contains(&byte) {
                    return Err(Error::Graph6(format!("invalid data byte {byte:#04x}")));
                }
                if (byte - 63) >> (5 - k % 6) & 1 == 1 {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
                k += 1;
            }
        }
        if !bits.is_multiple_of(6) {
            let last = body[want - 1];
            if !(63..=126).contains(&last) {
                return Err(Error::Graph6(format!("invalid data byte {last:#04x}")));
            }
            let pad = 6 - bits % 6;
            if (last - 63) & ((1 << pad) - 1) != 0 {
                return Err(Error::Graph6("nonzero padding bits".into()));
            }
        }
        Graph::from_rows(&rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_is_c_tilde() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.to_graph6().unwrap(), "C~");
        assert_eq!(Graph::from_graph6("C~").unwrap(), k4);
    }

    #[test]
    fn known_strings() {
        // n=5 with edges 0-2, 0-4, 1-3, 3-4
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(g.to_graph6().unwrap(), "DQc");
        assert_eq!(Graph::empty(0).unwrap().to_graph6().unwrap(), "?");
        assert_eq!(Graph::empty(1).unwrap().to_graph6().unwrap(), "@");
        assert_eq!(
            Graph::from_edges(2, [(0, 1)]).unwrap().to_graph6().unwrap(),
            "A_"
        );
    }

    #[test]
    fn rejects_malformed() {
        assert!(Graph::from_graph6("").is_err());
        assert!(Graph::from_graph6("C").is_err());
        assert!(Graph::from_graph6("C~~").is_err());
        assert!(Graph::from_graph6("A`").is_err()); // padding bit set
        assert!(Graph::from_graph6("~?@").is_err());
        assert!(Graph::from_graph6("C\u{7f}").is_err());
    }

    #[test]
    fn sixty_two_vertices() {
        let g = Graph::complete(62).unwrap();
        let s = g.to_graph6().unwrap();
        assert_eq!(Graph::from_graph6(&s).unwrap(), g);
        assert!(Graph::complete(63).unwrap().to_graph6().is_err());
    }
}
