//! Edge-list and graph6 encodings.
//!
//! Edge list: a header line `n m`, then `m` lines `i j` with `0 <= i < j < n`.
//! Lines starting with `#` are comments. Output is always canonical (sorted
//! edges, LF endings, trailing newline).
//!
//! graph6: the standard short form, `n <= 62`.

use crate::graph::{Graph, GraphError};

pub const GRAPH6_MAX_N: usize = 62;

fn parse_err(line: usize, msg: impl Into<String>) -> GraphError {
    GraphError::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_usize(tok: &str, line: usize, what: &str) -> Result<usize, GraphError> {
    tok.parse::<usize>()
        .map_err(|_| parse_err(line, format!("invalid {what} {tok:?}")))
}

pub fn from_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.starts_with('#') && !l.trim().is_empty());

    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 2 {
        return Err(parse_err(hline, "header must be \"n m\""));
    }
    let n = parse_usize(toks[0], hline, "vertex count")?;
    let m = parse_usize(toks[1], hline, "edge count")?;
    let mut g = Graph::empty(n).map_err(|e| parse_err(hline, e.to_string()))?;
    let mut count = 0;
    let mut last_line = hline;
    for (lineno, line) in lines {
        last_line = lineno;
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(parse_err(lineno, "edge line must be \"i j\""));
        }
        let a = parse_usize(toks[0], lineno, "vertex")?;
        let b = parse_usize(toks[1], lineno, "vertex")?;
        g.insert_edge(a, b)
            .map_err(|e| parse_err(lineno, e.to_string()))?;
        count += 1;
    }
    if count != m {
        return Err(parse_err(
            last_line,
            format!("header declares {m} edges, found {count}"),
        ));
    }
    Ok(g)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (a, b) in g.edges() {
        out.push_str(&format!("{a} {b}\n"));
    }
    out
}

pub fn from_graph6(line: &str) -> Result<Graph, GraphError> {
    let bytes = line.trim_end_matches(['\n', '\r']).as_bytes();
    let first = *bytes.first().ok_or_else(|| parse_err(1, "empty graph6 string"))?;
    for (i, &c) in bytes.iter().enumerate() {
        if !(63..=126).contains(&c) {
            return Err(parse_err(1, format!("invalid graph6 character at byte {i}")));
        }
    }
    if first == 126 {
        return Err(parse_err(1, format!("graph6 long form (n > {GRAPH6_MAX_N}) unsupported")));
    }
    let n = (first - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    let body = &bytes[1..];
    if body.len() < need {
        return Err(parse_err(1, "truncated graph6 bit vector"));
    }
    if body.len() > need {
        return Err(parse_err(1, "trailing data after graph6 bit vector"));
    }
    let bit = |k: usize| -> bool {
        let byte = body[k / 6] - 63;
        byte & (1 << (5 - k % 6)) != 0
    };
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
    Graph::from_edges(n, edges)
}

pub fn to_graph6(g: &Graph) -> Result<String, GraphError> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(GraphError::Contract(format!(
            "graph6 short form supports n <= {GRAPH6_MAX_N}, got {n}"
        )));
    }
    let mut out = vec![(n as u8) + 63];
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
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
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Parses a file with one graph6 string per line; blank lines and `#`
/// comments are skipped. Errors carry the file line number.
pub fn read_graph6_lines(text: &str) -> Result<Vec<Graph>, GraphError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
        let g = from_graph6(line).map_err(|e| match e {
            GraphError::Parse { msg, .. } => parse_err(i + 1, msg),
            other => parse_err(i + 1, other.to_string()),
        })?;
        out.push(g);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn edge_list_examples() {
        let c4 = from_edge_list("4 4\n0 1\n1 2\n2 3\n3 0").unwrap();
        assert_eq!(c4.m(), 4);
        assert!(c4.has_edge(0, 3));
        let k1 = from_edge_list("1 0").unwrap();
        assert_eq!((k1.n(), k1.m()), (1, 0));
        let tri = from_edge_list("3 3\n0 1\n1 2\n2 0").unwrap();
        assert_eq!(tri.neighbors(0).to_vec(), vec![1, 2]);
    }

    #[test]
    fn edge_list_comments_and_canonical_output() {
        let g = from_edge_list("# square\n4 4\n0 1\n# mid\n1 2\n2 3\n3 0\n").unwrap();
        assert_eq!(to_edge_list(&g), "4 4\n0 1\n0 3\n1 2\n2 3\n");
    }

    #[test]
    fn edge_list_errors_name_lines() {
        let cases = [
            ("4\n0 1", 1),
            ("x 1\n0 1", 1),
            ("3 1\n0 3", 2),
            ("3 1\n1 1", 2),
            ("3 2\n0 1\n1 0", 3),
            ("3 2\n0 1", 2),
            ("3 1\n0 1 2", 2),
        ];
        for (text, line) in cases {
            match from_edge_list(text) {
                Err(GraphError::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: expected parse error, got {other:?}"),
            }
        }
    }

    #[test]
    fn graph6_hand_decoded() {
        // 'C' = 4 vertices; '~' - 63 = 0b111111, all six pairs present
        let k4 = from_graph6("C~").unwrap();
        assert_eq!((k4.n(), k4.m()), (4, 6));
        // '?' - 63 = 0: no edges
        let two = from_graph6("A?").unwrap();
        assert_eq!((two.n(), two.m()), (2, 0));
        // '_' - 63 = 0b100000: the single pair bit is set
        let k2 = from_graph6("A_").unwrap();
        assert_eq!((k2.n(), k2.m()), (2, 1));
        assert_eq!(to_graph6(&k4).unwrap(), "C~");
    }

    #[test]
    fn graph6_errors() {
        assert!(from_graph6("").is_err());
        assert!(from_graph6("C").is_err()); // truncated
        assert!(from_graph6("C~~").is_err()); // trailing
        assert!(from_graph6("C\x7f").is_err());
        assert!(from_graph6("~?@").is_err()); // long form
        assert!(from_graph6("C ").is_err());
    }

    #[test]
    fn graph6_file_reports_line() {
        let err = read_graph6_lines("C~\n\nC\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 3, .. }));
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..=62).prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for j in 1..n {
                    for i in 0..j {
                        if bits[k] {
                            edges.push((i, j));
                        }
                        k += 1;
                    }
                }
                Graph::from_edges(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn graph6_round_trip(g in arb_graph()) {
            let s = to_graph6(&g).unwrap();
            prop_assert_eq!(from_graph6(&s).unwrap(), g);
        }

        #[test]
        fn edge_list_round_trip(g in arb_graph()) {
            prop_assert_eq!(from_edge_list(&to_edge_list(&g)).unwrap(), g);
        }
    }
}
