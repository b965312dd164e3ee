//! Text formats.
//!
//! **arclist v1**: a header line `n m`, then `m` lines `u v` (0-based).
//!
//! **adjacency matrix**: a header line `n`, then `n` rows of `n` characters
//! `0`/`1`; entry `(u, v)` set means the arc `uv`.
//!
//! The reader picks the format from the number of fields on the header
//! line. The writer always emits arclist with arcs sorted lexicographically.

use std::fmt::Write as _;

use crate::bits::{bit, contains};
use crate::digraph::{Digraph, MAX_ORDER};
use crate::error::{Error, Result};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_usize(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| parse_err(line, format!("expected {what}, found `{tok}`")))
}

/// Parses either supported format.
pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    match fields.as_slice() {
        [n, m] => {
            let n = parse_usize(n, hline, "vertex count")?;
            let m = parse_usize(m, hline, "arc count")?;
            parse_arclist_body(n, m, hline, lines)
        }
        [n] => {
            let n = parse_usize(n, hline, "vertex count")?;
            parse_matrix_body(n, hline, lines)
        }
        _ => Err(parse_err(
            hline,
            "header must be `n m` (arclist) or `n` (adjacency matrix)",
        )),
    }
}

fn check_header_order(n: usize, line: usize) -> Result<()> {
    if n > MAX_ORDER {
        Err(parse_err(
            line,
            format!("order {n} exceeds the supported maximum of {MAX_ORDER}"),
        ))
    } else {
        Ok(())
    }
}

fn parse_arclist_body<'a>(
    n: usize,
    m: usize,
    hline: usize,
    mut lines: impl Iterator<Item = (usize, &'a str)>,
) -> Result<Digraph> {
    check_header_order(n, hline)?;
    let mut out = vec![0u64; n];
    let mut last_line = hline;
    for i in 0..m {
        let (line, text) = lines
            .next()
            .ok_or_else(|| parse_err(last_line + 1, format!("expected {m} arcs, found {i}")))?;
        last_line = line;
        let toks: Vec<&str> = text.split_whitespace().collect();
        let [u, v] = toks.as_slice() else {
            return Err(parse_err(line, "expected `u v`"));
        };
        let u = parse_usize(u, line, "vertex")?;
        let v = parse_usize(v, line, "vertex")?;
        if u >= n || v >= n {
            return Err(parse_err(
                line,
                format!("arc ({u},{v}) has an endpoint outside 0..{n}"),
            ));
        }
        if u == v {
            return Err(parse_err(line, format!("arc ({u},{v}) is a loop")));
        }
        if contains(out[u], v) {
            return Err(parse_err(
                line,
                format!("arc ({u},{v}) appears more than once"),
            ));
        }
        out[u] |= bit(v);
    }
    if let Some((line, _)) = lines.next() {
        return Err(parse_err(line, format!("trailing content after {m} arcs")));
    }
    Ok(Digraph::from_rows_unchecked(n, out))
}

fn parse_matrix_body<'a>(
    n: usize,
    hline: usize,
    mut lines: impl Iterator<Item = (usize, &'a str)>,
) -> Result<Digraph> {
    check_header_order(n, hline)?;
    let mut out = vec![0u64; n];
    let mut last_line = hline;
    for (u, row) in out.iter_mut().enumerate() {
        let (line, text) = lines.next().ok_or_else(|| {
            parse_err(
                last_line + 1,
                format!("expected {n} matrix rows, found {u}"),
            )
        })?;
        last_line = line;
        let cells: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        if cells.len() != n {
            return Err(parse_err(
                line,
                format!("expected {n} entries, found {}", cells.len()),
            ));
        }
        for (v, c) in cells.into_iter().enumerate() {
            match c {
                '0' => {}
                '1' if u == v => return Err(parse_err(line, format!("arc ({u},{v}) is a loop"))),
                '1' => *row |= bit(v),
                other => return Err(parse_err(line, format!("unexpected character `{other}`"))),
            }
        }
    }
    if let Some((line, _)) = lines.next() {
        return Err(parse_err(line, format!("trailing content after {n} rows")));
    }
    Ok(Digraph::from_rows_unchecked(n, out))
}

/// Serialises to arclist v1.
pub fn write_arclist(d: &Digraph) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{} {}", d.order(), d.arc_count());
    for a in d.arcs() {
        let _ = writeln!(s, "{} {}", a.tail, a.head);
    }
    s
}

/// Serialises to the adjacency-matrix format.
pub fn write_matrix(d: &Digraph) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{}", d.order());
    for u in 0..d.order() {
        for v in 0..d.order() {
            s.push(if d.has_arc(u, v) { '1' } else { '0' });
        }
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_arclist() {
        let d = parse_digraph("3 3\n0 1\n1 2\n2 0\n").unwrap();
        assert_eq!(d, Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap());
    }

    #[test]
    fn parses_matrix() {
        let d = parse_digraph("3\n010\n001\n100\n").unwrap();
        assert_eq!(d, Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap());
    }

    #[test]
    fn writer_sorts_arcs() {
        let d = Digraph::from_arcs(3, [(2, 0), (0, 2), (0, 1)]).unwrap();
        assert_eq!(write_arclist(&d), "3 3\n0 1\n0 2\n2 0\n");
        assert_eq!(write_matrix(&d), "3\n011\n000\n100\n");
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = |t: &str| match parse_digraph(t) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected parse error, got {other:?}"),
        };
        assert_eq!(err(""), 1);
        assert_eq!(err("3 2\n0 1\n0 1\n"), 3);
        assert_eq!(err("3 2\n0 1\n1 1\n"), 3);
        assert_eq!(err("3 1\n0 5\n"), 2);
        assert_eq!(err("3 2\n0 1\n"), 3);
        assert_eq!(err("3 1\n0 1\n1 2\n"), 3);
        assert_eq!(err("3 1\nx 1\n"), 2);
        assert_eq!(err("2\n01\n11\n"), 3);
        assert_eq!(err("2\n01\n1\n"), 3);
        assert_eq!(err("2\n0a\n10\n"), 2);
        assert_eq!(err("1 2 3\n"), 1);
        assert_eq!(err("65 0\n"), 1);
    }

    proptest! {
        #[test]
        fn arclist_and_matrix_round_trip(n in 0usize..9, seed in any::<u64>()) {
            let rows: Vec<u64> = (0..n)
                .map(|u| {
                    let mut x = seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).rotate_left(u as u32 * 7);
                    x ^= x >> 29;
                    x & crate::bits::full(n) & !bit(u)
                })
                .collect();
            let d = Digraph::from_out_rows(&rows).unwrap();
            prop_assert_eq!(parse_digraph(&write_arclist(&d)).unwrap(), d.clone());
            prop_assert_eq!(parse_digraph(&write_matrix(&d)).unwrap(), d);
        }
    }
}
