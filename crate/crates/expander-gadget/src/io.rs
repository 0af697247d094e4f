//! Text formats: edge lists, update streams, OMv matrices and query vectors.

use crate::error::{Error, Result};
use crate::graph::Graph;
use std::fmt::Write;

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Non-blank, non-comment lines with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn two_numbers(line: usize, s: &str) -> Result<(usize, usize)> {
    let mut it = s.split_whitespace();
    let a = it.next().ok_or_else(|| perr(line, "expected two integers"))?;
    let b = it.next().ok_or_else(|| perr(line, "expected two integers"))?;
    if it.next().is_some() {
        return Err(perr(line, "trailing tokens"));
    }
    let a = a.parse().map_err(|_| perr(line, format!("not a vertex id: {a:?}")))?;
    let b = b.parse().map_err(|_| perr(line, format!("not a vertex id: {b:?}")))?;
    Ok((a, b))
}

/// `n m` header then `m` lines `u v`; `#` lines are comments.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| perr(1, "missing `n m` header"))?;
    let (n, m) = two_numbers(hl, header)?;
    let mut g = Graph::new(n);
    let mut count = 0;
    for (ln, l) in lines {
        let (u, v) = two_numbers(ln, l)?;
        g.insert_edge(u, v).map_err(|e| perr(ln, e.to_string()))?;
        count += 1;
    }
    if count != m {
        return Err(perr(hl, format!("header declares {m} edges, found {count}")));
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Op {
    Insert,
    Delete,
}

/// A single `+ u v` / `- u v` line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EdgeUpdate {
    pub op: Op,
    pub u: usize,
    pub v: usize,
}

pub fn parse_updates(text: &str) -> Result<Vec<EdgeUpdate>> {
    content_lines(text)
        .map(|(ln, l)| {
            let sign = l.chars().next().unwrap_or(' ');
            let op = match sign {
                '+' => Op::Insert,
                '-' => Op::Delete,
                _ => return Err(perr(ln, "expected `+ u v` or `- u v`")),
            };
            let (u, v) = two_numbers(ln, &l[sign.len_utf8()..])?;
            Ok(EdgeUpdate { op, u, v })
        })
        .collect()
}

pub fn write_updates<'a, I: IntoIterator<Item = &'a EdgeUpdate>>(updates: I) -> String {
    let mut s = String::new();
    for e in updates {
        let c = if e.op == Op::Insert { '+' } else { '-' };
        writeln!(s, "{c} {} {}", e.u, e.v).unwrap();
    }
    s
}

const VERTICES_HEADER: &str = "# vertices";

/// An event log: `# vertices <n>` then one `+ u v` / `- u v` per line, replayed
/// from the edgeless graph on n vertices.
pub fn write_event_log<'a, I: IntoIterator<Item = &'a EdgeUpdate>>(n: usize, events: I) -> String {
    format!("{VERTICES_HEADER} {n}\n{}", write_updates(events))
}

pub fn is_event_log(text: &str) -> bool {
    text.lines().map(str::trim).find(|l| !l.is_empty()).is_some_and(|l| l.starts_with(VERTICES_HEADER))
}

pub fn parse_event_log(text: &str) -> Result<(usize, Vec<EdgeUpdate>)> {
    let (ln, first) = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .find(|(_, l)| !l.is_empty())
        .ok_or_else(|| perr(1, "empty event log"))?;
    let n = first
        .strip_prefix(VERTICES_HEADER)
        .and_then(|r| r.trim().parse().ok())
        .ok_or_else(|| perr(ln, format!("expected `{VERTICES_HEADER} <n>`")))?;
    Ok((n, parse_updates(text)?))
}

/// Replays a log from the edgeless graph, failing on the first inconsistent event.
pub fn replay(n: usize, events: &[EdgeUpdate]) -> Result<Graph> {
    let mut g = Graph::new(n);
    apply_updates(&mut g, events)?;
    Ok(g)
}

/// Applies updates in order, failing on the first inconsistent one.
pub fn apply_updates(g: &mut Graph, updates: &[EdgeUpdate]) -> Result<()> {
    for e in updates {
        match e.op {
            Op::Insert => g.insert_edge(e.u, e.v)?,
            Op::Delete => g.delete_edge(e.u, e.v)?,
        }
    }
    Ok(())
}

/// `k` then `k` rows of 0/1 (separated by spaces or not).
pub fn parse_matrix(text: &str) -> Result<Vec<Vec<bool>>> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| perr(1, "missing dimension"))?;
    let k: usize = header.parse().map_err(|_| perr(hl, "dimension must be an integer"))?;
    let mut rows = Vec::with_capacity(k);
    for (ln, l) in lines {
        let row = parse_bits(ln, l)?;
        if row.len() != k {
            return Err(perr(ln, format!("expected {k} entries, found {}", row.len())));
        }
        rows.push(row);
    }
    if rows.len() != k {
        return Err(perr(hl, format!("expected {k} rows, found {}", rows.len())));
    }
    Ok(rows)
}

fn parse_bits(line: usize, s: &str) -> Result<Vec<bool>> {
    s.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            _ => Err(perr(line, format!("unexpected character {c:?}"))),
        })
        .collect()
}

pub fn write_matrix(m: &[Vec<bool>]) -> String {
    let mut s = format!("{}\n", m.len());
    for row in m {
        s.push_str(&bits(row));
        s.push('\n');
    }
    s
}

pub fn bits(v: &[bool]) -> String {
    v.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

/// One query per line: `<u bits> <v bits>`.
pub fn parse_queries(text: &str, k: usize) -> Result<Vec<(Vec<bool>, Vec<bool>)>> {
    content_lines(text)
        .map(|(ln, l)| {
            let mut it = l.split_whitespace();
            let (Some(u), Some(v), None) = (it.next(), it.next(), it.next()) else {
                return Err(perr(ln, "expected `<u bits> <v bits>`"));
            };
            let (u, v) = (parse_bits(ln, u)?, parse_bits(ln, v)?);
            if u.len() != k || v.len() != k {
                return Err(perr(ln, format!("vectors must have length {k}")));
            }
            Ok((u, v))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_roundtrip() {
        let g = Graph::cycle(5);
        let text = write_edge_list(&g);
        assert_eq!(text.lines().next(), Some("5 5"));
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_errors_carry_lines() {
        assert_eq!(parse_edge_list("3 1\n0 x\n"), Err(Error::Parse { line: 2, msg: "not a vertex id: \"x\"".into() }));
        assert!(matches!(parse_edge_list("3 2\n0 1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_edge_list("3 2\n0 1\n1 0\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_edge_list(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn updates_roundtrip() {
        let ups = parse_updates("+ 0 1\n# note\n- 0 1\n").unwrap();
        assert_eq!(ups.len(), 2);
        assert_eq!(write_updates(&ups), "+ 0 1\n- 0 1\n");
        assert!(matches!(parse_updates("* 0 1"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn event_log_roundtrip() {
        let ev = [EdgeUpdate { op: Op::Insert, u: 0, v: 2 }, EdgeUpdate { op: Op::Delete, u: 0, v: 2 }];
        let text = write_event_log(3, &ev);
        assert!(is_event_log(&text));
        assert!(!is_event_log("3 0\n"));
        let (n, back) = parse_event_log(&text).unwrap();
        assert_eq!((n, back.as_slice()), (3, &ev[..]));
        assert_eq!(replay(n, &back).unwrap(), Graph::new(3));
        assert!(replay(3, &ev[1..]).is_err());
        assert!(parse_updates("é 0 1").is_err());
    }

    #[test]
    fn matrix_and_queries() {
        let m = parse_matrix("2\n1 0\n01\n").unwrap();
        assert_eq!(m, vec![vec![true, false], vec![false, true]]);
        assert_eq!(write_matrix(&m), "2\n10\n01\n");
        assert!(parse_matrix("2\n10\n").is_err());
        let q = parse_queries("10 01\n", 2).unwrap();
        assert_eq!(q[0].0, vec![true, false]);
        assert!(parse_queries("10 011\n", 2).is_err());
    }
}
