//! Text formats for graphs, matrices, words and orientations.
//!
//! * Graph: a header `n m`, then `m` lines `u v` with vertex ids in `1..=n`.
//!   Lines starting with `#` and blank lines are ignored. Output lists each
//!   edge once with `u < v`, edges sorted. A graph on other ids, such as an
//!   induced subgraph, carries a line `v: id1 ... idn` right after the header.
//! * Matrix: a header `rows cols`, then one line per row with the sorted
//!   1-based column indices of its 1s. A blank line is an empty row, so
//!   only `#` lines are skipped after the header.
//! * Word: whitespace-separated vertex ids.
//! * Orientation: the graph header, then one `u -> v` line per arc.

use std::fmt::Write as _;

use cobip_core::graph::Vertex;
use cobip_core::{BinaryMatrix, Graph, Orientation, Word};

use crate::error::CliError;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn number<T: std::str::FromStr>(tok: &str, line: usize, what: &str) -> Result<T, CliError> {
    tok.parse()
        .map_err(|_| CliError::input(format!("line {line}: {what} {tok:?} is not a nonnegative integer")))
}

fn header(line: Option<(usize, &str)>, what: &str) -> Result<(usize, usize, usize), CliError> {
    let (no, l) = line.ok_or_else(|| CliError::input(format!("missing {what} header")))?;
    let toks: Vec<&str> = l.split_whitespace().collect();
    if toks.len() != 2 {
        return Err(CliError::input(format!("line {no}: {what} header needs two numbers")));
    }
    Ok((no, number(toks[0], no, "count")?, number(toks[1], no, "count")?))
}

fn vertex(tok: &str, line: usize, ids: &[Vertex]) -> Result<Vertex, CliError> {
    let v: Vertex = number(tok, line, "vertex")?;
    if ids.binary_search(&v).is_err() {
        return Err(CliError::input(format!("line {line}: vertex {v} is not in the vertex set")));
    }
    Ok(v)
}

/// Header and optional vertex line; returns the sorted ids and the number
/// of edge lines announced.
fn graph_header<'a>(
    lines: &mut std::iter::Peekable<impl Iterator<Item = (usize, &'a str)>>,
    what: &str,
) -> Result<(Vec<Vertex>, usize), CliError> {
    let (_, n, m) = header(lines.next(), what)?;
    let mut ids: Vec<Vertex> = (1..=n as Vertex).collect();
    if let Some((no, list)) = lines.peek().and_then(|&(no, l)| Some((no, l.strip_prefix("v:")?))) {
        ids = list.split_whitespace().map(|t| number(t, no, "vertex")).collect::<Result<_, _>>()?;
        if ids.len() != n || ids.contains(&0) {
            return Err(CliError::input(format!("line {no}: the vertex line needs {n} positive ids")));
        }
        ids.sort_unstable();
        lines.next();
    }
    Ok((ids, m))
}

pub fn parse_graph(text: &str) -> Result<Graph, CliError> {
    let mut lines = content_lines(text).peekable();
    let (ids, m) = graph_header(&mut lines, "graph")?;
    let mut edges = Vec::with_capacity(m);
    for (no, l) in lines {
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(CliError::input(format!("line {no}: an edge line needs two vertices")));
        }
        edges.push((vertex(toks[0], no, &ids)?, vertex(toks[1], no, &ids)?));
    }
    if edges.len() != m {
        return Err(CliError::input(format!("header announces {m} edges, found {}", edges.len())));
    }
    Ok(Graph::with_vertices(ids, &edges)?)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    let standard = g.vertices().iter().enumerate().all(|(i, &v)| v as usize == i + 1);
    if !standard {
        let ids: Vec<String> = g.vertices().iter().map(|v| v.to_string()).collect();
        writeln!(out, "v: {}", ids.join(" ")).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn parse_matrix(text: &str) -> Result<BinaryMatrix, CliError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    let head = lines.by_ref().find(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (_, r, c) = header(head, "matrix")?;
    let mut rows = Vec::with_capacity(r);
    for (no, l) in lines.filter(|(_, l)| !l.starts_with('#')) {
        if rows.len() == r {
            if l.is_empty() {
                continue;
            }
            return Err(CliError::input(format!("line {no}: more than {r} rows")));
        }
        let mut row = Vec::new();
        for tok in l.split_whitespace() {
            let j: usize = number(tok, no, "column")?;
            if j == 0 || j > c {
                return Err(CliError::input(format!("line {no}: column {j} outside 1..={c}")));
            }
            if row.last().is_some_and(|&p| p >= j - 1) {
                return Err(CliError::input(format!("line {no}: columns must be strictly increasing")));
            }
            row.push(j - 1);
        }
        rows.push(row);
    }
    // a file may end before its trailing empty rows
    rows.resize(r, Vec::new());
    Ok(BinaryMatrix::new(c, rows)?)
}

pub fn write_matrix(m: &BinaryMatrix) -> String {
    let mut out = format!("{} {}\n", m.row_count(), m.col_count());
    for row in m.rows() {
        let line: Vec<String> = row.iter().map(|j| (j + 1).to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_word(text: &str) -> Result<Word, CliError> {
    let body: Vec<&str> = content_lines(text).map(|(_, l)| l).collect();
    Ok(cobip_core::words::parse_word(&body.join(" "))?)
}

/// Reads an orientation; the graph is the one spanned by the arcs.
pub fn parse_orientation(text: &str) -> Result<Orientation, CliError> {
    let mut lines = content_lines(text).peekable();
    let (ids, m) = graph_header(&mut lines, "orientation")?;
    let mut arcs = Vec::with_capacity(m);
    for (no, l) in lines {
        let (a, b) = l
            .split_once("->")
            .ok_or_else(|| CliError::input(format!("line {no}: an arc line reads \"u -> v\"")))?;
        arcs.push((vertex(a.trim(), no, &ids)?, vertex(b.trim(), no, &ids)?));
    }
    if arcs.len() != m {
        return Err(CliError::input(format!("header announces {m} arcs, found {}", arcs.len())));
    }
    let g = Graph::with_vertices(ids, &arcs)?;
    Ok(Orientation::from_arcs(&g, &arcs)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_round_trip() {
        let text = "# a path\n3 2\n2 3\n1 2\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(write_graph(&g), "3 2\n1 2\n2 3\n");
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn graph_with_vertex_line() {
        let text = "4 3\nv: 1 3 4 5\n1 3\n3 5\n4 5\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g.vertices(), &[1, 3, 4, 5]);
        assert_eq!(write_graph(&g), text);
        assert!(parse_graph("2 0\nv: 1\n").is_err());
        assert!(parse_graph("2 1\nv: 1 3\n1 2\n").is_err());
    }

    #[test]
    fn graph_errors() {
        assert!(parse_graph("").is_err());
        assert!(parse_graph("2 1\n1 3\n").is_err());
        assert!(parse_graph("2 2\n1 2\n").is_err());
        assert!(parse_graph("2 1\n1 1\n").is_err());
        assert!(parse_graph("2 1\n1 x\n").is_err());
    }

    #[test]
    fn matrix_empty_rows() {
        let text = "3 4\n1 2\n\n4\n";
        let m = parse_matrix(text).unwrap();
        assert_eq!(m.rows(), &[vec![0, 1], vec![], vec![3]]);
        assert_eq!(write_matrix(&m), text);
        let short = parse_matrix("2 2\n1\n").unwrap();
        assert_eq!(short.rows(), &[vec![0], vec![]]);
    }

    #[test]
    fn matrix_errors() {
        assert!(parse_matrix("1 2\n3\n").is_err());
        assert!(parse_matrix("1 2\n2 1\n").is_err());
        assert!(parse_matrix("1 2\n1\n2\n").is_err());
    }

    #[test]
    fn orientation_round_trip() {
        let g = Graph::cycle(4).unwrap();
        let o = Orientation::from_ranks(&g, &[0, 1, 2, 3]);
        let back = parse_orientation(&o.to_string()).unwrap();
        assert_eq!(back.arcs(), o.arcs());
    }

    #[test]
    fn word_lines_join() {
        let w = parse_word("3 5 4 1\n# split\n4 3 5 1\n").unwrap();
        assert_eq!(w.to_string(), "3 5 4 1 4 3 5 1");
    }
}
