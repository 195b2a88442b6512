//! Graph and solution files.
//!
//! METIS: a header `n m [fmt [ncon]]`, then one line per vertex listing its
//! 1-indexed neighbours. `%` lines are comments. A vertex without
//! neighbours has an empty line, so blank lines count as vertex lines.
//! Vertex sizes and weights announced by `fmt` are skipped.
//!
//! Edge lists: one `u v` pair of 0-indexed ids per line, `#` or `%`
//! comments.
//!
//! Solutions: one 0-indexed id per line, sorted.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub fn read_metis_file(path: impl AsRef<Path>) -> Result<Graph> {
    read_metis(File::open(path)?)
}

pub fn read_metis<R: Read>(input: R) -> Result<Graph> {
    let reader = BufReader::new(input);
    let mut header: Option<(usize, usize, usize, usize, bool)> = None;
    let mut adj: Vec<Vec<Vertex>> = Vec::new();
    let mut line_of: Vec<usize> = Vec::new();
    let mut header_no = 1;
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let no = i + 1;
        if line.trim_start().starts_with('%') {
            continue;
        }
        let Some((n, _, skip, ncon, edge_weights)) = header else {
            if line.trim().is_empty() {
                continue;
            }
            header = Some(parse_header(&line, no)?);
            header_no = no;
            let n = header.unwrap().0;
            adj.reserve(n);
            line_of.reserve(n);
            continue;
        };
        if adj.len() == n {
            if line.trim().is_empty() {
                continue;
            }
            return Err(Error::parse(no, format!("more than {n} vertex lines")));
        }
        let v = adj.len();
        let mut tokens = line.split_whitespace();
        for _ in 0..skip + ncon {
            tokens
                .next()
                .ok_or_else(|| Error::parse(no, "missing vertex size or weight"))?;
        }
        let mut neighbors = Vec::new();
        while let Some(tok) = tokens.next() {
            let id: usize = tok
                .parse()
                .map_err(|_| Error::parse(no, format!("bad neighbour {tok:?}")))?;
            if id == 0 || id > n {
                return Err(Error::parse(
                    no,
                    format!("neighbour {id} out of range 1..={n}"),
                ));
            }
            if id - 1 == v {
                return Err(Error::parse(no, "self-loop"));
            }
            neighbors.push(id - 1);
            if edge_weights {
                tokens
                    .next()
                    .ok_or_else(|| Error::parse(no, "missing edge weight"))?;
            }
        }
        neighbors.sort_unstable();
        if neighbors.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::parse(no, "repeated neighbour"));
        }
        adj.push(neighbors);
        line_of.push(no);
    }
    let Some((n, m, ..)) = header else {
        return Err(Error::Empty("no METIS header"));
    };
    if adj.len() < n {
        return Err(Error::parse(
            line_of.last().copied().unwrap_or(1),
            format!("expected {n} vertex lines, found {}", adj.len()),
        ));
    }
    let mut edges = Vec::new();
    for (u, list) in adj.iter().enumerate() {
        for &v in list {
            if adj[v].binary_search(&u).is_err() {
                return Err(Error::parse(
                    line_of[u],
                    format!("vertex {} lists {} but not the reverse", u + 1, v + 1),
                ));
            }
            if u < v {
                edges.push((u, v));
            }
        }
    }
    if edges.len() != m {
        return Err(Error::parse(
            header_no,
            format!("header announces {m} edges, lists hold {}", edges.len()),
        ));
    }
    Graph::from_edges(n, edges)
}

fn parse_header(line: &str, no: usize) -> Result<(usize, usize, usize, usize, bool)> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if !(2..=4).contains(&fields.len()) {
        return Err(Error::parse(no, "header must be `n m [fmt [ncon]]`"));
    }
    let num = |s: &str, what: &str| -> Result<usize> {
        s.parse()
            .map_err(|_| Error::parse(no, format!("bad {what} {s:?}")))
    };
    let n = num(fields[0], "vertex count")?;
    let m = num(fields[1], "edge count")?;
    let fmt = fields.get(2).copied().unwrap_or("0");
    if fmt.len() > 3 || !fmt.bytes().all(|b| b == b'0' || b == b'1') {
        return Err(Error::parse(no, format!("bad fmt {fmt:?}")));
    }
    let flag = |pos: usize| fmt.len() > pos && fmt.as_bytes()[fmt.len() - 1 - pos] == b'1';
    let edge_weights = flag(0);
    let vertex_weights = flag(1);
    let sizes = usize::from(flag(2));
    let ncon = match fields.get(3) {
        Some(s) => num(s, "ncon")?,
        None => usize::from(vertex_weights),
    };
    if !vertex_weights && ncon > 0 {
        return Err(Error::parse(no, "ncon given without vertex weights"));
    }
    Ok((n, m, sizes, ncon, edge_weights))
}

/// Plain METIS without weights.
pub fn write_metis<W: Write>(g: &Graph, out: W) -> Result<()> {
    let (h, _) = g.compact();
    let mut out = BufWriter::new(out);
    writeln!(out, "{} {}", h.alive_count(), h.live_edge_count())?;
    for v in 0..h.id_bound() {
        let line: Vec<String> = h.live_neighbors(v).map(|u| (u + 1).to_string()).collect();
        writeln!(out, "{}", line.join(" "))?;
    }
    out.flush()?;
    Ok(())
}

pub fn read_edge_list_file(path: impl AsRef<Path>, n: Option<usize>) -> Result<Graph> {
    read_edge_list(File::open(path)?, n)
}

/// Without `n` the vertex count is the largest id plus one, which is
/// undefined for a file without edges.
pub fn read_edge_list<R: Read>(input: R, n: Option<usize>) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut max_id: Option<usize> = None;
    for (i, line) in BufReader::new(input).lines().enumerate() {
        let line = line?;
        let no = i + 1;
        let body = line.trim();
        if body.is_empty() || body.starts_with('#') || body.starts_with('%') {
            continue;
        }
        let ids: Vec<usize> = body
            .split_whitespace()
            .map(|tok| {
                tok.parse()
                    .map_err(|_| Error::parse(no, format!("bad vertex id {tok:?}")))
            })
            .collect::<Result<_>>()?;
        let [u, v] = ids[..] else {
            return Err(Error::parse(no, "expected two vertex ids"));
        };
        if let Some(n) = n {
            if u.max(v) >= n {
                return Err(Error::parse(
                    no,
                    format!("vertex {} out of range for n = {n}", u.max(v)),
                ));
            }
        }
        max_id = max_id.max(Some(u.max(v)));
        edges.push((u, v));
    }
    let n = match (n, max_id) {
        (Some(n), _) => n,
        (None, Some(m)) => m + 1,
        (None, None) => return Err(Error::Empty("edge list without edges needs a vertex count")),
    };
    Graph::from_edges(n, edges)
}

pub fn write_edge_list<W: Write>(g: &Graph, out: W) -> Result<()> {
    let mut out = BufWriter::new(out);
    for (u, v) in g.live_edges() {
        writeln!(out, "{u} {v}")?;
    }
    out.flush()?;
    Ok(())
}

pub fn read_solution_file(path: impl AsRef<Path>) -> Result<Vec<Vertex>> {
    read_solution(File::open(path)?)
}

/// Ids in file order; blank and `#` lines are skipped.
pub fn read_solution<R: Read>(input: R) -> Result<Vec<Vertex>> {
    let mut ids = Vec::new();
    for (i, line) in BufReader::new(input).lines().enumerate() {
        let line = line?;
        let body = line.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        ids.push(
            body.parse()
                .map_err(|_| Error::parse(i + 1, format!("bad vertex id {body:?}")))?,
        );
    }
    Ok(ids)
}

/// Writes the ids sorted, one per line.
pub fn write_solution<W: Write>(solution: &[Vertex], out: W) -> Result<()> {
    let mut sorted = solution.to_vec();
    sorted.sort_unstable();
    let mut out = BufWriter::new(out);
    for v in sorted {
        writeln!(out, "{v}")?;
    }
    out.flush()?;
    Ok(())
}
