//! Text formats: plain edge lists for hosts and patterns, and a weighted,
//! labeled dump for directed graphs.

use std::collections::{BTreeSet, HashSet};
use std::fmt::Write as _;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use super::{DirWLGraph, DirectedEdge, Label, UndirectedGraph, TRIVIAL_LABEL};
use crate::error::{Error, Result};

/// A graph read from an edge list together with the original vertex names.
///
/// `names[v]` is the token that was compacted to vertex `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoadedGraph {
    pub graph: UndirectedGraph,
    pub names: Vec<String>,
}

/// Parses an edge list: one `u v` pair per line, `#` starts a comment, and a
/// line with a single token declares an isolated vertex.
///
/// Vertex names are compacted to `0..n`. If every name is a non-negative
/// integer they are ordered numerically, otherwise lexicographically.
pub fn parse_edge_list(text: &str) -> Result<LoadedGraph> {
    read_edge_list(text.as_bytes())
}

pub fn read_edge_list<R: BufRead>(reader: R) -> Result<LoadedGraph> {
    let mut pairs: Vec<(usize, String, Option<String>)> = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let line_no = i + 1;
        let content = line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            [] => {}
            [v] => pairs.push((line_no, v.to_string(), None)),
            [u, v] => pairs.push((line_no, u.to_string(), Some(v.to_string()))),
            _ => {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected `u v`, found {} tokens", tokens.len()),
                })
            }
        }
    }

    let mut names: Vec<String> = pairs
        .iter()
        .flat_map(|(_, u, v)| std::iter::once(u.clone()).chain(v.clone()))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let numeric: Option<Vec<u64>> = names.iter().map(|s| s.parse::<u64>().ok()).collect();
    if let Some(values) = numeric {
        let mut keyed: Vec<(u64, String)> = values.into_iter().zip(names).collect();
        keyed.sort();
        names = keyed.into_iter().map(|(_, s)| s).collect();
    }
    let index: std::collections::HashMap<&str, usize> = names
        .iter()
        .enumerate()
        .map(|(i, s)| (s.as_str(), i))
        .collect();

    let mut seen = HashSet::new();
    let mut edges = Vec::new();
    for (line, u, v) in &pairs {
        let Some(v) = v else { continue };
        if u == v {
            return Err(Error::Parse {
                line: *line,
                message: format!("self-loop on vertex {u}"),
            });
        }
        let (a, b) = (index[u.as_str()], index[v.as_str()]);
        if !seen.insert((a.min(b), a.max(b))) {
            return Err(Error::Parse {
                line: *line,
                message: format!("parallel edge {u} {v}"),
            });
        }
        edges.push((a, b));
    }
    let graph = UndirectedGraph::from_edges(names.len(), edges)?;
    Ok(LoadedGraph { graph, names })
}

pub fn load_edge_list(path: impl AsRef<Path>) -> Result<LoadedGraph> {
    let file = std::fs::File::open(path)?;
    read_edge_list(BufReader::new(file))
}

/// Writes `g` as an edge list. Isolated vertices get their own line so the
/// vertex count survives a round trip.
pub fn write_edge_list<W: Write>(g: &UndirectedGraph, mut out: W) -> Result<()> {
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}")?;
    }
    for v in (0..g.n()).filter(|&v| g.degree(v) == 0) {
        writeln!(out, "{v}")?;
    }
    Ok(())
}

/// Renders a directed labeled graph:
///
/// ```text
/// vertices 3
/// 0 1 1
/// 0 2 2
/// labels
/// 0 0
/// 1 -
/// ```
///
/// Arc lines are `tail head weight`; trivial labels print as `-`.
pub fn write_wl_dump(g: &DirWLGraph) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "vertices {}", g.n());
    for a in g.arcs() {
        let _ = writeln!(s, "{} {} {}", a.tail, a.head, a.weight);
    }
    let _ = writeln!(s, "labels");
    for v in 0..g.n() {
        match g.label(v) {
            TRIVIAL_LABEL => {
                let _ = writeln!(s, "{v} -");
            }
            l => {
                let _ = writeln!(s, "{v} {l}");
            }
        }
    }
    s
}

/// Inverse of [`write_wl_dump`].
pub fn parse_wl_dump(text: &str) -> Result<DirWLGraph> {
    let perr = |line: usize, message: &str| Error::Parse {
        line,
        message: message.to_string(),
    };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (line, header) = lines.next().ok_or_else(|| perr(1, "empty dump"))?;
    let n: usize = header
        .strip_prefix("vertices")
        .and_then(|r| r.trim().parse().ok())
        .ok_or_else(|| perr(line, "expected `vertices <n>`"))?;

    let mut arcs = Vec::new();
    let mut labels = vec![TRIVIAL_LABEL; n];
    let mut in_labels = false;
    for (line, l) in lines {
        if l == "labels" {
            in_labels = true;
            continue;
        }
        let tok: Vec<&str> = l.split_whitespace().collect();
        if in_labels {
            let [v, lab] = tok.as_slice() else {
                return Err(perr(line, "expected `vertex label`"));
            };
            let v: usize = v.parse().map_err(|_| perr(line, "bad vertex"))?;
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            labels[v] = if *lab == "-" {
                TRIVIAL_LABEL
            } else {
                lab.parse::<Label>().map_err(|_| perr(line, "bad label"))?
            };
        } else {
            let [u, v, w] = tok.as_slice() else {
                return Err(perr(line, "expected `tail head weight`"));
            };
            let parse = |s: &str| s.parse::<u64>().map_err(|_| perr(line, "bad number"));
            let (u, v, w) = (parse(u)?, parse(v)?, parse(w)?);
            let w = u32::try_from(w).map_err(|_| perr(line, "weight too large"))?;
            arcs.push(DirectedEdge::new(u as usize, v as usize, w));
        }
    }
    DirWLGraph::new(labels, arcs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compacts_numeric_ids_in_numeric_order() {
        let g = parse_edge_list("# host\n10 2\n2 7\n\n7 10 # closing edge\n").unwrap();
        assert_eq!(g.names, vec!["2", "7", "10"]);
        assert_eq!(g.graph.edge_list(), vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn string_ids_and_isolated_vertices() {
        let g = parse_edge_list("b a\nz\n").unwrap();
        assert_eq!(g.names, vec!["a", "b", "z"]);
        assert_eq!(g.graph.n(), 3);
        assert_eq!(g.graph.m(), 1);
    }

    #[test]
    fn rejects_loops_and_duplicates() {
        assert!(matches!(
            parse_edge_list("1 2\n3 3\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("1 2\n2 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(parse_edge_list("1 2 3\n").is_err());
    }

    #[test]
    fn edge_list_round_trip() {
        let g = UndirectedGraph::from_edges(5, [(0, 1), (1, 2), (0, 3)]).unwrap();
        let mut buf = Vec::new();
        write_edge_list(&g, &mut buf).unwrap();
        let back = parse_edge_list(std::str::from_utf8(&buf).unwrap()).unwrap();
        assert_eq!(back.graph, g);
    }

    #[test]
    fn wl_dump_round_trip() {
        let g = DirWLGraph::new(
            vec![0, TRIVIAL_LABEL, 2],
            vec![DirectedEdge::new(0, 1, 1), DirectedEdge::new(2, 1, 3)],
        )
        .unwrap();
        let text = write_wl_dump(&g);
        assert_eq!(parse_wl_dump(&text).unwrap(), g);
        assert!(parse_wl_dump("vertices 2\n0 1 1\n1 0 1\n").is_err());
    }
}
