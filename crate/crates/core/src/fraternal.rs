//! Fraternal extensions: closing out-out wedges layer by layer.
//!
//! Patterns get every possible extension ([`enumerate_pattern_extensions`]);
//! hosts get one, with each layer oriented by its own degeneracy order
//! ([`optimal_extension`]).

use rustc_hash::FxHashMap;

use crate::degeneracy::{degeneracy_orient, orient_edge_set};
use crate::error::{Error, Result};
use crate::graph::{DirWLGraph, DirectedEdge, EdgeSet, Label, UndirectedGraph, VertexId, Weight};
use crate::pattern::acyclic_orientations;
use crate::product::{LabeledPattern, ProductHost};

/// Default bound on `|Frat(H, t)|`.
pub const DEFAULT_EXTENSION_CAP: usize = 1_000_000;

/// A weighted orientation whose layer `i` closes the out-out wedges of
/// weight sum `i`, for `i` up to `depth`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FraternalExtension {
    pub graph: DirWLGraph,
    pub depth: u32,
}

impl FraternalExtension {
    /// Arcs of weight `i`.
    pub fn layer(&self, i: Weight) -> Vec<DirectedEdge> {
        self.graph.layer(i)
    }

    /// Layers `E^1 ..= E^depth`.
    pub fn layers(&self) -> Vec<Vec<DirectedEdge>> {
        let mut out = vec![Vec::new(); self.depth as usize];
        for a in self.graph.arcs() {
            out[a.weight as usize - 1].push(a);
        }
        out
    }
}

/// One extension round: every unordered pair `{u, w}` with a center `v`,
/// arcs `v → u` and `v → w` of weight sum `t`, and no arc between `u` and `w`.
pub fn extension_edges(g: &DirWLGraph, t: Weight) -> EdgeSet {
    let mut pairs = Vec::new();
    for v in 0..g.n() {
        let out = g.out_arcs(v);
        for (i, a) in out.iter().enumerate() {
            for b in &out[i + 1..] {
                if a.weight + b.weight == t && !g.linked(a.head, b.head) {
                    pairs.push((a.head, b.head));
                }
            }
        }
    }
    pairs.sort_unstable();
    pairs.dedup();
    EdgeSet { weight: t, pairs }
}

fn check_depth(t: u32) -> Result<()> {
    if t == 0 {
        return Err(Error::InvalidDepth { got: t, min: 1 });
    }
    Ok(())
}

/// All `t`-fraternal extensions of the labeled pattern: every acyclic unit
/// orientation, then for each later layer every orientation of its new pairs.
///
/// Fails with [`Error::ExtensionCapExceeded`] once more than `cap` members
/// would be produced.
pub fn enumerate_pattern_extensions(
    hl: &LabeledPattern,
    t: u32,
    cap: usize,
) -> Result<Vec<FraternalExtension>> {
    check_depth(t)?;
    let mut members = acyclic_orientations(&hl.graph);
    if members.len() > cap {
        return Err(Error::ExtensionCapExceeded { cap });
    }
    for i in 2..=t {
        let mut next = Vec::new();
        for m in &members {
            let layer = extension_edges(m, i);
            let branches = 1usize
                .checked_shl(layer.len() as u32)
                .filter(|&b| layer.len() < usize::BITS as usize && next.len() + b <= cap)
                .ok_or(Error::ExtensionCapExceeded { cap })?;
            for mask in 0..branches {
                let arcs = layer.pairs.iter().enumerate().map(|(j, &(u, w))| {
                    if mask >> j & 1 == 0 {
                        DirectedEdge::new(u, w, i)
                    } else {
                        DirectedEdge::new(w, u, i)
                    }
                });
                next.push(m.with_arcs(arcs).expect("new pairs are unlinked"));
            }
        }
        members = next;
    }
    Ok(members
        .into_iter()
        .map(|graph| FraternalExtension { graph, depth: t })
        .collect())
}

/// Host-side extension of the labeled product: degeneracy orientation with
/// unit weights, then each new layer oriented by the degeneracy order of that
/// layer alone.
pub fn optimal_extension(f: &ProductHost, t: u32) -> Result<FraternalExtension> {
    optimal_extension_of(&f.graph, f.labels.clone(), t)
}

/// [`optimal_extension`] for an arbitrary labeled undirected graph.
pub fn optimal_extension_of(
    g: &UndirectedGraph,
    labels: Vec<Label>,
    t: u32,
) -> Result<FraternalExtension> {
    check_depth(t)?;
    assert_eq!(labels.len(), g.n(), "one label per vertex");
    let (oriented, _) = degeneracy_orient(g);
    let mut graph = oriented.relabel_vertices(labels);
    for i in 2..=t {
        let layer = extension_edges(&graph, i);
        if layer.is_empty() {
            continue;
        }
        let (arcs, _) = orient_edge_set(graph.n(), &layer);
        graph = graph.with_arcs(arcs)?;
    }
    Ok(FraternalExtension { graph, depth: t })
}

/// Checks the `t`-fraternity clauses for every pair `{x, y}`, with
/// `d = min(ω(x,y), ω(y,x))` and `s = min_z ω(z,x) + ω(z,y)` (absent = ∞):
/// `d = 1`, or `d = s`, or both exceed `t`. Also rejects weights above `t`.
///
/// Only pairs that are linked or share an in-neighbor can fail, so the check
/// runs over arcs and out-pairs instead of all vertex triples.
pub fn validate_fraternity(ext: &FraternalExtension) -> bool {
    let g = &ext.graph;
    let t = ext.depth as u64;
    if g.max_weight() as u64 > t {
        return false;
    }
    let mut wedge_min: FxHashMap<(VertexId, VertexId), u64> = FxHashMap::default();
    for z in 0..g.n() {
        let out = g.out_arcs(z);
        for (i, a) in out.iter().enumerate() {
            for b in &out[i + 1..] {
                let s = a.weight as u64 + b.weight as u64;
                let key = (a.head.min(b.head), a.head.max(b.head));
                wedge_min
                    .entry(key)
                    .and_modify(|m| *m = (*m).min(s))
                    .or_insert(s);
            }
        }
    }
    let clause = |d: u64, s: u64| d == 1 || d == s || (d > t && s > t);
    for a in g.arcs() {
        let key = (a.tail.min(a.head), a.tail.max(a.head));
        let s = wedge_min.get(&key).copied().unwrap_or(u64::MAX);
        if !clause(a.weight as u64, s) {
            return false;
        }
    }
    wedge_min
        .iter()
        .filter(|(&(x, y), _)| !g.linked(x, y))
        .all(|(_, &s)| clause(u64::MAX, s))
}
