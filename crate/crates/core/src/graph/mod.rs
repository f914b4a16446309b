//! Graph representations shared by every stage of the pipeline.
//!
//! Vertices are dense `0..n` indices. [`UndirectedGraph`] holds simple host and
//! pattern graphs; [`DirWLGraph`] is the directed, arc-weighted, vertex-labeled
//! carrier used for orientations, fraternal extensions and labeled products.
//! Both are immutable once built; "mutation" produces a new graph.

mod io;

pub use io::{
    load_edge_list, parse_edge_list, parse_wl_dump, read_edge_list, write_edge_list,
    write_wl_dump, LoadedGraph,
};

use std::collections::BTreeSet;

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type Weight = u32;
pub type Label = u32;

/// Label carried by vertices that are not tied to a pattern vertex.
pub const TRIVIAL_LABEL: Label = Label::MAX;

/// Simple undirected graph with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UndirectedGraph {
    adj: Vec<Vec<VertexId>>,
    m: usize,
}

impl UndirectedGraph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        UndirectedGraph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a simple graph, rejecting self-loops and repeated edges in
    /// either direction.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for (u, v) in edges {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
            m += 1;
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::ParallelEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(UndirectedGraph { adj, m })
    }

    /// Trusted constructor for adjacency lists that are already sorted,
    /// symmetric and free of loops and duplicates.
    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<VertexId>>) -> Self {
        debug_assert!(adj
            .iter()
            .enumerate()
            .all(|(u, l)| l.windows(2).all(|w| w[0] < w[1]) && !l.contains(&u)));
        let degree_sum: usize = adj.iter().map(Vec::len).sum();
        debug_assert!(degree_sum.is_multiple_of(2));
        UndirectedGraph {
            adj,
            m: degree_sum / 2,
        }
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|u| (0..n).filter(|&v| v != u).collect())
            .collect();
        Self::from_sorted_adjacency(adj)
    }

    /// Cycle on `n ≥ 3` vertices `0-1-…-(n-1)-0`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
    }

    /// Path on `n` vertices.
    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
    }

    /// Star with center 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        Self::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("star is simple")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn edge_list(&self) -> Vec<(VertexId, VertexId)> {
        self.edges().collect()
    }

    /// Subgraph induced by `vertices`, re-indexed in the order given.
    pub fn induced(&self, vertices: &[VertexId]) -> UndirectedGraph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut l: Vec<_> = self.adj[v]
                    .iter()
                    .filter(|&&w| index[w] != usize::MAX)
                    .map(|&w| index[w])
                    .collect();
                l.sort_unstable();
                l
            })
            .collect();
        Self::from_sorted_adjacency(adj)
    }

    /// Same graph with vertex `v` renamed to `perm[v]`.
    pub fn relabeled(&self, perm: &[VertexId]) -> UndirectedGraph {
        let mut adj = vec![Vec::new(); self.n()];
        for (u, list) in self.adj.iter().enumerate() {
            adj[perm[u]] = list.iter().map(|&v| perm[v]).collect();
            adj[perm[u]].sort_unstable();
        }
        Self::from_sorted_adjacency(adj)
    }

    /// Vertex-disjoint union; `other`'s vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &UndirectedGraph) -> UndirectedGraph {
        let shift = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|l| l.iter().map(|&v| v + shift).collect::<Vec<_>>()),
        );
        Self::from_sorted_adjacency(adj)
    }
}

fn check_vertex(v: VertexId, n: usize) -> Result<()> {
    if v < n {
        Ok(())
    } else {
        Err(Error::VertexOutOfRange { vertex: v, n })
    }
}

/// A weighted arc `tail → head`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DirectedEdge {
    pub tail: VertexId,
    pub head: VertexId,
    pub weight: Weight,
}

impl DirectedEdge {
    pub fn new(tail: VertexId, head: VertexId, weight: Weight) -> Self {
        DirectedEdge { tail, head, weight }
    }
}

/// Undirected pairs sharing one weight, e.g. a freshly computed extension
/// layer before it is oriented. Pairs are stored as `(low, high)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct EdgeSet {
    pub weight: Weight,
    pub pairs: Vec<(VertexId, VertexId)>,
}

impl EdgeSet {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Directed graph with positive arc weights and per-vertex labels, stored as
/// forward and reverse CSR.
///
/// At most one of `(u,v)` and `(v,u)` is present; this is checked whenever a
/// graph is constructed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirWLGraph {
    labels: Vec<Label>,
    out_offsets: Vec<usize>,
    out: Vec<OutArc>,
    in_offsets: Vec<usize>,
    in_tails: Vec<VertexId>,
    in_weights: Vec<Weight>,
    by_label: Vec<(Label, VertexId)>,
}

/// Out-arc record: head, weight, and the head's label kept alongside so a
/// scan over out-arcs stays in one array.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OutArc {
    pub head: VertexId,
    pub weight: Weight,
    pub label: Label,
}

/// Result of [`DirWLGraph::induced_subgraph`]: the subgraph plus the original
/// id of each new vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: DirWLGraph,
    pub original: Vec<VertexId>,
}

impl DirWLGraph {
    pub fn new(labels: Vec<Label>, mut arcs: Vec<DirectedEdge>) -> Result<Self> {
        let n = labels.len();
        for a in &arcs {
            check_vertex(a.tail, n)?;
            check_vertex(a.head, n)?;
            if a.tail == a.head {
                return Err(Error::SelfLoop(a.tail));
            }
            if a.weight == 0 {
                return Err(Error::ZeroWeight);
            }
        }
        arcs.sort_unstable_by_key(|a| (a.tail, a.head));
        for w in arcs.windows(2) {
            if (w[0].tail, w[0].head) == (w[1].tail, w[1].head) {
                return Err(Error::ConflictingArc(w[1].tail, w[1].head));
            }
        }
        for a in &arcs {
            if arcs
                .binary_search_by_key(&(a.head, a.tail), |b| (b.tail, b.head))
                .is_ok()
            {
                return Err(Error::ConflictingArc(a.tail, a.head));
            }
        }
        Ok(Self::from_sorted_arcs(labels, arcs))
    }

    /// Arc-free graph with the given labels.
    pub fn arcless(labels: Vec<Label>) -> Self {
        Self::from_sorted_arcs(labels, Vec::new())
    }

    /// Graph whose vertices all carry [`TRIVIAL_LABEL`].
    pub fn unlabeled(n: usize, arcs: Vec<DirectedEdge>) -> Result<Self> {
        Self::new(vec![TRIVIAL_LABEL; n], arcs)
    }

    /// Builds the graph from per-vertex out-lists that are sorted, simple and
    /// free of antiparallel pairs, all arcs carrying `weight`.
    pub(crate) fn from_out_lists(labels: Vec<Label>, out: &[Vec<VertexId>], weight: Weight) -> Self {
        let n = labels.len();
        debug_assert_eq!(out.len(), n);
        let mut out_offsets = Vec::with_capacity(n + 1);
        out_offsets.push(0);
        let mut in_offsets = vec![0usize; n + 1];
        let mut arcs = Vec::with_capacity(out.iter().map(Vec::len).sum());
        for list in out {
            debug_assert!(list.windows(2).all(|w| w[0] < w[1]));
            arcs.extend(list.iter().map(|&head| OutArc {
                head,
                weight,
                label: labels[head],
            }));
            out_offsets.push(arcs.len());
            for &h in list {
                in_offsets[h + 1] += 1;
            }
        }
        for i in 0..n {
            in_offsets[i + 1] += in_offsets[i];
        }
        let mut cursor = in_offsets.clone();
        let mut in_tails = vec![0; arcs.len()];
        for (v, list) in out.iter().enumerate() {
            for &h in list {
                in_tails[cursor[h]] = v;
                cursor[h] += 1;
            }
        }
        let m = arcs.len();
        DirWLGraph {
            by_label: Self::label_index(&labels),
            labels,
            out_offsets,
            out: arcs,
            in_offsets,
            in_tails,
            in_weights: vec![weight; m],
        }
    }

    /// Same arcs with new vertex labels.
    pub(crate) fn relabel_vertices(mut self, labels: Vec<Label>) -> Self {
        assert_eq!(labels.len(), self.n(), "one label per vertex");
        self.by_label = Self::label_index(&labels);
        for a in &mut self.out {
            a.label = labels[a.head];
        }
        self.labels = labels;
        self
    }

    fn label_index(labels: &[Label]) -> Vec<(Label, VertexId)> {
        let mut by_label: Vec<(Label, VertexId)> =
            labels.iter().enumerate().map(|(v, &l)| (l, v)).collect();
        by_label.sort_unstable();
        by_label
    }

    fn from_sorted_arcs(labels: Vec<Label>, arcs: Vec<DirectedEdge>) -> Self {
        let n = labels.len();
        let mut out_offsets = vec![0usize; n + 1];
        let mut in_offsets = vec![0usize; n + 1];
        for a in &arcs {
            out_offsets[a.tail + 1] += 1;
            in_offsets[a.head + 1] += 1;
        }
        for i in 0..n {
            out_offsets[i + 1] += out_offsets[i];
            in_offsets[i + 1] += in_offsets[i];
        }
        let out = arcs
            .iter()
            .map(|a| OutArc {
                head: a.head,
                weight: a.weight,
                label: labels[a.head],
            })
            .collect();

        // Arcs are sorted by (tail, head), so filling the reverse CSR in this
        // order keeps each in-list sorted by tail.
        let mut cursor = in_offsets.clone();
        let mut in_tails = vec![0; arcs.len()];
        let mut in_weights = vec![0; arcs.len()];
        for a in &arcs {
            let slot = cursor[a.head];
            in_tails[slot] = a.tail;
            in_weights[slot] = a.weight;
            cursor[a.head] += 1;
        }

        let by_label = Self::label_index(&labels);

        DirWLGraph {
            labels,
            out_offsets,
            out,
            in_offsets,
            in_tails,
            in_weights,
            by_label,
        }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn arc_count(&self) -> usize {
        self.out.len()
    }

    pub fn label(&self, v: VertexId) -> Label {
        self.labels[v]
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    /// Vertices carrying label `l`, in increasing id order.
    pub fn vertices_with_label(&self, l: Label) -> impl Iterator<Item = VertexId> + '_ {
        let start = self.by_label.partition_point(|&(x, _)| x < l);
        self.by_label[start..]
            .iter()
            .take_while(move |&&(x, _)| x == l)
            .map(|&(_, v)| v)
    }

    /// Out-arcs of `v`, sorted by head.
    pub fn out_arcs(&self, v: VertexId) -> &[OutArc] {
        &self.out[self.out_offsets[v]..self.out_offsets[v + 1]]
    }

    /// Arcs leaving `v` as `(head, weight)`, sorted by head.
    pub fn out_neighbors(&self, v: VertexId) -> impl Iterator<Item = (VertexId, Weight)> + '_ {
        self.out_arcs(v).iter().map(|a| (a.head, a.weight))
    }

    /// Arcs entering `v` as `(tail, weight)`, sorted by tail.
    pub fn in_neighbors(&self, v: VertexId) -> impl Iterator<Item = (VertexId, Weight)> + '_ {
        let range = self.in_offsets[v]..self.in_offsets[v + 1];
        self.in_tails[range.clone()]
            .iter()
            .copied()
            .zip(self.in_weights[range].iter().copied())
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.out_offsets[v + 1] - self.out_offsets[v]
    }

    pub fn in_degree(&self, v: VertexId) -> usize {
        self.in_offsets[v + 1] - self.in_offsets[v]
    }

    /// Δ⁺: largest out-degree, 0 for an arcless graph.
    pub fn max_outdegree(&self) -> usize {
        (0..self.n()).map(|v| self.out_degree(v)).max().unwrap_or(0)
    }

    /// Weight of the arc `u → v`, if present.
    pub fn arc_weight(&self, u: VertexId, v: VertexId) -> Option<Weight> {
        let arcs = self.out_arcs(u);
        arcs.binary_search_by_key(&v, |a| a.head)
            .ok()
            .map(|i| arcs[i].weight)
    }

    /// True if an arc joins `u` and `v` in either direction.
    pub fn linked(&self, u: VertexId, v: VertexId) -> bool {
        self.arc_weight(u, v).is_some() || self.arc_weight(v, u).is_some()
    }

    /// All arcs, ordered by `(tail, head)`.
    pub fn arcs(&self) -> impl Iterator<Item = DirectedEdge> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.out_neighbors(u)
                .map(move |(v, w)| DirectedEdge::new(u, v, w))
        })
    }

    /// Arcs of weight exactly `w` (the layer E^w).
    pub fn layer(&self, w: Weight) -> Vec<DirectedEdge> {
        self.arcs().filter(|a| a.weight == w).collect()
    }

    pub fn max_weight(&self) -> Weight {
        self.out.iter().map(|a| a.weight).max().unwrap_or(0)
    }

    /// New graph with `extra` arcs added; fails if any of them clashes with an
    /// existing arc.
    pub fn with_arcs<I>(&self, extra: I) -> Result<Self>
    where
        I: IntoIterator<Item = DirectedEdge>,
    {
        let mut arcs: Vec<DirectedEdge> = self.arcs().collect();
        arcs.extend(extra);
        Self::new(self.labels.clone(), arcs)
    }

    /// Subgraph induced by `s`, re-indexed densely in increasing id order.
    pub fn induced_subgraph(&self, s: &BTreeSet<VertexId>) -> InducedSubgraph {
        let original: Vec<VertexId> = s.iter().copied().collect();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in original.iter().enumerate() {
            index[v] = i;
        }
        let arcs = original
            .iter()
            .flat_map(|&u| {
                let index = &index;
                self.out_neighbors(u)
                    .filter(move |&(v, _)| index[v] != usize::MAX)
                    .map(move |(v, w)| DirectedEdge::new(index[u], index[v], w))
            })
            .collect();
        let labels = original.iter().map(|&v| self.labels[v]).collect();
        InducedSubgraph {
            graph: Self::from_sorted_arcs(labels, arcs),
            original,
        }
    }

    /// Undirected graph obtained by forgetting directions and weights.
    pub fn underlying(&self) -> UndirectedGraph {
        UndirectedGraph::from_edges(self.n(), self.arcs().map(|a| (a.tail, a.head)))
            .expect("arc set has no antiparallel pairs")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arc(u: usize, v: usize, w: Weight) -> DirectedEdge {
        DirectedEdge::new(u, v, w)
    }

    #[test]
    fn out_neighbors_examples() {
        let g = DirWLGraph::unlabeled(2, vec![arc(0, 1, 1)]).unwrap();
        assert_eq!(g.out_neighbors(0).collect::<Vec<_>>(), vec![(1, 1)]);
        assert_eq!(g.out_neighbors(1).count(), 0);

        let g = DirWLGraph::unlabeled(3, vec![arc(0, 2, 2), arc(0, 1, 1)]).unwrap();
        assert_eq!(g.out_neighbors(0).collect::<Vec<_>>(), vec![(1, 1), (2, 2)]);
        assert_eq!(g.in_neighbors(2).collect::<Vec<_>>(), vec![(0, 2)]);
    }

    #[test]
    fn max_outdegree_examples() {
        assert_eq!(DirWLGraph::arcless(vec![]).max_outdegree(), 0);
        let wedge = DirWLGraph::unlabeled(3, vec![arc(0, 1, 1), arc(0, 2, 1)]).unwrap();
        assert_eq!(wedge.max_outdegree(), 2);
        let path =
            DirWLGraph::unlabeled(4, vec![arc(0, 1, 1), arc(1, 2, 1), arc(2, 3, 1)]).unwrap();
        assert_eq!(path.max_outdegree(), 1);
    }

    #[test]
    fn induced_subgraph_examples() {
        let tri = DirWLGraph::new(
            vec![7, 8, 9],
            vec![arc(0, 1, 1), arc(1, 2, 2), arc(0, 2, 3)],
        )
        .unwrap();

        let all: BTreeSet<_> = (0..3).collect();
        let sub = tri.induced_subgraph(&all);
        assert_eq!(sub.graph, tri);
        assert_eq!(sub.original, vec![0, 1, 2]);

        let sub = tri.induced_subgraph(&BTreeSet::new());
        assert_eq!(sub.graph.n(), 0);
        assert_eq!(sub.graph.arc_count(), 0);

        let sub = tri.induced_subgraph(&[0, 1].into_iter().collect());
        assert_eq!(sub.graph.arcs().collect::<Vec<_>>(), vec![arc(0, 1, 1)]);
        assert_eq!(sub.graph.labels(), &[7, 8]);

        let sub = tri.induced_subgraph(&[1, 2].into_iter().collect());
        assert_eq!(sub.graph.arcs().collect::<Vec<_>>(), vec![arc(0, 1, 2)]);
        assert_eq!(sub.original, vec![1, 2]);
    }

    #[test]
    fn rejects_antiparallel_and_duplicate_arcs() {
        assert!(matches!(
            DirWLGraph::unlabeled(2, vec![arc(0, 1, 1), arc(1, 0, 2)]),
            Err(Error::ConflictingArc(..))
        ));
        assert!(matches!(
            DirWLGraph::unlabeled(2, vec![arc(0, 1, 1), arc(0, 1, 2)]),
            Err(Error::ConflictingArc(..))
        ));
        assert!(matches!(
            DirWLGraph::unlabeled(2, vec![arc(0, 1, 0)]),
            Err(Error::ZeroWeight)
        ));
        let g = DirWLGraph::unlabeled(3, vec![arc(0, 1, 1)]).unwrap();
        assert!(g.with_arcs([arc(1, 0, 2)]).is_err());
        assert!(g.with_arcs([arc(1, 2, 2)]).is_ok());
    }

    #[test]
    fn rejects_loops_and_parallel_edges() {
        assert!(matches!(
            UndirectedGraph::from_edges(2, [(1, 1)]),
            Err(Error::SelfLoop(1))
        ));
        assert!(matches!(
            UndirectedGraph::from_edges(2, [(0, 1), (1, 0)]),
            Err(Error::ParallelEdge(0, 1))
        ));
        assert!(matches!(
            UndirectedGraph::from_edges(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        ));
    }

    #[test]
    fn layers_partition_arcs() {
        let g = DirWLGraph::unlabeled(
            4,
            vec![arc(0, 1, 1), arc(0, 2, 1), arc(1, 2, 2), arc(3, 0, 3)],
        )
        .unwrap();
        let total: usize = (1..=g.max_weight()).map(|w| g.layer(w).len()).sum();
        assert_eq!(total, g.arc_count());
        assert_eq!(g.vertices_with_label(TRIVIAL_LABEL).count(), 4);
        assert_eq!(g.vertices_with_label(0).count(), 0);
    }

    #[test]
    fn families() {
        assert_eq!(UndirectedGraph::complete(4).m(), 6);
        assert_eq!(UndirectedGraph::cycle(6).m(), 6);
        assert_eq!(UndirectedGraph::path(3).m(), 2);
        assert_eq!(UndirectedGraph::star(3).degree(0), 3);
        let two = UndirectedGraph::path(2).disjoint_union(&UndirectedGraph::path(2));
        assert_eq!(two.edge_list(), vec![(0, 1), (2, 3)]);
    }
}
