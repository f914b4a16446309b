//! Self-labeled patterns and the labeled categorical product with a host.

use crate::graph::{Label, UndirectedGraph, VertexId};

/// Pattern whose vertex `v` carries label `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledPattern {
    pub graph: UndirectedGraph,
}

impl LabeledPattern {
    pub fn k(&self) -> usize {
        self.graph.n()
    }

    pub fn label(&self, v: VertexId) -> Label {
        v as Label
    }

    pub fn labels(&self) -> Vec<Label> {
        (0..self.k() as Label).collect()
    }
}

pub fn label_pattern(h: &UndirectedGraph) -> LabeledPattern {
    LabeledPattern { graph: h.clone() }
}

/// The product `F = H^L × G`.
///
/// Vertex `⟨u, x⟩` (pattern vertex `u`, host vertex `x`) has id `u·n + x`, so
/// each fiber `{⟨u, ·⟩}` is a contiguous id range, and it is labeled `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductHost {
    pub graph: UndirectedGraph,
    pub labels: Vec<Label>,
    /// Number of host vertices `n`.
    pub host_n: usize,
}

impl ProductHost {
    pub fn id(&self, u: VertexId, x: VertexId) -> VertexId {
        u * self.host_n + x
    }

    /// `(pattern vertex, host vertex)` behind a product vertex.
    pub fn pair(&self, v: VertexId) -> (VertexId, VertexId) {
        (v / self.host_n, v % self.host_n)
    }

    pub fn fiber(&self, u: VertexId) -> std::ops::Range<VertexId> {
        u * self.host_n..(u + 1) * self.host_n
    }
}

/// Builds `H^L × G`: `⟨u,x⟩ ~ ⟨b,y⟩` iff `u ~ b` in `H` and `x ~ y` in `G`.
///
/// Each adjacency list is emitted already sorted, since `b` runs over the
/// sorted pattern neighbors and `y < n`.
pub fn pattern_product(hl: &LabeledPattern, g: &UndirectedGraph) -> ProductHost {
    let (h, n) = (&hl.graph, g.n());
    let mut adj = Vec::with_capacity(h.n() * n);
    let mut labels = Vec::with_capacity(h.n() * n);
    for u in 0..h.n() {
        for x in 0..n {
            let mut list = Vec::with_capacity(h.degree(u) * g.degree(x));
            for &b in h.neighbors(u) {
                list.extend(g.neighbors(x).iter().map(|&y| b * n + y));
            }
            adj.push(list);
            labels.push(u as Label);
        }
    }
    ProductHost {
        graph: UndirectedGraph::from_sorted_adjacency(adj),
        labels,
        host_n: n,
    }
}
