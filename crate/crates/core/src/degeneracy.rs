//! Minimum-degree peeling and the acyclic orientation it induces.

use crate::graph::{DirWLGraph, DirectedEdge, EdgeSet, UndirectedGraph, VertexId, TRIVIAL_LABEL};

/// Peeling order of a graph.
///
/// `order[i]` is the `i`-th removed vertex and `position[v]` is its inverse.
/// `kappa` is the largest degree seen at removal time, i.e. the degeneracy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegeneracyOrder {
    pub order: Vec<VertexId>,
    pub position: Vec<usize>,
    pub kappa: usize,
}

/// Repeatedly removes a vertex of minimum remaining degree, lowest id first.
///
/// Keys `(degree, id)` live in an indexed 4-ary heap with decrease-key, so
/// the peel costs O((n + m) log n) with at most `n` heap entries.
pub fn degeneracy_order<A: AsRef<[VertexId]>>(adj: &[A]) -> DegeneracyOrder {
    let n = adj.len();
    let mut heap = PeelHeap::new(adj.iter().map(|l| l.as_ref().len()));
    let mut order = Vec::with_capacity(n);
    let mut position = vec![usize::MAX; n];
    let mut kappa = 0;

    while let Some((d, v)) = heap.pop() {
        position[v] = order.len();
        order.push(v);
        kappa = kappa.max(d);
        for &w in adj[v].as_ref() {
            if position[w] == usize::MAX {
                heap.decrement(w);
            }
        }
    }
    DegeneracyOrder {
        order,
        position,
        kappa,
    }
}

/// Min-heap over `degree << 32 | id` with a slot index per vertex.
struct PeelHeap {
    keys: Vec<u64>,
    slot: Vec<usize>,
}

const ARITY: usize = 4;
const ABSENT: usize = usize::MAX;

impl PeelHeap {
    fn new(degrees: impl Iterator<Item = usize>) -> Self {
        let keys: Vec<u64> = degrees
            .enumerate()
            .map(|(v, d)| {
                assert!(v < 1 << 32 && d < 1 << 32, "graph too large for the peel heap");
                (d as u64) << 32 | v as u64
            })
            .collect();
        let slot = (0..keys.len()).collect();
        let mut heap = PeelHeap { keys, slot };
        for i in (0..heap.keys.len()).rev() {
            heap.sift_down(i);
        }
        heap
    }

    fn vertex(key: u64) -> usize {
        (key & 0xffff_ffff) as usize
    }

    fn place(&mut self, i: usize, key: u64) {
        self.keys[i] = key;
        self.slot[Self::vertex(key)] = i;
    }

    fn sift_up(&mut self, mut i: usize) {
        let key = self.keys[i];
        while i > 0 {
            let parent = (i - 1) / ARITY;
            if self.keys[parent] <= key {
                break;
            }
            self.place(i, self.keys[parent]);
            i = parent;
        }
        self.place(i, key);
    }

    fn sift_down(&mut self, mut i: usize) {
        let len = self.keys.len();
        let key = self.keys[i];
        loop {
            let first = i * ARITY + 1;
            if first >= len {
                break;
            }
            let last = (first + ARITY).min(len);
            let mut best = first;
            for c in first + 1..last {
                if self.keys[c] < self.keys[best] {
                    best = c;
                }
            }
            if self.keys[best] >= key {
                break;
            }
            self.place(i, self.keys[best]);
            i = best;
        }
        self.place(i, key);
    }

    fn pop(&mut self) -> Option<(usize, VertexId)> {
        let top = *self.keys.first()?;
        let last = self.keys.pop().expect("non-empty");
        self.slot[Self::vertex(top)] = ABSENT;
        if !self.keys.is_empty() {
            self.place(0, last);
            self.sift_down(0);
        }
        Some(((top >> 32) as usize, Self::vertex(top)))
    }

    fn decrement(&mut self, v: VertexId) {
        let i = self.slot[v];
        debug_assert!(i != ABSENT && self.keys[i] >> 32 > 0);
        self.keys[i] -= 1 << 32;
        self.sift_up(i);
    }
}

/// Orients every edge of `g` from the earlier-peeled endpoint to the later
/// one. All arcs get weight 1 and all vertices the trivial label.
pub fn degeneracy_orient(g: &UndirectedGraph) -> (DirWLGraph, DegeneracyOrder) {
    let adj: Vec<&[VertexId]> = (0..g.n()).map(|v| g.neighbors(v)).collect();
    let ord = degeneracy_order(&adj);
    let out: Vec<Vec<VertexId>> = (0..g.n())
        .map(|v| {
            g.neighbors(v)
                .iter()
                .copied()
                .filter(|&w| ord.position[v] < ord.position[w])
                .collect()
        })
        .collect();
    let d = DirWLGraph::from_out_lists(vec![TRIVIAL_LABEL; g.n()], &out, 1);
    (d, ord)
}

/// Orients a single layer of pairs on `n` vertices by the degeneracy order of
/// the graph those pairs form on their own. Arcs carry the layer weight.
pub fn orient_edge_set(n: usize, layer: &EdgeSet) -> (Vec<DirectedEdge>, DegeneracyOrder) {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in &layer.pairs {
        adj[u].push(v);
        adj[v].push(u);
    }
    let ord = degeneracy_order(&adj);
    let arcs = layer
        .pairs
        .iter()
        .map(|&(u, v)| orient_pair(&ord, u, v, layer.weight))
        .collect();
    (arcs, ord)
}

fn orient_pair(ord: &DegeneracyOrder, u: VertexId, v: VertexId, w: u32) -> DirectedEdge {
    if ord.position[u] < ord.position[v] {
        DirectedEdge::new(u, v, w)
    } else {
        DirectedEdge::new(v, u, w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Degeneracy by definition: max over vertex subsets of the minimum degree
    /// of the induced subgraph.
    fn degeneracy_by_subsets(g: &UndirectedGraph) -> usize {
        let n = g.n();
        let mut best = 0;
        for mask in 1u32..(1 << n) {
            let min_deg = (0..n)
                .filter(|&v| mask >> v & 1 == 1)
                .map(|v| {
                    g.neighbors(v)
                        .iter()
                        .filter(|&&w| mask >> w & 1 == 1)
                        .count()
                })
                .min()
                .unwrap();
            best = best.max(min_deg);
        }
        best
    }

    #[test]
    fn known_degeneracies() {
        assert_eq!(degeneracy_orient(&UndirectedGraph::empty(4)).1.kappa, 0);
        assert_eq!(degeneracy_orient(&UndirectedGraph::path(5)).1.kappa, 1);
        assert_eq!(degeneracy_orient(&UndirectedGraph::cycle(7)).1.kappa, 2);
        assert_eq!(degeneracy_orient(&UndirectedGraph::complete(5)).1.kappa, 4);
        assert_eq!(degeneracy_orient(&UndirectedGraph::star(6)).1.kappa, 1);
    }

    #[test]
    fn ties_break_by_lowest_id() {
        let (d, ord) = degeneracy_orient(&UndirectedGraph::cycle(4));
        assert_eq!(ord.order, vec![0, 1, 2, 3]);
        let arcs: Vec<_> = d.arcs().map(|a| (a.tail, a.head)).collect();
        assert_eq!(arcs, vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
    }

    #[test]
    fn layer_orientation_keeps_weight() {
        let layer = EdgeSet {
            weight: 3,
            pairs: vec![(0, 2), (2, 4)],
        };
        let (arcs, ord) = orient_edge_set(5, &layer);
        assert_eq!(ord.kappa, 1);
        assert!(arcs.iter().all(|a| a.weight == 3));
        assert_eq!(arcs.len(), 2);
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = UndirectedGraph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[k] {
                            edges.push((u, v));
                        }
                        k += 1;
                    }
                }
                UndirectedGraph::from_edges(n, edges).unwrap()
            })
        })
    }

    /// Quadratic peel: scan for the lowest-id vertex of minimum degree.
    fn naive_order(g: &UndirectedGraph) -> Vec<VertexId> {
        let mut degree: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
        let mut removed = vec![false; g.n()];
        let mut order = Vec::new();
        for _ in 0..g.n() {
            let v = (0..g.n()).filter(|&v| !removed[v]).min_by_key(|&v| (degree[v], v)).unwrap();
            removed[v] = true;
            order.push(v);
            for &w in g.neighbors(v) {
                degree[w] -= 1;
            }
        }
        order
    }

    proptest! {
        #[test]
        fn heap_peel_matches_naive_peel(g in arb_graph(14)) {
            let (_, ord) = degeneracy_orient(&g);
            prop_assert_eq!(ord.order, naive_order(&g));
        }

        #[test]
        fn orientation_is_acyclic_with_outdegree_kappa(g in arb_graph(10)) {
            let (d, ord) = degeneracy_orient(&g);
            prop_assert_eq!(d.arc_count(), g.m());
            for a in d.arcs() {
                prop_assert!(ord.position[a.tail] < ord.position[a.head]);
            }
            prop_assert_eq!(d.max_outdegree(), ord.kappa);
            prop_assert_eq!(ord.kappa, degeneracy_by_subsets(&g));
        }
    }
}
