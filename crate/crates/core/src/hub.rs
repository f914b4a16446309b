//! Hubsets, reachability, and width-1 hub-tree decompositions.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use crate::graph::{DirWLGraph, VertexId};

/// Largest hubset for which the exhaustive tree search is attempted.
pub const EXHAUSTIVE_HUB_LIMIT: usize = 8;

/// Canonical hubset: the lowest-id vertex of every source component of the
/// strongly connected condensation, in increasing order.
///
/// For acyclic graphs and their fraternal extensions this is the set of
/// in-degree-0 vertices.
pub fn hubset(g: &DirWLGraph) -> Vec<VertexId> {
    let comp = strongly_connected_components(g);
    let ncomp = comp.iter().copied().max().map_or(0, |c| c + 1);
    let mut has_incoming = vec![false; ncomp];
    let mut rep = vec![usize::MAX; ncomp];
    for v in 0..g.n() {
        rep[comp[v]] = rep[comp[v]].min(v);
        for (w, _) in g.out_neighbors(v) {
            if comp[w] != comp[v] {
                has_incoming[comp[w]] = true;
            }
        }
    }
    let mut hubs: Vec<VertexId> = (0..ncomp)
        .filter(|&c| !has_incoming[c])
        .map(|c| rep[c])
        .collect();
    hubs.sort_unstable();
    hubs
}

/// Component index per vertex (Kosaraju, iterative).
fn strongly_connected_components(g: &DirWLGraph) -> Vec<usize> {
    let n = g.n();
    let mut visited = vec![false; n];
    let mut finish = Vec::with_capacity(n);
    for s in 0..n {
        if visited[s] {
            continue;
        }
        visited[s] = true;
        let mut stack = vec![(s, 0usize)];
        while let Some(&mut (v, ref mut i)) = stack.last_mut() {
            let out = g.out_arcs(v);
            if *i < out.len() {
                let w = out[*i].head;
                *i += 1;
                if !visited[w] {
                    visited[w] = true;
                    stack.push((w, 0));
                }
            } else {
                finish.push(v);
                stack.pop();
            }
        }
    }
    let mut comp = vec![usize::MAX; n];
    let mut next = 0;
    for &s in finish.iter().rev() {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = next;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for (w, _) in g.in_neighbors(v) {
                if comp[w] == usize::MAX {
                    comp[w] = next;
                    stack.push(w);
                }
            }
        }
        next += 1;
    }
    comp
}

/// Every vertex reachable from some member of `s`, members included.
pub fn reach(g: &DirWLGraph, s: &BTreeSet<VertexId>) -> BTreeSet<VertexId> {
    let mut seen = vec![false; g.n()];
    let mut stack: Vec<VertexId> = s.iter().copied().collect();
    for &v in &stack {
        seen[v] = true;
    }
    while let Some(v) = stack.pop() {
        for a in g.out_arcs(v) {
            if !seen[a.head] {
                seen[a.head] = true;
                stack.push(a.head);
            }
        }
    }
    (0..g.n()).filter(|&v| seen[v]).collect()
}

fn reach_one(g: &DirWLGraph, v: VertexId) -> BTreeSet<VertexId> {
    reach(g, &BTreeSet::from([v]))
}

/// Per-vertex reach sets computed on first use.
pub struct ReachCache<'a> {
    graph: &'a DirWLGraph,
    cells: Vec<OnceLock<BTreeSet<VertexId>>>,
}

impl<'a> ReachCache<'a> {
    pub fn new(graph: &'a DirWLGraph) -> Self {
        ReachCache {
            graph,
            cells: (0..graph.n()).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn of(&self, v: VertexId) -> &BTreeSet<VertexId> {
        self.cells[v].get_or_init(|| reach_one(self.graph, v))
    }

    /// Union of the reach sets of `vs`.
    pub fn of_all<I: IntoIterator<Item = VertexId>>(&self, vs: I) -> BTreeSet<VertexId> {
        let mut out = BTreeSet::new();
        for v in vs {
            out.extend(self.of(v).iter().copied());
        }
        out
    }

    fn covers(&self, d: VertexId, a: VertexId, b: VertexId) -> bool {
        let rd = self.of(d);
        self.of(a).intersection(self.of(b)).all(|v| rd.contains(v))
    }
}

/// Graph on a hub subset joining two hubs when some vertex is reached by
/// both of them and by no other hub of the subset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct URGraph {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<(VertexId, VertexId)>,
}

impl URGraph {
    /// True if the edge set contains no cycle.
    pub fn is_forest(&self) -> bool {
        let mut parent: Vec<usize> = (0..self.vertices.len()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        let index = |v: VertexId| self.vertices.iter().position(|&x| x == v).unwrap();
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, index(a)), find(&mut parent, index(b)));
            if ra == rb {
                return false;
            }
            parent[ra] = rb;
        }
        true
    }
}

pub fn unique_reachability_graph(g: &DirWLGraph, sp: &[VertexId]) -> URGraph {
    let cache = ReachCache::new(g);
    let mut edges = Vec::new();
    for (i, &a) in sp.iter().enumerate() {
        for &b in &sp[i + 1..] {
            let others = cache.of_all(sp.iter().copied().filter(|&x| x != a && x != b));
            let exclusive = cache
                .of(a)
                .intersection(cache.of(b))
                .any(|v| !others.contains(v));
            if exclusive {
                edges.push((a.min(b), a.max(b)));
            }
        }
    }
    URGraph {
        vertices: sp.to_vec(),
        edges,
    }
}

/// Rooted tree of single-hub bags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HubTree {
    /// Hub held by each bag.
    pub bags: Vec<VertexId>,
    /// Parent bag index, `None` for the root.
    pub parent: Vec<Option<usize>>,
    pub root: usize,
}

impl HubTree {
    pub fn len(&self) -> usize {
        self.bags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bags.is_empty()
    }

    pub fn children(&self, b: usize) -> Vec<usize> {
        (0..self.len()).filter(|&c| self.parent[c] == Some(b)).collect()
    }

    /// Bags in the subtree rooted at `b`, `b` first.
    pub fn down(&self, b: usize) -> Vec<usize> {
        let mut out = vec![b];
        let mut i = 0;
        while i < out.len() {
            out.extend(self.children(out[i]));
            i += 1;
        }
        out
    }

    /// Tree edges as `(parent hub, child hub)`.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        (0..self.len())
            .filter_map(|c| self.parent[c].map(|p| (self.bags[p], self.bags[c])))
            .collect()
    }

    fn depth(&self, mut b: usize) -> Option<usize> {
        let mut d = 0;
        while let Some(p) = self.parent[b] {
            b = p;
            d += 1;
            if d > self.len() {
                return None;
            }
        }
        (b == self.root).then_some(d)
    }

    /// Bags on the tree path between `a` and `b`, endpoints included.
    fn path(&self, mut a: usize, mut b: usize) -> Vec<usize> {
        let (mut da, mut db) = (self.depth(a).unwrap(), self.depth(b).unwrap());
        let (mut left, mut right) = (vec![], vec![]);
        while da > db {
            left.push(a);
            a = self.parent[a].unwrap();
            da -= 1;
        }
        while db > da {
            right.push(b);
            b = self.parent[b].unwrap();
            db -= 1;
        }
        while a != b {
            left.push(a);
            right.push(b);
            a = self.parent[a].unwrap();
            b = self.parent[b].unwrap();
        }
        left.push(a);
        left.extend(right.into_iter().rev());
        left
    }
}

/// Builds a width-1 hub-tree decomposition if one exists.
///
/// Hubs are inserted by descending reach size (ties by id); each is hung as a
/// leaf below a bag that covers its intersections with every placed hub. If
/// no remaining hub has such a bag, every labeled tree on the hubset is tried.
pub fn find_width1_decomposition(g: &DirWLGraph) -> Option<HubTree> {
    let hubs = hubset(g);
    if hubs.is_empty() {
        return None;
    }
    let cache = ReachCache::new(g);
    greedy(&hubs, &cache).or_else(|| {
        let tree = exhaustive(&hubs, &cache)?;
        debug_assert!(validate_with(&tree, &hubs, &cache));
        Some(tree)
    })
}

fn greedy(hubs: &[VertexId], cache: &ReachCache) -> Option<HubTree> {
    let mut order = hubs.to_vec();
    order.sort_by_key(|&h| (std::cmp::Reverse(cache.of(h).len()), h));
    let mut tree = HubTree {
        bags: vec![order.remove(0)],
        parent: vec![None],
        root: 0,
    };
    while !order.is_empty() {
        let placed = tree.bags.clone();
        let found = order.iter().enumerate().find_map(|(i, &s)| {
            (0..placed.len())
                .find(|&d| placed.iter().all(|&p| cache.covers(placed[d], s, p)))
                .map(|d| (i, d))
        })?;
        let (i, d) = found;
        tree.bags.push(order.remove(i));
        tree.parent.push(Some(d));
    }
    Some(tree)
}

fn exhaustive(hubs: &[VertexId], cache: &ReachCache) -> Option<HubTree> {
    let h = hubs.len();
    if h > EXHAUSTIVE_HUB_LIMIT {
        log::warn!("hubset of size {h} is too large for exhaustive tree search");
        return None;
    }
    if h <= 2 {
        // Any one- or two-bag tree is valid.
        return Some(HubTree {
            bags: hubs.to_vec(),
            parent: (0..h).map(|i| i.checked_sub(1)).collect(),
            root: 0,
        });
    }
    let total = h.pow(h as u32 - 2);
    (0..total).find_map(|code| {
        let mut seq = Vec::with_capacity(h - 2);
        let mut c = code;
        for _ in 0..h - 2 {
            seq.push(c % h);
            c /= h;
        }
        let tree = root_at_zero(hubs, &prufer_edges(&seq, h));
        validate_with(&tree, hubs, cache).then_some(tree)
    })
}

fn prufer_edges(seq: &[usize], h: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; h];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(h - 1);
    for &x in seq {
        let leaf = (0..h).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..h).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

fn root_at_zero(hubs: &[VertexId], edges: &[(usize, usize)]) -> HubTree {
    let h = hubs.len();
    let mut adj = vec![Vec::new(); h];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut parent = vec![None; h];
    let mut seen = vec![false; h];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some(v);
                stack.push(w);
            }
        }
    }
    HubTree {
        bags: hubs.to_vec(),
        parent,
        root: 0,
    }
}

/// Checks that bags are exactly the hubset (each once), that the parent
/// array is a tree rooted at `root`, and that for every bag `B` on the path
/// between `B1` and `B2`, `Reach(B1) ∩ Reach(B2) ⊆ Reach(B)`.
pub fn validate_decomposition(g: &DirWLGraph, tree: &HubTree) -> bool {
    let hubs = hubset(g);
    validate_with(tree, &hubs, &ReachCache::new(g))
}

fn validate_with(tree: &HubTree, hubs: &[VertexId], cache: &ReachCache) -> bool {
    let n = tree.len();
    if tree.parent.len() != n || tree.root >= n.max(1) || n == 0 {
        return false;
    }
    let mut bags = tree.bags.clone();
    bags.sort_unstable();
    if bags != hubs {
        return false;
    }
    if tree.parent[tree.root].is_some() || (0..n).any(|b| tree.depth(b).is_none()) {
        return false;
    }
    for b1 in 0..n {
        for b2 in b1 + 1..n {
            let path = tree.path(b1, b2);
            let (r1, r2) = (tree.bags[b1], tree.bags[b2]);
            if !path
                .iter()
                .all(|&b| cache.covers(tree.bags[b], r1, r2))
            {
                return false;
            }
        }
    }
    true
}
