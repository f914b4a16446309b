//! Static analysis of small pattern graphs.

use std::collections::{BTreeMap, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{DirWLGraph, DirectedEdge, Label, UndirectedGraph, VertexId};

/// Largest pattern accepted by [`canonical_form`].
pub const CANONICAL_LIMIT: usize = 11;

/// Largest pattern accepted by [`licl`].
pub const LICL_LIMIT: usize = 24;

/// One term of the subgraph-count expansion `Sub = Σ c · Hom(quotient)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpasmEntry {
    pub quotient: UndirectedGraph,
    pub coefficient: BigRational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PatternProfile {
    pub licl: usize,
    pub t_min: u32,
    pub spasm_licl: usize,
}

/// Length of the longest induced cycle, 0 when the pattern is a forest.
///
/// Panics if the pattern has more than [`LICL_LIMIT`] vertices.
pub fn licl(h: &UndirectedGraph) -> usize {
    let n = h.n();
    assert!(n <= LICL_LIMIT, "licl: pattern has {n} vertices");
    let adj = adjacency_masks(h);
    let mut best = 0;
    for mask in 1u32..(1u32 << n) {
        let size = mask.count_ones() as usize;
        if size < 3 || size <= best {
            continue;
        }
        let two_regular = bits(mask).all(|v| (adj[v] & mask).count_ones() == 2);
        if two_regular && mask_connected(&adj, mask) {
            best = size;
        }
    }
    best
}

/// Smallest `t ≥ 1` with `licl < 3(t + 1)`.
pub fn min_extension_depth(licl: usize) -> u32 {
    (licl / 3).max(1) as u32
}

pub fn pattern_profile(h: &UndirectedGraph) -> Result<PatternProfile> {
    let l = licl(h);
    let spasm_licl = spasm(h)?
        .iter()
        .map(|e| licl(&e.quotient))
        .max()
        .unwrap_or(0);
    Ok(PatternProfile {
        licl: l,
        t_min: min_extension_depth(l),
        spasm_licl,
    })
}

/// Number of automorphisms, found by backtracking over bijections that
/// preserve adjacency and non-adjacency.
pub fn automorphism_count(h: &UndirectedGraph) -> u64 {
    let n = h.n();
    let order = bfs_order(h);
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(
        h: &UndirectedGraph,
        order: &[VertexId],
        i: usize,
        image: &mut [usize],
        used: &mut [bool],
    ) -> u64 {
        if i == order.len() {
            return 1;
        }
        let v = order[i];
        let mut total = 0;
        for x in 0..h.n() {
            if used[x] || h.degree(x) != h.degree(v) {
                continue;
            }
            let consistent = order[..i]
                .iter()
                .all(|&u| h.has_edge(u, v) == h.has_edge(image[u], x));
            if consistent {
                image[v] = x;
                used[x] = true;
                total += go(h, order, i + 1, image, used);
                used[x] = false;
            }
        }
        total
    }
    go(h, &order, 0, &mut image, &mut used)
}

/// Isomorphism-invariant code: vertex count plus the smallest adjacency
/// bit-string over all relabelings that list vertices by nondecreasing degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub n: usize,
    pub code: u64,
}

pub fn canonical_form(h: &UndirectedGraph) -> Result<CanonicalForm> {
    canonical_labeling(h).map(|(c, _)| c)
}

/// Canonical code together with a permutation `perm` such that
/// `h.relabeled(&perm)` realizes the code.
pub fn canonical_labeling(h: &UndirectedGraph) -> Result<(CanonicalForm, Vec<VertexId>)> {
    let n = h.n();
    if n > CANONICAL_LIMIT {
        return Err(Error::PatternTooLarge {
            n,
            limit: CANONICAL_LIMIT,
        });
    }
    let total_bits = n * n.saturating_sub(1) / 2;
    let mut degrees: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
    degrees.sort_unstable();

    // Position i must hold a vertex of degree degrees[i]; bits are appended
    // row by row (adjacency to positions 0..i), most significant first.
    struct Search<'a> {
        h: &'a UndirectedGraph,
        degrees: Vec<usize>,
        total_bits: usize,
        slots: Vec<VertexId>,
        used: Vec<bool>,
        best: Option<(u64, Vec<VertexId>)>,
    }
    impl Search<'_> {
        fn go(&mut self, i: usize, prefix: u64, len: usize) {
            if let Some((best, _)) = &self.best {
                let best_prefix = if len == 0 { 0 } else { best >> (self.total_bits - len) };
                if prefix > best_prefix {
                    return;
                }
            }
            if i == self.degrees.len() {
                let better = self.best.as_ref().is_none_or(|(b, _)| prefix < *b);
                if better {
                    self.best = Some((prefix, self.slots.clone()));
                }
                return;
            }
            for v in 0..self.h.n() {
                if self.used[v] || self.h.degree(v) != self.degrees[i] {
                    continue;
                }
                let mut p = prefix;
                for j in 0..i {
                    p = p << 1 | self.h.has_edge(self.slots[j], v) as u64;
                }
                self.used[v] = true;
                self.slots.push(v);
                self.go(i + 1, p, len + i);
                self.slots.pop();
                self.used[v] = false;
            }
        }
    }
    let mut s = Search {
        h,
        degrees,
        total_bits,
        slots: Vec::with_capacity(n),
        used: vec![false; n],
        best: None,
    };
    s.go(0, 0, 0);
    let (code, slots) = s.best.expect("at least one labeling exists");
    let mut perm = vec![0; n];
    for (pos, &v) in slots.iter().enumerate() {
        perm[v] = pos;
    }
    Ok((CanonicalForm { n, code }, perm))
}

/// Spasm of `h` with exact coefficients, so that for every simple host `G`
/// `Sub(G, h) = Σ coefficient · Hom(quotient, G)`.
///
/// Partitions of `V(h)` into independent blocks are weighted by the Möbius
/// value `Π (−1)^{|B|−1} (|B|−1)!` and divided by `|Aut(h)|`; isomorphic
/// quotients are merged and classes summing to zero are dropped. Quotients
/// come back in canonical labeling, larger quotients first.
pub fn spasm(h: &UndirectedGraph) -> Result<Vec<SpasmEntry>> {
    let n = h.n();
    if n > CANONICAL_LIMIT {
        return Err(Error::PatternTooLarge {
            n,
            limit: CANONICAL_LIMIT,
        });
    }
    let aut = BigInt::from(automorphism_count(h));
    let mut classes: BTreeMap<CanonicalForm, (UndirectedGraph, BigInt)> = BTreeMap::new();
    let mut block_of = vec![0usize; n];
    let mut blocks: Vec<Vec<VertexId>> = Vec::new();

    type Emit<'a> = dyn FnMut(&[usize], &[Vec<VertexId>]) + 'a;

    fn partitions(
        h: &UndirectedGraph,
        v: usize,
        block_of: &mut Vec<usize>,
        blocks: &mut Vec<Vec<VertexId>>,
        emit: &mut Emit<'_>,
    ) {
        if v == h.n() {
            emit(block_of, blocks);
            return;
        }
        for b in 0..blocks.len() {
            if blocks[b].iter().any(|&u| h.has_edge(u, v)) {
                continue;
            }
            blocks[b].push(v);
            block_of[v] = b;
            partitions(h, v + 1, block_of, blocks, emit);
            blocks[b].pop();
        }
        blocks.push(vec![v]);
        block_of[v] = blocks.len() - 1;
        partitions(h, v + 1, block_of, blocks, emit);
        blocks.pop();
    }

    let mut failure = None;
    let mut emit = |block_of: &[usize], blocks: &[Vec<VertexId>]| {
        let mut mu = BigInt::one();
        for b in blocks {
            let s = b.len();
            for f in 1..s {
                mu *= f as i64;
            }
            if s % 2 == 0 {
                mu = -mu;
            }
        }
        let q = quotient(h, block_of, blocks.len());
        match canonical_labeling(&q) {
            Ok((form, perm)) => {
                let entry = classes
                    .entry(form)
                    .or_insert_with(|| (q.relabeled(&perm), BigInt::zero()));
                entry.1 += mu;
            }
            Err(e) => failure = Some(e),
        }
    };
    partitions(h, 0, &mut block_of, &mut blocks, &mut emit);
    if let Some(e) = failure {
        return Err(e);
    }

    let mut out: Vec<SpasmEntry> = classes
        .into_values()
        .filter(|(_, c)| !c.is_zero())
        .map(|(quotient, c)| SpasmEntry {
            quotient,
            coefficient: BigRational::new(c, aut.clone()),
        })
        .collect();
    out.sort_by(|a, b| {
        (b.quotient.n(), b.quotient.m())
            .cmp(&(a.quotient.n(), a.quotient.m()))
            .then_with(|| {
                let ca = canonical_form(&a.quotient).expect("checked");
                let cb = canonical_form(&b.quotient).expect("checked");
                ca.cmp(&cb)
            })
    });
    Ok(out)
}

fn quotient(h: &UndirectedGraph, block_of: &[usize], nblocks: usize) -> UndirectedGraph {
    let mut adj = vec![Vec::new(); nblocks];
    for (u, v) in h.edges() {
        let (a, b) = (block_of[u], block_of[v]);
        adj[a].push(b);
        adj[b].push(a);
    }
    for l in &mut adj {
        l.sort_unstable();
        l.dedup();
    }
    UndirectedGraph::from_sorted_adjacency(adj)
}

/// Every acyclic orientation of `h` with unit weights, vertex `v` labeled `v`.
///
/// Orientations are enumerated over all `2^|E|` choices and filtered by a
/// cycle check, in the order of the choice bit-mask.
pub fn acyclic_orientations(h: &UndirectedGraph) -> Vec<DirWLGraph> {
    let edges = h.edge_list();
    assert!(edges.len() < 64, "acyclic_orientations: too many edges");
    let labels: Vec<Label> = (0..h.n() as Label).collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << edges.len()) {
        let arcs: Vec<DirectedEdge> = edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| {
                if mask >> i & 1 == 0 {
                    DirectedEdge::new(u, v, 1)
                } else {
                    DirectedEdge::new(v, u, 1)
                }
            })
            .collect();
        if is_acyclic(h.n(), &arcs) {
            out.push(DirWLGraph::new(labels.clone(), arcs).expect("orientation is simple"));
        }
    }
    out
}

/// Kahn's algorithm on an arc list.
pub(crate) fn is_acyclic(n: usize, arcs: &[DirectedEdge]) -> bool {
    let mut indeg = vec![0usize; n];
    let mut out = vec![Vec::new(); n];
    for a in arcs {
        indeg[a.head] += 1;
        out[a.tail].push(a.head);
    }
    let mut queue: VecDeque<_> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(v) = queue.pop_front() {
        seen += 1;
        for &w in &out[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                queue.push_back(w);
            }
        }
    }
    seen == n
}

/// Connected components as sorted vertex lists, ordered by smallest vertex.
pub fn connected_components(h: &UndirectedGraph) -> Vec<Vec<VertexId>> {
    let mut seen = vec![false; h.n()];
    let mut comps = Vec::new();
    for s in 0..h.n() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            let v = comp[i];
            i += 1;
            for &w in h.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

fn adjacency_masks(h: &UndirectedGraph) -> Vec<u32> {
    (0..h.n())
        .map(|v| h.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect()
}

fn bits(mask: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |&i| mask >> i & 1 == 1)
}

fn mask_connected(adj: &[u32], mask: u32) -> bool {
    let start = mask.trailing_zeros() as usize;
    let mut reached = 1u32 << start;
    let mut frontier = reached;
    while frontier != 0 {
        let mut next = 0;
        for v in bits(frontier) {
            next |= adj[v] & mask;
        }
        frontier = next & !reached;
        reached |= next;
    }
    reached == mask
}

/// BFS order from each unvisited vertex in turn; keeps backtracking searches
/// anchored to already-placed neighbors.
fn bfs_order(h: &UndirectedGraph) -> Vec<VertexId> {
    let mut seen = vec![false; h.n()];
    let mut order = Vec::with_capacity(h.n());
    for s in 0..h.n() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let start = order.len();
        order.push(s);
        let mut i = start;
        while i < order.len() {
            let v = order[i];
            i += 1;
            for &w in h.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
    }
    order
}
