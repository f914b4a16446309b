#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sparsecount::harness::{generate_bounded_degeneracy, gnp};
use sparsecount::UndirectedGraph;

/// Connected graphs on `k` vertices counted up to isomorphism, for k = 1..=6.
pub const CONNECTED_COUNTS: [usize; 6] = [1, 1, 2, 6, 21, 112];

fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..k).collect();
    fn go(i: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == p.len() {
            out.push(p.clone());
            return;
        }
        for j in i..p.len() {
            p.swap(i, j);
            go(i + 1, p, out);
            p.swap(i, j);
        }
    }
    go(0, &mut p, &mut out);
    out
}

fn connected(k: usize, edges: &[(usize, usize)]) -> bool {
    let mut seen = vec![false; k];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &(a, b) in edges {
            let w = if a == v { b } else if b == v { a } else { continue };
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// One representative per isomorphism class, by minimizing the edge bitmask
/// over all vertex permutations.
fn connected_graphs_on(k: usize) -> Vec<UndirectedGraph> {
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v))).collect();
    let index = |u: usize, v: usize| pairs.iter().position(|&p| p == (u.min(v), u.max(v))).unwrap();
    let perms = permutations(k);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> =
            (0..pairs.len()).filter(|&i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
        if !connected(k, &edges) {
            continue;
        }
        let code = perms
            .iter()
            .map(|p| edges.iter().fold(0u32, |acc, &(u, v)| acc | 1 << index(p[u], p[v])))
            .min()
            .unwrap();
        if seen.insert(code) {
            out.push(UndirectedGraph::from_edges(k, edges).unwrap());
        }
    }
    out
}

/// All connected graphs with 1 to 6 vertices, one per isomorphism class.
pub fn connected_graphs() -> &'static [UndirectedGraph] {
    static GRAPHS: OnceLock<Vec<UndirectedGraph>> = OnceLock::new();
    GRAPHS.get_or_init(|| (1..=6).flat_map(connected_graphs_on).collect())
}

/// Small random host: bounded degeneracy or G(n, p), chosen by the seed.
pub fn random_host(rng: &mut ChaCha8Rng, max_n: usize) -> UndirectedGraph {
    let n = rng.random_range(1..=max_n);
    let seed = rng.random();
    if rng.random_bool(0.5) {
        generate_bounded_degeneracy(n, rng.random_range(1..=3), seed)
    } else {
        gnp(n, rng.random_range(0.1..0.6), seed)
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The Petersen graph: outer 5-cycle, inner pentagram, spokes.
pub fn petersen() -> UndirectedGraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, 5 + i));
    }
    UndirectedGraph::from_edges(10, edges).unwrap()
}

/// The 3-cube on bit strings of length 3.
pub fn cube() -> UndirectedGraph {
    let edges = (0..8usize).flat_map(|v| (0..3).map(move |b| (v, v ^ 1 << b))).filter(|&(u, v)| u < v);
    UndirectedGraph::from_edges(8, edges).unwrap()
}

pub fn complete_bipartite(a: usize, b: usize) -> UndirectedGraph {
    UndirectedGraph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))).unwrap()
}

/// `tr(A^k)`: closed walks of length `k`, which equals `Hom(g, C_k)` for k ≥ 3.
pub fn closed_walks(g: &UndirectedGraph, k: usize) -> u128 {
    let n = g.n();
    let mut total = 0u128;
    for s in 0..n {
        let mut cur = vec![0u128; n];
        cur[s] = 1;
        for _ in 0..k {
            let mut next = vec![0u128; n];
            for (v, &c) in cur.iter().enumerate() {
                if c != 0 {
                    for &w in g.neighbors(v) {
                        next[w] += c;
                    }
                }
            }
            cur = next;
        }
        total += cur[s];
    }
    total
}
