//! Seeded instance generators, including the edge subdivisions that turn
//! triangle counting into long-cycle counting.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::UndirectedGraph;

/// Replaces every edge by a path of `t + 1` edges through `t` new vertices.
/// Original vertices keep their ids; new ones follow in edge order.
pub fn generate_subdivision(g: &UndirectedGraph, t: u32) -> Result<UndirectedGraph> {
    if t < 1 {
        return Err(Error::InvalidDepth { got: t, min: 1 });
    }
    let mut edges = Vec::new();
    let mut next = g.n();
    for (u, v) in g.edges() {
        push_path(&mut edges, &mut next, u, v, t as usize);
    }
    UndirectedGraph::from_edges(next, edges)
}

/// Joins the endpoints of every edge by two internally disjoint paths, of
/// `t + 1` and `t + 2` edges; the original edge is dropped.
pub fn generate_double_subdivision(g: &UndirectedGraph, t: u32) -> Result<UndirectedGraph> {
    if t < 2 {
        return Err(Error::InvalidDepth { got: t, min: 2 });
    }
    let mut edges = Vec::new();
    let mut next = g.n();
    for (u, v) in g.edges() {
        push_path(&mut edges, &mut next, u, v, t as usize);
        push_path(&mut edges, &mut next, u, v, t as usize + 1);
    }
    UndirectedGraph::from_edges(next, edges)
}

fn push_path(edges: &mut Vec<(usize, usize)>, next: &mut usize, u: usize, v: usize, inner: usize) {
    let mut prev = u;
    for _ in 0..inner {
        edges.push((prev, *next));
        prev = *next;
        *next += 1;
    }
    edges.push((prev, v));
}

/// Vertex `i` links to `min(c, i)` distinct earlier vertices chosen uniformly,
/// so every subgraph has a vertex of degree at most `c`.
pub fn generate_bounded_degeneracy(n: usize, c: usize, seed: u64) -> UndirectedGraph {
    assert!(c >= 1, "c must be positive");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::with_capacity(n * c);
    for i in 1..n {
        for j in sample(&mut rng, i, c.min(i)) {
            edges.push((j, i));
        }
    }
    UndirectedGraph::from_edges(n, edges).expect("distinct earlier neighbors")
}

/// Vertex count giving `m` edges for [`generate_bounded_degeneracy`] with
/// parameter `c` (exact when `m + c(c+1)/2` is a multiple of `c`).
pub fn vertices_for_edges(m: usize, c: usize) -> usize {
    (m + c * (c + 1) / 2) / c
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp(n: usize, p: f64, seed: u64) -> UndirectedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    UndirectedGraph::from_edges(n, edges).expect("simple by construction")
}

/// Number of triangles, by intersecting higher-id neighbor lists.
pub fn count_triangles(g: &UndirectedGraph) -> u64 {
    let mut total = 0;
    for (u, v) in g.edges() {
        let (a, b) = (g.neighbors(u), g.neighbors(v));
        let (mut i, mut j) = (a.partition_point(|&x| x <= v), b.partition_point(|&x| x <= v));
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    total += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degeneracy::degeneracy_orient;
    use crate::pattern::canonical_form;

    #[test]
    fn subdivision_examples() {
        let c9 = generate_subdivision(&UndirectedGraph::complete(3), 2).unwrap();
        assert_eq!(canonical_form(&c9).unwrap(), canonical_form(&UndirectedGraph::cycle(9)).unwrap());
        let p = generate_subdivision(&UndirectedGraph::path(2), 3).unwrap();
        assert_eq!(canonical_form(&p).unwrap(), canonical_form(&UndirectedGraph::path(5)).unwrap());
        assert!(generate_subdivision(&UndirectedGraph::path(2), 0).is_err());
    }

    #[test]
    fn double_subdivision_examples() {
        let theta = generate_double_subdivision(&UndirectedGraph::path(2), 2).unwrap();
        assert_eq!(
            canonical_form(&theta).unwrap(),
            canonical_form(&UndirectedGraph::cycle(7)).unwrap()
        );
        let empty = generate_double_subdivision(&UndirectedGraph::empty(4), 3).unwrap();
        assert_eq!(empty, UndirectedGraph::empty(4));
        assert!(matches!(
            generate_double_subdivision(&UndirectedGraph::path(2), 1),
            Err(Error::InvalidDepth { got: 1, min: 2 })
        ));
    }

    #[test]
    fn subdivision_internal_vertices_have_degree_two() {
        let g = gnp(10, 0.4, 3);
        for t in 1..4 {
            let s = generate_subdivision(&g, t).unwrap();
            assert!((g.n()..s.n()).all(|v| s.degree(v) == 2));
            assert!(degeneracy_orient(&s).1.kappa <= 2);
        }
    }

    #[test]
    fn bounded_degeneracy() {
        let tree = generate_bounded_degeneracy(200, 1, 9);
        assert_eq!(tree.m(), 199);
        assert_eq!(degeneracy_orient(&tree).1.kappa, 1);
        let g = generate_bounded_degeneracy(1000, 3, 1);
        assert!(degeneracy_orient(&g).1.kappa <= 3);
        assert_eq!(g.m(), 3 * 1000 - 6);
        assert_eq!(vertices_for_edges(g.m(), 3), 1000);
        assert_eq!(g, generate_bounded_degeneracy(1000, 3, 1));
        assert_ne!(g, generate_bounded_degeneracy(1000, 3, 2));
    }

    #[test]
    fn triangles() {
        assert_eq!(count_triangles(&UndirectedGraph::complete(5)), 10);
        assert_eq!(count_triangles(&UndirectedGraph::cycle(5)), 0);
        assert_eq!(gnp(12, 0.3, 5), gnp(12, 0.3, 5));
    }
}
