//! Times `Hom(G, C_5)` on random degeneracy-3 hosts whose edge count doubles.
//!
//! `cargo run --release --example scaling_bench -- 100000 200000 400000`

use std::time::Instant;

use sparsecount::harness::{generate_bounded_degeneracy, millis, vertices_for_edges};
use sparsecount::{count_homomorphisms_with_stats, CountOptions, UndirectedGraph};

fn main() {
    let mut sizes: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    if sizes.is_empty() {
        sizes = vec![25_000, 50_000, 100_000];
    }
    let pattern = UndirectedGraph::cycle(5);
    let mut prev: Option<f64> = None;
    for m in sizes {
        let g = generate_bounded_degeneracy(vertices_for_edges(m, 3), 3, 8);
        let clock = Instant::now();
        let (count, stats) = count_homomorphisms_with_stats(&g, &pattern, &CountOptions::default()).unwrap();
        let secs = clock.elapsed().as_secs_f64();
        let ratio = prev.map(|p| format!(" ratio {:.2}", secs / p)).unwrap_or_default();
        println!(
            "m={:>8} n={:>7} {:>8.3}s{ratio}  product {:.0}ms, extension {:.0}ms, dp {:.0}ms, Δ+={}  hom={count}",
            g.m(),
            g.n(),
            secs,
            millis(stats.product),
            millis(stats.host_extension),
            millis(stats.dp),
            stats.delta_plus,
        );
        prev = Some(secs);
    }
}
