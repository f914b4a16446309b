//! Counts homomorphisms of a pattern into a host.
//!
//! With no arguments it uses a seeded random host and a 5-cycle; otherwise
//! `cargo run --example count_homomorphisms -- host.el pattern.el`.

use sparsecount::harness::generate_bounded_degeneracy;
use sparsecount::{count_homomorphisms_with_stats, load_edge_list, CountOptions, UndirectedGraph};

fn main() -> sparsecount::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (host, pattern) = match args.as_slice() {
        [h, p] => (load_edge_list(h)?.graph, load_edge_list(p)?.graph),
        _ => (generate_bounded_degeneracy(2_000, 3, 42), UndirectedGraph::cycle(5)),
    };

    let (count, stats) = count_homomorphisms_with_stats(&host, &pattern, &CountOptions::default())?;
    println!("host: n={} m={}", host.n(), host.m());
    println!("pattern: n={} m={} licl={}", pattern.n(), pattern.m(), stats.licl);
    println!("depth t={} over {} pattern extensions", stats.depth, stats.n_extensions);
    println!("host extension: kappa={} delta_plus={}", stats.kappa, stats.delta_plus);
    println!("Hom = {count}");
    Ok(())
}
