//! Counts subgraph copies through the spasm and prints the expansion.
//!
//! Default host is the Petersen graph, which has twelve 5-cycles and ten
//! 6-cycles.

use num_bigint::BigInt;
use num_rational::BigRational;
use sparsecount::pattern::spasm;
use sparsecount::{count_homomorphisms, count_subgraphs, load_edge_list, CountOptions, UndirectedGraph};

fn petersen() -> UndirectedGraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.extend([(i, (i + 1) % 5), (5 + i, 5 + (i + 2) % 5), (i, 5 + i)]);
    }
    UndirectedGraph::from_edges(10, edges).unwrap()
}

fn main() -> sparsecount::Result<()> {
    let host = match std::env::args().nth(1) {
        Some(path) => load_edge_list(path)?.graph,
        None => petersen(),
    };
    let opts = CountOptions::default();

    let pattern = UndirectedGraph::cycle(5);
    println!("Sub(G, C5) = Σ c · Hom(G, quotient):");
    let mut sum = BigRational::from_integer(BigInt::from(0));
    for entry in spasm(&pattern)? {
        let hom = count_homomorphisms(&host, &entry.quotient, &opts)?;
        println!("  {:>6} x Hom(quotient n={} m={}) = {:>6} x {hom}", entry.coefficient.to_string(), entry.quotient.n(), entry.quotient.m(), entry.coefficient.to_string());
        sum += entry.coefficient * BigRational::from_integer(BigInt::from(hom));
    }
    println!("  sum = {sum}");

    for k in 3..=6 {
        let c = count_subgraphs(&host, &UndirectedGraph::cycle(k), &opts)?;
        println!("C{k} copies: {c}");
    }
    println!("P3 copies: {}", count_subgraphs(&host, &UndirectedGraph::path(3), &opts)?);
    Ok(())
}
