//! Builds fraternal extensions on both sides: all members for a 4-cycle
//! pattern, and the single host-side extension of a random sparse graph.

use sparsecount::fraternal::{
    enumerate_pattern_extensions, optimal_extension_of, validate_fraternity, DEFAULT_EXTENSION_CAP,
};
use sparsecount::graph::{write_wl_dump, TRIVIAL_LABEL};
use sparsecount::harness::generate_bounded_degeneracy;
use sparsecount::product::label_pattern;
use sparsecount::UndirectedGraph;

fn main() -> sparsecount::Result<()> {
    let c4 = label_pattern(&UndirectedGraph::cycle(4));
    for t in 1..=3 {
        let members = enumerate_pattern_extensions(&c4, t, DEFAULT_EXTENSION_CAP)?;
        let layered = members.iter().filter(|m| m.graph.max_weight() > 1).count();
        println!("C4, depth {t}: {} extensions, {layered} with a weight-2+ arc", members.len());
    }
    let example = enumerate_pattern_extensions(&c4, 2, DEFAULT_EXTENSION_CAP)?
        .into_iter()
        .find(|m| m.graph.max_weight() == 2)
        .expect("some orientation has an out-out wedge");
    println!("\none C4 extension at depth 2:\n{}", write_wl_dump(&example.graph));

    let g = generate_bounded_degeneracy(10_000, 3, 7);
    for t in 1..=3 {
        let ext = optimal_extension_of(&g, vec![TRIVIAL_LABEL; g.n()], t)?;
        let sizes: Vec<usize> = ext.layers().iter().map(Vec::len).collect();
        println!(
            "host n={} m={}, depth {t}: layer sizes {sizes:?}, max out-degree {}, valid {}",
            g.n(),
            g.m(),
            ext.graph.max_outdegree(),
            validate_fraternity(&ext)
        );
    }
    Ok(())
}
