//! Hubsets, unique reachability graphs and width-1 hub trees.
//!
//! The alternating orientation of a hexagon has three sources that pairwise
//! share a sink, so its reachability graph is a triangle and no width-1 tree
//! exists. Every extension of the hexagon at depth 2 does have one.

use sparsecount::fraternal::{enumerate_pattern_extensions, DEFAULT_EXTENSION_CAP};
use sparsecount::hub::{find_width1_decomposition, hubset, unique_reachability_graph, validate_decomposition};
use sparsecount::product::label_pattern;
use sparsecount::{DirWLGraph, DirectedEdge, UndirectedGraph};

fn main() -> sparsecount::Result<()> {
    let arcs = [(0, 1), (0, 5), (2, 1), (2, 3), (4, 3), (4, 5)];
    let hexagon = DirWLGraph::unlabeled(6, arcs.map(|(u, v)| DirectedEdge::new(u, v, 1)).to_vec())?;
    let hubs = hubset(&hexagon);
    let ur = unique_reachability_graph(&hexagon, &hubs);
    println!("alternating hexagon: hubs {hubs:?}, UR edges {:?}, forest {}", ur.edges, ur.is_forest());
    println!("width-1 tree: {:?}", find_width1_decomposition(&hexagon).map(|t| t.edges()));

    let c6 = label_pattern(&UndirectedGraph::cycle(6));
    for t in 1..=2 {
        let members = enumerate_pattern_extensions(&c6, t, DEFAULT_EXTENSION_CAP)?;
        let mut missing = 0;
        for m in &members {
            match find_width1_decomposition(&m.graph) {
                Some(tree) => assert!(validate_decomposition(&m.graph, &tree)),
                None => missing += 1,
            }
        }
        println!("C6 at depth {t}: {} extensions, {missing} without a width-1 tree", members.len());
    }

    let members = enumerate_pattern_extensions(&c6, 2, DEFAULT_EXTENSION_CAP)?;
    let m = members.iter().max_by_key(|m| hubset(&m.graph).len()).unwrap();
    let tree = find_width1_decomposition(&m.graph).unwrap();
    println!(
        "widest depth-2 member: hubs {:?}, root {}, tree edges {:?}",
        hubset(&m.graph),
        tree.bags[tree.root],
        tree.edges()
    );
    Ok(())
}
