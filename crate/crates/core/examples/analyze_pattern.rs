//! Static profile of a pattern: longest induced cycle, minimum depth, spasm
//! and how many fraternal extensions the counter will have to handle.

use sparsecount::fraternal::{enumerate_pattern_extensions, DEFAULT_EXTENSION_CAP};
use sparsecount::pattern::{automorphism_count, pattern_profile, spasm};
use sparsecount::product::label_pattern;
use sparsecount::{load_edge_list, UndirectedGraph};

fn main() -> sparsecount::Result<()> {
    let patterns: Vec<(String, UndirectedGraph)> = match std::env::args().nth(1) {
        Some(path) => vec![(path.clone(), load_edge_list(&path)?.graph)],
        None => vec![
            ("P4".into(), UndirectedGraph::path(4)),
            ("K4".into(), UndirectedGraph::complete(4)),
            ("C5".into(), UndirectedGraph::cycle(5)),
            ("C6".into(), UndirectedGraph::cycle(6)),
            ("C9".into(), UndirectedGraph::cycle(9)),
        ],
    };
    println!("{:<8} {:>4} {:>5} {:>5} {:>6} {:>6} {:>10}", "pattern", "licl", "t_min", "|Aut|", "spasm", "s.licl", "extensions");
    for (name, h) in patterns {
        let profile = pattern_profile(&h)?;
        let members = enumerate_pattern_extensions(&label_pattern(&h), profile.t_min, DEFAULT_EXTENSION_CAP)?;
        println!(
            "{:<8} {:>4} {:>5} {:>5} {:>6} {:>6} {:>10}",
            name,
            profile.licl,
            profile.t_min,
            automorphism_count(&h),
            spasm(&h)?.len(),
            profile.spasm_licl,
            members.len()
        );
    }
    Ok(())
}
