//! Exact homomorphism and subgraph counting for small patterns in large
//! sparse graphs.
//!
//! A pattern `H` is labeled and multiplied into the host `G`; the product is
//! given one canonical fraternal extension, while the pattern side enumerates
//! all of them. Each pattern extension gets a width-1 hub-tree decomposition,
//! and a dynamic program over that tree counts its weighted, labeled
//! homomorphisms into the host extension. The counts sum to `Hom(G, H)`.
//! Subgraph counts follow by combining homomorphism counts over the spasm.
//!
//! ```
//! use sparsecount::{count_homomorphisms, count_subgraphs, CountOptions, UndirectedGraph};
//!
//! let k4 = UndirectedGraph::complete(4);
//! let triangle = UndirectedGraph::complete(3);
//! let opts = CountOptions::default();
//! assert_eq!(count_homomorphisms(&k4, &triangle, &opts).unwrap(), 24u32.into());
//! assert_eq!(count_subgraphs(&k4, &triangle, &opts).unwrap(), 4u32.into());
//! ```

pub mod counting;
pub mod degeneracy;
pub mod error;
pub mod fraternal;
pub mod graph;
pub mod harness;
pub mod hub;
pub mod pattern;
pub mod product;

pub use counting::{
    brute_force_hom, brute_force_hom_wl, brute_force_sub, count_homomorphisms,
    count_homomorphisms_with_stats, count_subgraphs, CountOptions, CountStats,
};
pub use error::{Error, Result};
pub use graph::{load_edge_list, DirWLGraph, DirectedEdge, UndirectedGraph};
