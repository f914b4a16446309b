//! Counting engines: the tree DP over pattern extensions, the end-to-end
//! pipeline, and brute-force oracles.

mod brute;
mod dp;
mod pipeline;
mod tally;

pub use brute::{
    brute_force_hom, brute_force_hom_capped, brute_force_hom_wl, brute_force_hom_wl_capped,
    brute_force_sub, brute_force_sub_capped, HOM_HOST_CAP, HOM_WL_HOST_CAP, SUB_HOST_CAP,
};
pub use dp::{
    bressan_count, count_hom_extension, count_with_tree, enumerate_root_homs, CountDict, HomMap,
};
pub use pipeline::{
    count_homomorphisms, count_homomorphisms_with_stats, count_subgraphs,
    count_subgraphs_with_stats, CountOptions,
    CountStats,
};
pub use tally::Tally;
