//! Command line, instance generators and run reports.

mod cli;
mod generators;
mod report;

pub use cli::run;
pub use generators::{
    count_triangles, generate_bounded_degeneracy, generate_double_subdivision,
    generate_subdivision, gnp, vertices_for_edges,
};
pub use report::{millis, RunReport, StageTimings};
