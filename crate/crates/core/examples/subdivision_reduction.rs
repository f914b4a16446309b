//! Triangles of `G` become long cycles after subdividing every edge.
//!
//! With `t` internal vertices per edge each triangle turns into one cycle of
//! length `3(t+1)`. Doubling every edge into paths of `t+1` and `t+2` edges
//! gives three cycles of length `3(t+1)+1` per triangle.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sparsecount::counting::brute_force_sub_capped;
use sparsecount::harness::{count_triangles, generate_double_subdivision, generate_subdivision, gnp};
use sparsecount::{count_subgraphs, CountOptions, UndirectedGraph};

fn main() -> sparsecount::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..5 {
        let g = gnp(9, 0.4, rng.random());
        let tri = count_triangles(&g);
        let s1 = generate_subdivision(&g, 1)?;
        let via_pipeline = count_subgraphs(&s1, &UndirectedGraph::cycle(6), &CountOptions::default())?;
        let mut line = format!("n={} m={:>2} triangles={tri:>2} | t=1: C6={via_pipeline}", g.n(), g.m());
        for t in [2u32, 3] {
            let k = 3 * (t as usize + 1);
            let single = brute_force_sub_capped(&generate_subdivision(&g, t)?, &UndirectedGraph::cycle(k), usize::MAX)?;
            let double =
                brute_force_sub_capped(&generate_double_subdivision(&g, t)?, &UndirectedGraph::cycle(k + 1), usize::MAX)?;
            line += &format!(" | t={t}: C{k}={single} C{}={double}", k + 1);
        }
        println!("{line}");
    }
    Ok(())
}
