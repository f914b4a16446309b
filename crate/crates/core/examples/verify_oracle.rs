//! Cross-checks the pipeline against brute force on seeded random instances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sparsecount::harness::{generate_bounded_degeneracy, gnp};
use sparsecount::{brute_force_hom, brute_force_sub, count_homomorphisms, count_subgraphs, CountOptions, UndirectedGraph};

fn main() -> sparsecount::Result<()> {
    let patterns = [
        ("P3", UndirectedGraph::path(3)),
        ("K3", UndirectedGraph::complete(3)),
        ("C4", UndirectedGraph::cycle(4)),
        ("K4", UndirectedGraph::complete(4)),
        ("C5", UndirectedGraph::cycle(5)),
        ("C6", UndirectedGraph::cycle(6)),
        ("K1,3", UndirectedGraph::star(3)),
    ];
    let opts = CountOptions::default();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut mismatches = 0;
    for round in 0..40 {
        let n = rng.random_range(4..=14);
        let g = if round % 2 == 0 {
            generate_bounded_degeneracy(n, rng.random_range(1..=3), rng.random())
        } else {
            gnp(n, 0.35, rng.random())
        };
        let (name, h) = &patterns[round % patterns.len()];
        let (hom, hom_bf) = (count_homomorphisms(&g, h, &opts)?, brute_force_hom(&g, h)?);
        let (sub, sub_bf) = (count_subgraphs(&g, h, &opts)?, brute_force_sub(&g, h)?);
        let ok = hom == hom_bf && sub == sub_bf;
        mismatches += usize::from(!ok);
        println!("{round:>2} {name:<5} n={n:>2} m={:>2}  Hom {hom:>7}  Sub {sub:>5}  {}", g.m(), if ok { "ok" } else { "MISMATCH" });
    }
    println!("{mismatches} mismatches");
    std::process::exit(i32::from(mismatches > 0));
}
