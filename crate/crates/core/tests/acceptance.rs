//! One line per acceptance criterion; exits non-zero if any fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::*;
use num_bigint::BigUint;
use rand::Rng;
use sparsecount::counting::brute_force_sub_capped;
use sparsecount::fraternal::{
    enumerate_pattern_extensions, optimal_extension, optimal_extension_of, validate_fraternity,
    DEFAULT_EXTENSION_CAP,
};
use sparsecount::graph::TRIVIAL_LABEL;
use sparsecount::harness::{
    count_triangles, generate_bounded_degeneracy, generate_double_subdivision,
    generate_subdivision, gnp, vertices_for_edges,
};
use sparsecount::hub::{find_width1_decomposition, validate_decomposition};
use sparsecount::pattern::{licl, min_extension_depth};
use sparsecount::product::{label_pattern, pattern_product};
use sparsecount::*;

type Outcome = std::result::Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn hom(g: &UndirectedGraph, h: &UndirectedGraph) -> BigUint {
    count_homomorphisms(g, h, &CountOptions::default()).unwrap()
}

fn criterion_1() -> Outcome {
    let mut rng = rng(101);
    let patterns = connected_graphs();
    let mut checked = 0;
    for i in 0..300 {
        let h = &patterns[i % patterns.len()];
        ensure((licl(h) as u32) < 3 * (min_extension_depth(licl(h)) + 1), || "licl bound".into())?;
        let n = rng.random_range(1..=20);
        let g = if i % 2 == 0 {
            generate_bounded_degeneracy(n, rng.random_range(1..=3), rng.random())
        } else {
            gnp(n, rng.random_range(0.1..0.5), rng.random())
        };
        let (fast, slow) = (hom(&g, h), brute_force_hom(&g, h).unwrap());
        ensure(fast == slow, || format!("pair {i}: pipeline {fast} != brute force {slow}"))?;
        checked += 1;
    }
    Ok(format!("{checked}/300 pairs exact, all 143 connected patterns with k <= 6"))
}

fn criterion_2() -> Outcome {
    let mut rng = rng(102);
    let patterns: Vec<_> = connected_graphs().iter().filter(|h| h.n() >= 2).collect();
    let mut checks = 0;
    for i in 0..50 {
        let h = patterns[rng.random_range(0..patterns.len())];
        let g = random_host(&mut rng, 8);
        let expected = brute_force_hom(&g, h).unwrap();
        let f = pattern_product(&label_pattern(h), &g);
        for t in min_extension_depth(licl(h))..=3 {
            let host = optimal_extension(&f, t).unwrap();
            let members = enumerate_pattern_extensions(&label_pattern(h), t, DEFAULT_EXTENSION_CAP).unwrap();
            let total: BigUint = members
                .iter()
                .map(|m| brute_force_hom_wl(&host.graph, &m.graph).unwrap())
                .sum();
            ensure(total == expected, || format!("instance {i}, t = {t}: {total} != {expected}"))?;
            checks += 1;
        }
    }
    Ok(format!("50 instances, {checks} (instance, t) sums equal Hom(G, H)"))
}

fn criterion_3() -> Outcome {
    let mut rng = rng(103);
    let patterns = connected_graphs();
    for i in 0..100 {
        let h = &patterns[rng.random_range(1..patterns.len())];
        let g = random_host(&mut rng, 16);
        let fast = count_subgraphs(&g, h, &CountOptions::default()).map_err(|e| format!("instance {i}: {e}"))?;
        let slow = brute_force_sub(&g, h).unwrap();
        ensure(fast == slow, || format!("instance {i}: pipeline {fast} != brute force {slow}"))?;
    }
    Ok("100/100 instances exact, every spasm sum integral".into())
}

fn criterion_4() -> Outcome {
    let mut members_checked = 0;
    for (i, h) in connected_graphs().iter().enumerate() {
        let t = min_extension_depth(licl(h));
        for m in enumerate_pattern_extensions(&label_pattern(h), t, DEFAULT_EXTENSION_CAP).unwrap() {
            let tree = find_width1_decomposition(&m.graph)
                .ok_or_else(|| format!("pattern #{i}: extension without decomposition"))?;
            ensure(validate_decomposition(&m.graph, &tree), || format!("pattern #{i}: invalid tree"))?;
            members_checked += 1;
        }
    }
    let hexagon = DirWLGraph::unlabeled(
        6,
        [(0, 1), (0, 5), (2, 1), (2, 3), (4, 3), (4, 5)]
            .map(|(u, v)| DirectedEdge::new(u, v, 1))
            .to_vec(),
    )
    .unwrap();
    ensure(find_width1_decomposition(&hexagon).is_none(), || "alternating hexagon decomposed".into())?;
    Ok(format!("{members_checked} extensions over 143 patterns decompose; alternating hexagon has none"))
}

fn criterion_5() -> Outcome {
    let mut rng = rng(105);
    for i in 0..100 {
        let g = if i % 2 == 0 {
            generate_bounded_degeneracy(rng.random_range(10..300), rng.random_range(1..=4), rng.random())
        } else {
            gnp(rng.random_range(5..60), rng.random_range(0.05..0.3), rng.random())
        };
        for t in [2, 3] {
            let ext = optimal_extension_of(&g, vec![TRIVIAL_LABEL; g.n()], t).unwrap();
            ensure(validate_fraternity(&ext), || format!("host {i}, t = {t}"))?;
        }
    }
    let mut members = 0;
    for (i, h) in connected_graphs().iter().enumerate() {
        for t in 1..=3 {
            for m in enumerate_pattern_extensions(&label_pattern(h), t, DEFAULT_EXTENSION_CAP).unwrap() {
                ensure(validate_fraternity(&m), || format!("pattern #{i}, t = {t}"))?;
                members += 1;
            }
        }
    }
    Ok(format!("200 host extensions and {members} pattern extensions (t = 1..3) valid"))
}

fn criterion_6() -> Outcome {
    let mut rng = rng(106);
    let mut triangles = 0;
    for i in 0..30 {
        let g = gnp(rng.random_range(3..=12), rng.random_range(0.2..0.6), rng.random());
        let tri = BigUint::from(count_triangles(&g));
        triangles += count_triangles(&g);
        for t in [2u32, 3] {
            let k = 3 * (t as usize + 1);
            let single = brute_force_sub_capped(&generate_subdivision(&g, t).unwrap(), &UndirectedGraph::cycle(k), usize::MAX)
                .unwrap();
            ensure(single == tri, || format!("graph {i}, t = {t}: {single} cycles, {tri} triangles"))?;
            let double =
                brute_force_sub_capped(&generate_double_subdivision(&g, t).unwrap(), &UndirectedGraph::cycle(k + 1), usize::MAX)
                    .unwrap();
            ensure(double == BigUint::from(3u32) * &tri, || {
                format!("graph {i}, t = {t}: {double} cycles, 3 x {tri} expected")
            })?;
        }
    }
    Ok(format!("30 graphs ({triangles} triangles) match for t = 2, 3"))
}

fn criterion_7() -> Outcome {
    let k3 = UndirectedGraph::complete(3);
    let cases = [
        ("Hom(K3,K3)", hom(&k3, &k3), 6u32),
        ("Hom(K3,C4)", hom(&k3, &UndirectedGraph::cycle(4)), 18),
        ("Hom(C5,C5)", hom(&UndirectedGraph::cycle(5), &UndirectedGraph::cycle(5)), 10),
        (
            "Sub(K4,K3)",
            count_subgraphs(&UndirectedGraph::complete(4), &k3, &CountOptions::default()).unwrap(),
            4,
        ),
    ];
    for (name, got, want) in &cases {
        ensure(*got == BigUint::from(*want), || format!("{name} = {got}, expected {want}"))?;
    }
    Ok(cases.map(|(n, g, _)| format!("{n}={g}")).join(" "))
}

fn criterion_8() -> Outcome {
    let c5 = UndirectedGraph::cycle(5);
    let opts = CountOptions {
        depth: Some(1),
        ..Default::default()
    };
    let mut times = Vec::new();
    let clock = Instant::now();
    for m in [100_000, 200_000, 400_000] {
        let g = generate_bounded_degeneracy(vertices_for_edges(m, 3), 3, 8);
        let mut best = Duration::MAX;
        for _ in 0..2 {
            let start = Instant::now();
            let c = count_homomorphisms(&g, &c5, &opts).unwrap();
            best = best.min(start.elapsed());
            ensure(c > BigUint::from(0u32), || "no closed 5-walks".into())?;
        }
        times.push(best.as_secs_f64());
    }
    let ratios: Vec<f64> = times.windows(2).map(|w| w[1] / w[0]).collect();
    let total = clock.elapsed().as_secs_f64();
    let summary = format!(
        "times {:.3}s {:.3}s {:.3}s, doubling ratios {:.2} {:.2}, total {total:.1}s",
        times[0], times[1], times[2], ratios[0], ratios[1]
    );
    ensure(ratios.iter().all(|&r| r <= 3.0) && total < 120.0, || summary.clone())?;
    Ok(summary)
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 8] = [
        ("oracle equivalence (homomorphisms)", criterion_1),
        ("partition identity over extensions", criterion_2),
        ("spasm / subgraph identity", criterion_3),
        ("width-1 decompositions exist", criterion_4),
        ("fraternity validity", criterion_5),
        ("subdivision reduction correspondence", criterion_6),
        ("known values", criterion_7),
        ("near-linear scaling", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("[PASS] criterion {} {name}: {detail} ({secs:.1}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] criterion {} {name}: {detail} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
