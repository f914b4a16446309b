//! Exhaustive backtracking oracles.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::graph::{DirWLGraph, UndirectedGraph, VertexId};
use crate::pattern::automorphism_count;

pub const HOM_HOST_CAP: usize = 32;
pub const SUB_HOST_CAP: usize = 20;
/// Labeled hosts are products `k·n` large, but labels confine every pattern
/// vertex to one fiber, so a much larger cap stays cheap.
pub const HOM_WL_HOST_CAP: usize = 1024;

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::HostTooLarge { n, cap })
    } else {
        Ok(())
    }
}

/// Pattern vertices in BFS order, each paired with an earlier neighbor (if
/// any) whose image bounds its candidates.
fn search_order(h: &UndirectedGraph) -> Vec<(VertexId, Option<VertexId>)> {
    let mut seen = vec![false; h.n()];
    let mut order = Vec::with_capacity(h.n());
    for s in 0..h.n() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let start = order.len();
        order.push((s, None));
        let mut i = start;
        while i < order.len() {
            let v = order[i].0;
            i += 1;
            for &w in h.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    order.push((w, Some(v)));
                }
            }
        }
    }
    order
}

/// `Hom(g, h)`: maps `V(h) → V(g)` sending edges to edges, host capped at
/// [`HOM_HOST_CAP`] vertices.
pub fn brute_force_hom(g: &UndirectedGraph, h: &UndirectedGraph) -> Result<BigUint> {
    brute_force_hom_capped(g, h, HOM_HOST_CAP)
}

pub fn brute_force_hom_capped(
    g: &UndirectedGraph,
    h: &UndirectedGraph,
    cap: usize,
) -> Result<BigUint> {
    check_cap(g.n(), cap)?;
    Ok(BigUint::from(count_maps(g, h, false)))
}

/// `Sub(g, h)`: injective homomorphisms divided by `|Aut(h)|`, host capped at
/// [`SUB_HOST_CAP`] vertices.
pub fn brute_force_sub(g: &UndirectedGraph, h: &UndirectedGraph) -> Result<BigUint> {
    brute_force_sub_capped(g, h, SUB_HOST_CAP)
}

pub fn brute_force_sub_capped(
    g: &UndirectedGraph,
    h: &UndirectedGraph,
    cap: usize,
) -> Result<BigUint> {
    check_cap(g.n(), cap)?;
    let inj = count_maps(g, h, true);
    let aut = automorphism_count(h) as u128;
    debug_assert_eq!(inj % aut, 0);
    Ok(BigUint::from(inj / aut))
}

fn count_maps(g: &UndirectedGraph, h: &UndirectedGraph, injective: bool) -> u128 {
    let order = search_order(h);
    let mut image = vec![usize::MAX; h.n()];
    let mut used = vec![false; g.n()];
    let all: Vec<VertexId> = (0..g.n()).collect();

    #[allow(clippy::too_many_arguments)]
    fn go(
        g: &UndirectedGraph,
        h: &UndirectedGraph,
        order: &[(VertexId, Option<VertexId>)],
        i: usize,
        image: &mut [usize],
        used: &mut [bool],
        injective: bool,
        all: &[VertexId],
    ) -> u128 {
        let Some(&(v, anchor)) = order.get(i) else {
            return 1;
        };
        let candidates = match anchor {
            Some(a) => g.neighbors(image[a]),
            None => all,
        };
        let mut total = 0;
        for &x in candidates {
            if injective && used[x] {
                continue;
            }
            let ok = h
                .neighbors(v)
                .iter()
                .all(|&w| image[w] == usize::MAX || g.has_edge(image[w], x));
            if !ok {
                continue;
            }
            image[v] = x;
            used[x] = true;
            total += go(g, h, order, i + 1, image, used, injective, all);
            used[x] = false;
            image[v] = usize::MAX;
        }
        total
    }
    go(g, h, &order, 0, &mut image, &mut used, injective, &all)
}

/// Weighted, labeled homomorphisms `pattern → host`: equal labels, and every
/// pattern arc `(u,v)` maps to a host arc `(φu, φv)` with
/// `W_pattern(u,v) ≥ W_host(φu, φv)`. Host capped at [`HOM_WL_HOST_CAP`].
pub fn brute_force_hom_wl(host: &DirWLGraph, pattern: &DirWLGraph) -> Result<BigUint> {
    brute_force_hom_wl_capped(host, pattern, HOM_WL_HOST_CAP)
}

pub fn brute_force_hom_wl_capped(
    host: &DirWLGraph,
    pattern: &DirWLGraph,
    cap: usize,
) -> Result<BigUint> {
    check_cap(host.n(), cap)?;
    let order = search_order(&pattern.underlying());
    let mut image = vec![usize::MAX; pattern.n()];

    fn go(
        host: &DirWLGraph,
        p: &DirWLGraph,
        order: &[(VertexId, Option<VertexId>)],
        i: usize,
        image: &mut [usize],
    ) -> u128 {
        let Some(&(v, _)) = order.get(i) else {
            return 1;
        };
        let mut total = 0;
        for x in host.vertices_with_label(p.label(v)) {
            let outs_ok = p.out_neighbors(v).all(|(w, wt)| {
                image[w] == usize::MAX || host.arc_weight(x, image[w]).is_some_and(|hw| hw <= wt)
            });
            let ins_ok = p.in_neighbors(v).all(|(w, wt)| {
                image[w] == usize::MAX || host.arc_weight(image[w], x).is_some_and(|hw| hw <= wt)
            });
            if outs_ok && ins_ok {
                image[v] = x;
                total += go(host, p, order, i + 1, image);
                image[v] = usize::MAX;
            }
        }
        total
    }
    Ok(BigUint::from(go(host, pattern, &order, 0, &mut image)))
}
