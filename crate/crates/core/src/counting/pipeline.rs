//! End-to-end homomorphism and subgraph counting.

use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed};
use rayon::prelude::*;

use super::brute::brute_force_hom_capped;
use super::dp::{count_with_tree, no_width1};
use super::tally::big_one;
use crate::error::{Error, Result};
use crate::fraternal::{
    enumerate_pattern_extensions, optimal_extension, validate_fraternity, FraternalExtension,
    DEFAULT_EXTENSION_CAP,
};
use crate::graph::UndirectedGraph;
use crate::hub::{find_width1_decomposition, HubTree};
use crate::pattern::{connected_components, licl, min_extension_depth, spasm, LICL_LIMIT};
use crate::product::{label_pattern, pattern_product};

/// Largest product host on which debug builds re-check the host extension.
const VALIDATE_HOST_CAP: usize = 1 << 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountOptions {
    /// Extension depth; `None` picks the smallest depth the pattern's longest
    /// induced cycle allows.
    pub depth: Option<u32>,
    /// Worker threads for the per-extension counts. `1` runs serially, `0`
    /// uses rayon's default pool.
    pub threads: usize,
    /// Fall back to brute force instead of failing when some pattern
    /// extension has no width-1 decomposition.
    pub exact_fallback: bool,
    pub extension_cap: usize,
}

impl Default for CountOptions {
    fn default() -> Self {
        CountOptions {
            depth: None,
            threads: 1,
            exact_fallback: false,
            extension_cap: DEFAULT_EXTENSION_CAP,
        }
    }
}

/// Sizes and stage timings of one pipeline run, aggregated over the
/// pattern's connected components.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct CountStats {
    pub licl: usize,
    pub depth: u32,
    pub n_extensions: usize,
    /// Degeneracy of the product host.
    pub kappa: usize,
    /// Largest out-degree of the host extension.
    pub delta_plus: usize,
    pub product: Duration,
    pub host_extension: Duration,
    pub pattern_extensions: Duration,
    pub dp: Duration,
    pub used_fallback: bool,
}

impl CountStats {
    fn merge(&mut self, o: &CountStats) {
        self.licl = self.licl.max(o.licl);
        self.depth = self.depth.max(o.depth);
        self.n_extensions += o.n_extensions;
        self.kappa = self.kappa.max(o.kappa);
        self.delta_plus = self.delta_plus.max(o.delta_plus);
        self.product += o.product;
        self.host_extension += o.host_extension;
        self.pattern_extensions += o.pattern_extensions;
        self.dp += o.dp;
        self.used_fallback |= o.used_fallback;
    }
}

/// `Hom(g, h)`, the number of homomorphisms from `h` into `g`.
pub fn count_homomorphisms(
    g: &UndirectedGraph,
    h: &UndirectedGraph,
    opts: &CountOptions,
) -> Result<BigUint> {
    count_homomorphisms_with_stats(g, h, opts).map(|(c, _)| c)
}

pub fn count_homomorphisms_with_stats(
    g: &UndirectedGraph,
    h: &UndirectedGraph,
    opts: &CountOptions,
) -> Result<(BigUint, CountStats)> {
    let mut total = big_one();
    let mut stats = CountStats::default();
    for comp in connected_components(h) {
        if comp.len() == 1 {
            total *= BigUint::from(g.n());
            continue;
        }
        let (c, s) = count_connected(g, &h.induced(&comp), opts)?;
        total *= c;
        stats.merge(&s);
    }
    Ok((total, stats))
}

fn count_connected(
    g: &UndirectedGraph,
    h: &UndirectedGraph,
    opts: &CountOptions,
) -> Result<(BigUint, CountStats)> {
    if h.n() > LICL_LIMIT {
        return Err(Error::PatternTooLarge {
            n: h.n(),
            limit: LICL_LIMIT,
        });
    }
    let mut stats = CountStats {
        licl: licl(h),
        ..Default::default()
    };
    let t = opts.depth.unwrap_or_else(|| min_extension_depth(stats.licl));
    stats.depth = t;

    let clock = Instant::now();
    let members = enumerate_pattern_extensions(&label_pattern(h), t, opts.extension_cap)?;
    let mut jobs: Vec<(&FraternalExtension, HubTree)> = Vec::with_capacity(members.len());
    for m in &members {
        match find_width1_decomposition(&m.graph) {
            Some(tree) => jobs.push((m, tree)),
            None if opts.exact_fallback => {
                log::warn!(
                    "pattern extension has no width-1 decomposition at depth {t}; \
                     falling back to brute force"
                );
                stats.used_fallback = true;
                stats.pattern_extensions = clock.elapsed();
                let clock = Instant::now();
                let count = brute_force_hom_capped(g, h, usize::MAX)?;
                stats.dp = clock.elapsed();
                return Ok((count, stats));
            }
            None => return Err(no_width1(&m.graph, t)),
        }
    }
    stats.n_extensions = members.len();
    stats.pattern_extensions = clock.elapsed();

    let clock = Instant::now();
    let f = pattern_product(&label_pattern(h), g);
    stats.product = clock.elapsed();

    let clock = Instant::now();
    let host = optimal_extension(&f, t)?;
    stats.host_extension = clock.elapsed();
    let mut unit_out = vec![0usize; f.graph.n()];
    for a in host.layer(1) {
        unit_out[a.tail] += 1;
    }
    stats.kappa = unit_out.into_iter().max().unwrap_or(0);
    stats.delta_plus = host.graph.max_outdegree();
    debug_assert!(f.graph.n() > VALIDATE_HOST_CAP || validate_fraternity(&host));

    let clock = Instant::now();
    let run = |(m, tree): &(&FraternalExtension, HubTree)| count_with_tree(&m.graph, tree, &host.graph);
    let total: BigUint = match opts.threads {
        1 => jobs.iter().map(run).sum(),
        0 => jobs.par_iter().map(run).sum(),
        n => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::Io(std::io::Error::other(e)))?
            .install(|| jobs.par_iter().map(run).sum()),
    };
    stats.dp = clock.elapsed();
    Ok((total, stats))
}

/// `Sub(g, h)`, the number of (not necessarily induced) copies of `h` in
/// `g`, as the spasm combination of homomorphism counts. Each quotient is
/// counted at its own minimal depth; `opts.depth` is ignored.
pub fn count_subgraphs(
    g: &UndirectedGraph,
    h: &UndirectedGraph,
    opts: &CountOptions,
) -> Result<BigUint> {
    count_subgraphs_with_stats(g, h, opts).map(|(c, _, _)| c)
}

/// Like [`count_subgraphs`], also returning the spasm size and the stats
/// merged over all quotients.
pub fn count_subgraphs_with_stats(
    g: &UndirectedGraph,
    h: &UndirectedGraph,
    opts: &CountOptions,
) -> Result<(BigUint, usize, CountStats)> {
    let quotient_opts = CountOptions {
        depth: None,
        ..opts.clone()
    };
    let entries = spasm(h)?;
    let mut stats = CountStats::default();
    let mut sum = BigRational::from_integer(BigInt::from(0));
    for entry in &entries {
        let (hom, s) = count_homomorphisms_with_stats(g, &entry.quotient, &quotient_opts)?;
        stats.merge(&s);
        sum += &entry.coefficient * BigRational::from_integer(BigInt::from(hom));
    }
    if !sum.denom().is_one() || sum.is_negative() {
        return Err(Error::NonIntegralCount(sum.to_string()));
    }
    let count = sum
        .to_integer()
        .to_biguint()
        .expect("checked non-negative");
    Ok((count, entries.len(), stats))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    fn hom(g: &UndirectedGraph, h: &UndirectedGraph) -> BigUint {
        count_homomorphisms(g, h, &CountOptions::default()).unwrap()
    }

    #[test]
    fn known_homomorphism_counts() {
        let k3 = UndirectedGraph::complete(3);
        assert_eq!(hom(&k3, &k3), big(6));
        assert_eq!(hom(&k3, &UndirectedGraph::cycle(4)), big(18));
        let c5 = UndirectedGraph::cycle(5);
        assert_eq!(hom(&c5, &c5), big(10));
        let g = UndirectedGraph::from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (4, 5)]).unwrap();
        assert_eq!(hom(&g, &UndirectedGraph::path(2)), big(2 * 5));
    }

    #[test]
    fn components_multiply() {
        let g = UndirectedGraph::cycle(5);
        let two = UndirectedGraph::path(2).disjoint_union(&UndirectedGraph::path(3));
        assert_eq!(hom(&g, &two), big(10 * 20));
        let with_isolated = UndirectedGraph::path(2).disjoint_union(&UndirectedGraph::empty(1));
        assert_eq!(hom(&g, &with_isolated), big(10 * 5));
        assert_eq!(hom(&g, &UndirectedGraph::empty(0)), big(1));
    }

    #[test]
    fn six_cycle_at_depth_one_fails_without_fallback() {
        let g = UndirectedGraph::cycle(6);
        let h = UndirectedGraph::cycle(6);
        let opts = CountOptions {
            depth: Some(1),
            ..Default::default()
        };
        assert!(matches!(
            count_homomorphisms(&g, &h, &opts),
            Err(Error::NoWidth1Decomposition { depth: 1, .. })
        ));
        let opts = CountOptions {
            exact_fallback: true,
            ..opts
        };
        // Closed 6-walks on C_6: eigenvalues ±2 contribute 64 each, ±1 four more.
        assert_eq!(count_homomorphisms(&g, &h, &opts).unwrap(), big(132));
        assert_eq!(hom(&g, &h), big(132));
    }

    #[test]
    fn known_subgraph_counts() {
        let opts = CountOptions::default();
        let sub = |g: &UndirectedGraph, h: &UndirectedGraph| count_subgraphs(g, h, &opts).unwrap();
        assert_eq!(sub(&UndirectedGraph::star(3), &UndirectedGraph::path(3)), big(3));
        assert_eq!(sub(&UndirectedGraph::complete(3), &UndirectedGraph::complete(3)), big(1));
        assert_eq!(sub(&UndirectedGraph::cycle(6), &UndirectedGraph::path(2)), big(6));
        assert_eq!(sub(&UndirectedGraph::complete(4), &UndirectedGraph::complete(3)), big(4));
    }

    #[test]
    fn parallel_matches_serial() {
        let g = UndirectedGraph::from_edges(
            7,
            [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (4, 5), (5, 6), (6, 4), (3, 4)],
        )
        .unwrap();
        let h = UndirectedGraph::cycle(4);
        let serial = hom(&g, &h);
        for threads in [0, 2] {
            let opts = CountOptions {
                threads,
                ..Default::default()
            };
            let (c, stats) = count_homomorphisms_with_stats(&g, &h, &opts).unwrap();
            assert_eq!(c, serial);
            assert_eq!(stats.n_extensions, 14);
        }
    }
}
