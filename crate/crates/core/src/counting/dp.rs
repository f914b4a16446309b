//! Root-homomorphism enumeration and the tree DP over a width-1 hub-tree
//! decomposition.

use num_bigint::BigUint;
use rustc_hash::FxHashMap;
use smallvec::SmallVec;

use super::tally::Tally;
use crate::error::{Error, Result};
use crate::fraternal::FraternalExtension;
use crate::graph::{write_wl_dump, DirWLGraph, Label, VertexId, Weight};
use crate::hub::{find_width1_decomposition, HubTree, ReachCache};

/// Partial map from pattern vertices to host vertices, sorted by pattern
/// vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HomMap {
    pub pairs: Vec<(VertexId, VertexId)>,
}

impl HomMap {
    pub fn get(&self, u: VertexId) -> Option<VertexId> {
        self.pairs
            .binary_search_by_key(&u, |&(p, _)| p)
            .ok()
            .map(|i| self.pairs[i].1)
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

type Key = SmallVec<[VertexId; 8]>;

/// DP table: host images of `domain` (in domain order) to a positive count.
///
/// A key lists the images of the sorted domain, which encodes the same
/// information as the sorted `(pattern, host)` pair list.
#[derive(Clone, Debug, Default)]
pub struct CountDict {
    domain: Vec<VertexId>,
    entries: FxHashMap<Key, Tally>,
}

impl CountDict {
    pub fn domain(&self) -> &[VertexId] {
        &self.domain
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Count stored for `phi`, zero when absent. `phi` must cover the domain.
    pub fn get(&self, phi: &HomMap) -> Tally {
        let key: Option<Key> = self.domain.iter().map(|&u| phi.get(u)).collect();
        key.and_then(|k| self.entries.get(&k).cloned())
            .unwrap_or_default()
    }

    pub fn total(&self) -> BigUint {
        self.entries.values().sum::<Tally>().into_biguint()
    }

    pub fn iter(&self) -> impl Iterator<Item = (HomMap, &Tally)> + '_ {
        self.entries.iter().map(|(k, v)| {
            let pairs = self.domain.iter().copied().zip(k.iter().copied()).collect();
            (HomMap { pairs }, v)
        })
    }
}

struct Check {
    other: usize,
    outgoing: bool,
    weight: Weight,
}

struct Step {
    vertex: usize,
    label: Label,
    anchor: Option<(usize, Weight)>,
    checks: Vec<Check>,
}

/// Enumeration plan for the homomorphisms of the pattern restricted to
/// `Reach(s)`: a breadth-first spanning out-tree from `s` (ties by id) fixes
/// the order, each later vertex is drawn from the out-neighbors of its tree
/// parent's image, and the remaining arcs are checked once both ends are set.
struct RootPlan {
    domain: Vec<VertexId>,
    steps: Vec<Step>,
}

impl RootPlan {
    fn new(pattern: &DirWLGraph, s: VertexId, domain: Vec<VertexId>) -> Self {
        let index = |v: VertexId| domain.binary_search(&v).expect("domain is reach-closed");
        let mut placed = vec![false; domain.len()];
        let mut anchor = vec![None; domain.len()];
        let mut order = vec![index(s)];
        placed[index(s)] = true;
        let mut i = 0;
        while i < order.len() {
            let v = domain[order[i]];
            i += 1;
            for (w, wt) in pattern.out_neighbors(v) {
                let j = index(w);
                if !placed[j] {
                    placed[j] = true;
                    anchor[j] = Some((index(v), wt));
                    order.push(j);
                }
            }
        }
        assert_eq!(order.len(), domain.len(), "domain must equal Reach(s)");

        let mut position = vec![0; domain.len()];
        for (p, &j) in order.iter().enumerate() {
            position[j] = p;
        }
        let steps = order
            .iter()
            .map(|&j| {
                let v = domain[j];
                let mut checks = Vec::new();
                for (w, wt) in pattern.out_neighbors(v) {
                    let o = index(w);
                    if position[o] < position[j] {
                        checks.push(Check { other: o, outgoing: true, weight: wt });
                    }
                }
                for (w, wt) in pattern.in_neighbors(v) {
                    let Ok(o) = domain.binary_search(&w) else { continue };
                    if position[o] < position[j] && anchor[j] != Some((o, wt)) {
                        checks.push(Check { other: o, outgoing: false, weight: wt });
                    }
                }
                Step {
                    vertex: j,
                    label: pattern.label(v),
                    anchor: anchor[j],
                    checks,
                }
            })
            .collect();
        RootPlan { domain, steps }
    }

    /// Calls `f` with the host image of every domain vertex (domain order)
    /// for each homomorphism.
    fn for_each<F: FnMut(&[VertexId])>(&self, host: &DirWLGraph, f: &mut F) {
        let mut images = vec![usize::MAX; self.domain.len()];
        let first = &self.steps[0];
        for x in host.vertices_with_label(first.label) {
            images[first.vertex] = x;
            self.extend(host, 1, &mut images, f);
        }
    }

    fn extend<F: FnMut(&[VertexId])>(
        &self,
        host: &DirWLGraph,
        i: usize,
        images: &mut [VertexId],
        f: &mut F,
    ) {
        let Some(step) = self.steps.get(i) else {
            f(images);
            return;
        };
        let (parent, max_w) = step.anchor.expect("non-root steps have a tree parent");
        for a in host.out_arcs(images[parent]) {
            if a.weight > max_w || a.label != step.label {
                continue;
            }
            let y = a.head;
            let ok = step.checks.iter().all(|c| {
                let other = images[c.other];
                let hw = if c.outgoing {
                    host.arc_weight(y, other)
                } else {
                    host.arc_weight(other, y)
                };
                hw.is_some_and(|hw| hw <= c.weight)
            });
            if ok {
                images[step.vertex] = y;
                self.extend(host, i + 1, images, f);
            }
        }
    }
}

/// All homomorphisms from the pattern restricted to `Reach(s)` into `host`
/// that respect labels, arcs, and weight dominance (pattern weight ≥ host
/// weight on every mapped arc).
pub fn enumerate_root_homs(pattern: &DirWLGraph, s: VertexId, host: &DirWLGraph) -> Vec<HomMap> {
    let cache = ReachCache::new(pattern);
    let plan = RootPlan::new(pattern, s, cache.of(s).iter().copied().collect());
    let mut out = Vec::new();
    plan.for_each(host, &mut |images| {
        out.push(HomMap {
            pairs: plan.domain.iter().copied().zip(images.iter().copied()).collect(),
        });
    });
    out.sort();
    out
}

/// Counts keyed by the host images of a few pattern vertices.
enum Table {
    /// A single key vertex: counts indexed by its image.
    Dense(Vec<Tally>),
    /// Images packed `bits` apiece into one integer.
    Packed { bits: u32, map: FxHashMap<u128, Tally> },
    Wide(FxHashMap<Key, Tally>),
}

impl Table {
    fn new(len: usize, host_n: usize) -> Self {
        let bits = (usize::BITS - host_n.saturating_sub(1).leading_zeros()).max(1);
        if len == 1 {
            Table::Dense(vec![Tally::zero(); host_n])
        } else if len as u32 * bits <= 128 {
            Table::Packed {
                bits,
                map: FxHashMap::default(),
            }
        } else {
            Table::Wide(FxHashMap::default())
        }
    }

    fn pack(bits: u32, images: &[VertexId], positions: &[usize]) -> u128 {
        positions
            .iter()
            .fold(0u128, |k, &p| k << bits | images[p] as u128)
    }

    fn add(&mut self, images: &[VertexId], positions: &[usize], v: &Tally) {
        match self {
            Table::Dense(cells) => cells[images[positions[0]]].add_assign(v),
            Table::Packed { bits, map } => map
                .entry(Self::pack(*bits, images, positions))
                .or_default()
                .add_assign(v),
            Table::Wide(map) => map
                .entry(positions.iter().map(|&p| images[p]).collect())
                .or_default()
                .add_assign(v),
        }
    }

    fn get(&self, images: &[VertexId], positions: &[usize]) -> Option<&Tally> {
        let t = match self {
            Table::Dense(cells) => &cells[images[positions[0]]],
            Table::Packed { bits, map } => map.get(&Self::pack(*bits, images, positions))?,
            Table::Wide(map) => {
                let key: Key = positions.iter().map(|&p| images[p]).collect();
                map.get(&key)?
            }
        };
        (!t.is_zero()).then_some(t)
    }
}

/// A child's counts summed by restriction to the shared domain
/// `Reach(bag) ∩ Reach(down(child))`.
struct Aggregate {
    /// Positions of the shared domain inside the parent bag's domain.
    parent_pos: Vec<usize>,
    table: Table,
}

fn product(aggs: &[Aggregate], images: &[VertexId]) -> Option<Tally> {
    let mut acc = Tally::one();
    for a in aggs {
        acc = acc.mul(a.table.get(images, &a.parent_pos)?);
    }
    Some(acc)
}

/// Enumerates the root homomorphisms of `bag` and calls `f` with each one
/// and the number of ways it extends into every child subtree (zero-count
/// homomorphisms are skipped). Returns the bag's domain.
fn run_bag(
    pattern: &DirWLGraph,
    tree: &HubTree,
    bag: usize,
    host: &DirWLGraph,
    cache: &ReachCache,
    f: &mut dyn FnMut(&[VertexId], Tally),
) -> Vec<VertexId> {
    let s = tree.bags[bag];
    let own = cache.of(s);
    let domain: Vec<VertexId> = own.iter().copied().collect();
    let aggs: Vec<Aggregate> = tree
        .children(bag)
        .into_iter()
        .map(|c| {
            let child_domain: Vec<VertexId> = cache.of(tree.bags[c]).iter().copied().collect();
            let below = cache.of_all(tree.down(c).into_iter().map(|b| tree.bags[b]));
            let shared: Vec<VertexId> = own.intersection(&below).copied().collect();
            let child_pos: Vec<usize> = shared
                .iter()
                .map(|v| {
                    child_domain
                        .binary_search(v)
                        .expect("shared domain lies inside the child's reach")
                })
                .collect();
            let mut table = Table::new(shared.len(), host.n());
            run_bag(pattern, tree, c, host, cache, &mut |images, v| {
                table.add(images, &child_pos, &v)
            });
            Aggregate {
                parent_pos: shared.iter().map(|v| domain.binary_search(v).unwrap()).collect(),
                table,
            }
        })
        .collect();
    let plan = RootPlan::new(pattern, s, domain);
    plan.for_each(host, &mut |images| {
        if let Some(v) = product(&aggs, images) {
            f(images, v);
        }
    });
    plan.domain
}

/// Table for bag `bag`: every homomorphism of the pattern restricted to the
/// bag's reach, mapped to the number of ways it extends to the whole
/// subtree below the bag.
pub fn bressan_count(pattern: &DirWLGraph, tree: &HubTree, bag: usize, host: &DirWLGraph) -> CountDict {
    let cache = ReachCache::new(pattern);
    let mut entries = FxHashMap::default();
    let domain = run_bag(pattern, tree, bag, host, &cache, &mut |images, v| {
        entries.insert(Key::from_slice(images), v);
    });
    debug_assert!({
        let k = domain.len() as u32;
        let bound = (host.n() as u128)
            .saturating_mul((host.max_outdegree() as u128).saturating_pow(k - 1));
        entries.len() as u128 <= bound
    });
    CountDict { domain, entries }
}

/// Weighted, labeled homomorphism count of `pattern` into `host` via a
/// width-1 decomposition. Child tables are kept only in aggregated form and
/// the root table is summed on the fly.
pub fn count_with_tree(pattern: &DirWLGraph, tree: &HubTree, host: &DirWLGraph) -> BigUint {
    let cache = ReachCache::new(pattern);
    let mut total = Tally::zero();
    run_bag(pattern, tree, tree.root, host, &cache, &mut |_, v| total.add_assign(&v));
    total.into_biguint()
}

/// Homomorphisms from one pattern extension into the host extension.
pub fn count_hom_extension(
    pattern_ext: &FraternalExtension,
    host_ext: &FraternalExtension,
) -> Result<BigUint> {
    let tree = find_width1_decomposition(&pattern_ext.graph)
        .ok_or_else(|| no_width1(&pattern_ext.graph, pattern_ext.depth))?;
    Ok(count_with_tree(&pattern_ext.graph, &tree, &host_ext.graph))
}

pub(crate) fn no_width1(pattern: &DirWLGraph, depth: u32) -> Error {
    let base: Vec<String> = pattern
        .arcs()
        .filter(|a| a.weight == 1)
        .map(|a| format!("{}-{}", a.tail.min(a.head), a.tail.max(a.head)))
        .collect();
    Error::NoWidth1Decomposition {
        pattern: base.join(" "),
        depth,
        extension: write_wl_dump(pattern),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::DirectedEdge;

    fn arc(u: usize, v: usize, w: Weight) -> DirectedEdge {
        DirectedEdge::new(u, v, w)
    }

    fn unlabeled(n: usize, arcs: Vec<DirectedEdge>) -> DirWLGraph {
        DirWLGraph::unlabeled(n, arcs).unwrap()
    }

    #[test]
    fn root_hom_examples() {
        let host = DirWLGraph::new(vec![5, 6, 5, 5], vec![]).unwrap();
        let single = DirWLGraph::new(vec![5], vec![]).unwrap();
        assert_eq!(enumerate_root_homs(&single, 0, &host).len(), 3);

        let tri = unlabeled(3, vec![arc(0, 1, 1), arc(1, 2, 1), arc(2, 0, 1)]);
        let edge = unlabeled(2, vec![arc(0, 1, 1)]);
        let homs = enumerate_root_homs(&edge, 0, &tri);
        assert_eq!(homs.len(), 3);
        assert_eq!(homs[0].pairs, vec![(0, 0), (1, 1)]);

        let heavy_host = unlabeled(2, vec![arc(0, 1, 3)]);
        let light = unlabeled(2, vec![arc(0, 1, 2)]);
        assert!(enumerate_root_homs(&light, 0, &heavy_host).is_empty());
        let heavier = unlabeled(2, vec![arc(0, 1, 4)]);
        assert_eq!(enumerate_root_homs(&heavier, 0, &heavy_host).len(), 1);
    }

    #[test]
    fn root_homs_respect_non_tree_arcs() {
        // 0→1, 0→2, 1→2: the arc 1→2 is checked after both are placed.
        let p = unlabeled(3, vec![arc(0, 1, 1), arc(0, 2, 1), arc(1, 2, 1)]);
        let host = unlabeled(4, vec![arc(0, 1, 1), arc(0, 2, 1), arc(0, 3, 1), arc(1, 2, 1)]);
        let homs = enumerate_root_homs(&p, 0, &host);
        assert_eq!(homs.len(), 1);
        assert_eq!(homs[0].pairs, vec![(0, 0), (1, 1), (2, 2)]);
    }

    #[test]
    fn single_bag_table() {
        let p = unlabeled(2, vec![arc(0, 1, 1)]);
        let host = unlabeled(3, vec![arc(0, 1, 1), arc(0, 2, 1), arc(1, 2, 1)]);
        let tree = HubTree { bags: vec![0], parent: vec![None], root: 0 };
        let dict = bressan_count(&p, &tree, 0, &host);
        assert_eq!(dict.len(), 3);
        assert!(dict.iter().all(|(_, v)| *v == Tally::one()));
        assert_eq!(dict.total(), BigUint::from(3u32));
    }

    #[test]
    fn in_in_wedge_on_labeled_instance() {
        let labels = vec![0, 1, 2];
        let p = DirWLGraph::new(labels.clone(), vec![arc(0, 1, 1), arc(2, 1, 1)]).unwrap();
        let host = DirWLGraph::new(labels, vec![arc(0, 1, 1), arc(2, 1, 1)]).unwrap();
        let tree = find_width1_decomposition(&p).unwrap();
        assert_eq!(count_with_tree(&p, &tree, &host), BigUint::from(1u32));
    }

    #[test]
    fn disjoint_children_multiply_totals() {
        // Root 0 reaches {0, 1}; hubs 2 and 4 share nothing with it.
        let p = unlabeled(6, vec![arc(0, 1, 1), arc(2, 3, 1), arc(4, 5, 1)]);
        let tree = HubTree {
            bags: vec![0, 2, 4],
            parent: vec![None, Some(0), Some(0)],
            root: 0,
        };
        let host = unlabeled(4, vec![arc(0, 1, 1), arc(1, 2, 1), arc(0, 3, 1)]);
        let dict = bressan_count(&p, &tree, 0, &host);
        assert_eq!(dict.len(), 3);
        assert!(dict.iter().all(|(_, v)| *v == Tally::Small(9)));
        assert_eq!(count_with_tree(&p, &tree, &host), BigUint::from(27u32));
    }

    #[test]
    fn dictionary_lookup_by_map() {
        let p = unlabeled(3, vec![arc(0, 1, 1), arc(2, 1, 1)]);
        let host = unlabeled(3, vec![arc(0, 1, 1), arc(2, 1, 1)]);
        let tree = find_width1_decomposition(&p).unwrap();
        let dict = bressan_count(&p, &tree, tree.root, &host);
        let phi = HomMap { pairs: dict.iter().next().unwrap().0.pairs };
        assert!(!dict.get(&phi).is_zero());
        assert!(dict.get(&HomMap { pairs: vec![(0, 2), (1, 0)] }).is_zero());
    }
}
